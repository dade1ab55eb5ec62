// Python bindings. Everything crosses the boundary as ints, strings and JSON
// text; the package wrapper turns the JSON into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skewcyc/oracle.hpp"
#include "skewcyc/text.hpp"

namespace py = pybind11;
using namespace skewcyc;

namespace {

SkewCyclicCode code_of(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    return code_from_json(j);
}

std::string code_json(const SkewCyclicCode& c) {
    auto j = code_to_json(c);
    j["log_q_size"] = c.log_q_size();
    j["generator"] = to_string(c.generator());
    return j.dump();
}

std::string factor(int n, const std::string& field_text, int i) {
    const auto f = parse_field(field_text);
    const auto aut = f->aut(i);
    const auto fac = factor_xn_minus_1(n, f, aut);
    nlohmann::json j;
    j["n"] = n;
    j["factors"] = nlohmann::json::array();
    for (const auto& [p, s] : fac.factors) j["factors"].push_back({{"factor", to_string(p)}, {"multiplicity", s}});
    const auto c = count_skew_cyclic_codes(n, f, aut);
    j["over_fq"] = c.over_fq;
    j["over_r"] = c.over_r;
    return j.dump();
}

std::string build(int n, const std::string& g1, const std::string& g2, const std::string& g3,
                  const std::string& field_text, int i) {
    const auto f = parse_field(field_text);
    const auto aut = f->aut(i);
    return code_json(SkewCyclicCode::from_generators(n, parse_fq_poly(g1, f, aut), parse_fq_poly(g2, f, aut),
                                                     parse_fq_poly(g3, f, aut)));
}

std::optional<int> code_lee_distance(const std::string& code, std::uint64_t bound) {
    const auto d = min_lee_distance(code_of(code), bound);
    if (d.degenerate) return std::nullopt;
    return d.distance;
}

std::string census_json(int n, const std::string& field_text, int i, std::uint64_t max_codes) {
    const auto f = parse_field(field_text);
    auto out = nlohmann::json::array();
    for (const auto& c : census(n, f, f->aut(i), max_codes)) out.push_back(nlohmann::json::parse(code_json(c)));
    return out.dump();
}

std::string verify(const std::string& matrix_text, bool inject_broken, bool controls) {
    std::vector<TestMatrixEntry> matrix;
    if (matrix_text.empty()) {
        matrix = default_matrix();
    } else {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(matrix_text);
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::ParseError, e.what());
        }
        if (!j.is_array()) throw Error(ErrorKind::ParseError, "matrix must be a JSON array");
        for (const auto& e : j) matrix.push_back(TestMatrixEntry::from_json(e));
    }
    auto out = nlohmann::json::array();
    for (const auto& r : verify_all(matrix, inject_broken)) out.push_back(r.to_json());
    if (controls)
        for (const auto& e : matrix)
            for (const auto& r : negative_controls(e)) {
                auto j = r.to_json();
                j["control"] = true;
                out.push_back(j);
            }
    return out.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Skew cyclic codes over F_q + vF_q + v^2F_q, v^3 = v";

    static py::exception<Error> error(m, "SkewcycError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(error.ptr(), e.what());
        }
    });

    m.def("field_order", [](const std::string& field) { return parse_field(field)->order(); });
    m.def("factor", &factor, py::arg("n"), py::arg("field"), py::arg("aut"));
    m.def("build", &build, py::arg("n"), py::arg("g1"), py::arg("g2"), py::arg("g3"), py::arg("field"),
          py::arg("aut"));
    m.def("dual", [](const std::string& code) { return code_json(code_of(code).dual()); });
    m.def("is_self_dual", [](const std::string& code) { return code_of(code).is_self_dual(); });
    m.def("contains", [](const std::string& code, const std::string& word) {
        const auto c = code_of(code);
        return c.contains(parse_r_vector(word, *c.field()));
    });
    m.def("gray", [](const std::string& word, const std::string& field) {
        const auto f = parse_field(field);
        return to_string(gray_map(parse_r_vector(word, *f)));
    });
    m.def("lee_distance", &code_lee_distance, py::arg("code"), py::arg("bound"));
    m.def("census", &census_json, py::arg("n"), py::arg("field"), py::arg("aut"), py::arg("max_codes"));
    m.def("verify", &verify, py::arg("matrix"), py::arg("inject_broken"), py::arg("controls"));
}
