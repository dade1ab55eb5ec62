// Command-line front end for the skewcyc library.
//
//   skewcyc_cli --field p=3,m=2,mod=1,0,1 --aut 1 --n 5 factor
//   skewcyc_cli --n 5 code build --g1 "x-1" --g2 1 --g3 1
//   skewcyc_cli verify --inject-broken
//
// Exit status: 0 ok, 1 a verification verdict failed, 2 bad input or a
// violated precondition.

#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "skewcyc/oracle.hpp"
#include "skewcyc/text.hpp"

using namespace skewcyc;
using nlohmann::json;

namespace {

struct Options {
    std::string field = "p=3,m=2,mod=1,0,1";
    int aut = 1;
    int n = 1;
    std::string format = "table";
    std::uint64_t seed = 0;
    std::uint64_t bound = kDefaultCodewordBound;

    std::string g, g1, g2, g3;
    std::string code_file;
    std::string word;
    std::string matrix_file;
    bool inject_broken = false;
    bool controls = false;
    bool explicit_config = false;
    std::uint64_t max_rows = 10'000;
};

bool as_json(const Options& o) { return o.format == "json"; }

void emit(const Options& o, const json& j, const std::vector<std::pair<std::string, std::string>>& table) {
    if (as_json(o)) {
        std::cout << j.dump() << "\n";
        return;
    }
    std::size_t w = 0;
    for (const auto& [k, v] : table) w = std::max(w, k.size());
    for (const auto& [k, v] : table) std::cout << k << std::string(w - k.size() + 2, ' ') << v << "\n";
}

FieldPtr field_of(const Options& o) { return parse_field(o.field); }

SkewCyclicCode code_of(const Options& o) {
    if (!o.code_file.empty()) {
        std::ifstream in(o.code_file);
        if (!in) throw Error(ErrorKind::ParseError, "cannot open " + o.code_file);
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw Error(ErrorKind::ParseError, std::string("bad JSON in ") + o.code_file + ": " + e.what());
        }
        return code_from_json(j);
    }
    const FieldPtr field = field_of(o);
    const AutExponent aut = field->aut(o.aut);
    const bool triple = !o.g1.empty() || !o.g2.empty() || !o.g3.empty();
    if (triple == !o.g.empty())
        throw Error(ErrorKind::ParseError, "give either --g (over R) or all of --g1 --g2 --g3, or --code");
    if (!triple) return SkewCyclicCode::from_combined(o.n, parse_r_poly(o.g, field, aut));
    if (o.g1.empty() || o.g2.empty() || o.g3.empty())
        throw Error(ErrorKind::ParseError, "--g1, --g2 and --g3 must all be given");
    return SkewCyclicCode::from_generators(o.n, parse_fq_poly(o.g1, field, aut), parse_fq_poly(o.g2, field, aut),
                                           parse_fq_poly(o.g3, field, aut));
}

json code_block(const SkewCyclicCode& c) {
    json j = code_to_json(c);
    j["generator"] = to_string(c.generator());
    j["log_q_size"] = c.log_q_size();
    j["size"] = power_string(c.field()->order(), c.log_q_size());
    return j;
}

std::string distance_text(const DistanceResult& d) { return d.degenerate ? "- (zero code)" : std::to_string(d.distance); }

std::string matrix_text(const std::vector<std::string>& rows) {
    std::string s;
    for (const auto& r : rows) s += "\n  " + r;
    return s;
}

// ---------------------------------------------------------------------------

int cmd_field_check(const Options& o) {
    const FieldPtr f = field_of(o);
    const AutExponent aut = f->aut(o.aut);
    json j{{"field", field_to_json(*f)}, {"q", f->order()}, {"aut", aut.value()}, {"order", aut.order()},
           {"fixed_subfield_size", f->fixed_subfield(aut).size()}};
    emit(o, j,
         {{"field", to_string(*f)},
          {"q", std::to_string(f->order())},
          {"theta", "a -> a^" + std::to_string(f->characteristic()) + "^" + std::to_string(aut.value())},
          {"order t", std::to_string(aut.order())},
          {"fixed subfield", std::to_string(f->fixed_subfield(aut).size()) + " elements"}});
    return 0;
}

int cmd_factor(const Options& o) {
    const FieldPtr f = field_of(o);
    const AutExponent aut = f->aut(o.aut);
    const CensusCount c = count_skew_cyclic_codes(o.n, f, aut);
    json factors = json::array();
    std::string text;
    for (const auto& [p, s] : c.factorization.factors) {
        factors.push_back({{"factor", to_string(p)}, {"multiplicity", s}});
        text += (text.empty() ? "" : " * ") + ("(" + to_string(p) + ")") + (s > 1 ? "^" + std::to_string(s) : "");
    }
    emit(o, {{"n", o.n}, {"factors", factors}, {"over_fq", c.over_fq}, {"over_r", c.over_r}},
         {{"x^" + std::to_string(o.n) + " - 1", text},
          {"codes over F_q", std::to_string(c.over_fq)},
          {"codes over R", std::to_string(c.over_r)}});
    return 0;
}

int cmd_code_build(const Options& o) {
    const auto c = code_of(o);
    const json j = code_block(c);
    emit(o, j,
         {{"g1", j["g1"]}, {"g2", j["g2"]}, {"g3", j["g3"]}, {"g", j["generator"]}, {"|C|", std::to_string(c.field()->order()) + "^" + std::to_string(c.log_q_size())}});
    return 0;
}

int cmd_code_dual(const Options& o) {
    const auto c = code_of(o);
    const auto d = c.dual();
    json ht = json::array();
    for (int k = 0; k < 3; ++k) ht.push_back(to_string(c.component(k).h_tilde()));
    json j = code_block(d);
    j["h_tilde"] = ht;
    emit(o, j,
         {{"h~1", ht[0]}, {"h~2", ht[1]}, {"h~3", ht[2]}, {"dual g1", j["g1"]}, {"dual g2", j["g2"]},
          {"dual g3", j["g3"]}, {"dual g", j["generator"]},
          {"|C^perp|", std::to_string(d.field()->order()) + "^" + std::to_string(d.log_q_size())}});
    return 0;
}

int cmd_code_matrix(const Options& o) {
    const auto c = code_of(o);
    std::vector<std::string> rows;
    for (const auto& r : c.generator_matrix()) rows.push_back(to_string(r));
    emit(o, {{"rows", rows}}, {{"generator matrix", matrix_text(rows)}});
    return 0;
}

int cmd_code_gray(const Options& o) {
    if (!o.word.empty()) {
        const FieldPtr f = o.code_file.empty() ? field_of(o) : code_of(o).field();
        const auto w = parse_r_vector(o.word, *f);
        const auto g = gray_map(w);
        emit(o, {{"word", to_string(w)}, {"gray", to_string(g)}, {"lee_weight", lee_weight(w)}},
             {{"word", to_string(w)}, {"gray", to_string(g)}, {"Lee weight", std::to_string(lee_weight(w))}});
        return 0;
    }
    const auto c = code_of(o);
    std::vector<std::string> rows;
    for (const auto& r : rref(c.gray_generator_matrix())) rows.push_back(to_string(r));
    emit(o, {{"rows", rows}, {"rank", rows.size()}},
         {{"Phi(C) basis", matrix_text(rows)}, {"rank", std::to_string(rows.size())}});
    return 0;
}

int cmd_code_distance(const Options& o) {
    const auto c = code_of(o);
    const auto d = min_lee_distance(c, o.bound);
    json comps = json::array();
    std::vector<std::pair<std::string, std::string>> table;
    for (int k = 0; k < 3; ++k) {
        const auto dk = min_hamming_distance(c.component(k), o.bound);
        comps.push_back(dk.degenerate ? json(nullptr) : json(dk.distance));
        table.emplace_back("d(C" + std::to_string(k + 1) + ")", distance_text(dk));
    }
    table.emplace_back("Lee distance", distance_text(d));
    emit(o, {{"lee_distance", d.degenerate ? json(nullptr) : json(d.distance)}, {"components", comps}}, table);
    return 0;
}

int cmd_code_idempotent(const Options& o) {
    const auto c = code_of(o);
    const RPoly e = idempotent_generator(c);
    if (reduce_mod_xn_minus_1(e * e, c.length()) != e)
        throw Error(ErrorKind::HypothesisViolated, "computed e is not idempotent");
    json parts = json::array();
    for (int k = 0; k < 3; ++k) parts.push_back(to_string(project(e, k)));
    emit(o, {{"e", to_string(e)}, {"components", parts}},
         {{"e", to_string(e)}, {"e1", parts[0]}, {"e2", parts[1]}, {"e3", parts[2]}});
    return 0;
}

int cmd_code_contains(const Options& o) {
    if (o.word.empty()) throw Error(ErrorKind::ParseError, "--word is required");
    const auto c = code_of(o);
    const auto w = parse_r_vector(o.word, *c.field());
    if (static_cast<int>(w.size()) != c.length())
        throw Error(ErrorKind::LengthMismatch, "word has length " + std::to_string(w.size()) + ", code has " +
                                                   std::to_string(c.length()));
    const bool in = c.contains(w);
    emit(o, {{"word", to_string(w)}, {"contains", in}}, {{"word", to_string(w)}, {"in code", in ? "yes" : "no"}});
    return 0;
}

int cmd_census(const Options& o) {
    const FieldPtr f = field_of(o);
    const AutExponent aut = f->aut(o.aut);
    std::vector<SkewCyclicCode> codes;
    try {
        codes = census(o.n, f, aut, o.max_rows);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::TableTooLarge) throw;
        const auto comps = component_census(o.n, f, aut).size();
        std::cerr << "census has " << comps * comps * comps << " codes, above the table bound " << o.max_rows
                  << "\n";
        return 2;
    }
    json rows = json::array();
    for (const auto& c : codes) {
        json r{{"g1", to_string(c.component(0).generator())},
               {"g2", to_string(c.component(1).generator())},
               {"g3", to_string(c.component(2).generator())},
               {"size", power_string(f->order(), c.log_q_size())},
               {"log_q_size", c.log_q_size()}};
        try {
            const auto d = min_lee_distance(c, o.bound);
            r["distance"] = d.degenerate ? json(nullptr) : json(d.distance);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::EnumerationTooLarge) throw;
            r["distance"] = "-";
        }
        rows.push_back(std::move(r));
    }
    if (as_json(o)) {
        std::cout << json{{"n", o.n}, {"count", rows.size()}, {"codes", rows}}.dump() << "\n";
        return 0;
    }
    std::cout << "# " << rows.size() << " codes, n=" << o.n << ", " << to_string(*f) << "\n";
    for (const auto& r : rows) {
        const std::string d = r["distance"].is_null() ? "-" : (r["distance"].is_string() ? r["distance"].get<std::string>() : std::to_string(r["distance"].get<int>()));
        std::cout << r["g1"].get<std::string>() << " | " << r["g2"].get<std::string>() << " | "
                  << r["g3"].get<std::string>() << " | q^" << r["log_q_size"].get<int>() << " | " << d << "\n";
    }
    return 0;
}

int cmd_verify(const Options& o) {
    std::vector<TestMatrixEntry> matrix;
    if (o.matrix_file.empty() && o.explicit_config) {
        const FieldPtr f = field_of(o);
        f->aut(o.aut);
        TestMatrixEntry e;
        e.p = f->characteristic();
        e.m = f->degree();
        e.modulus.assign(f->modulus().begin(), f->modulus().end());
        e.i = o.aut;
        e.n = o.n;
        e.seed = o.seed;
        e.bounds.codeword_bound = o.bound;
        matrix.push_back(e);
    } else if (o.matrix_file.empty()) {
        matrix = default_matrix();
        for (auto& e : matrix) e.seed = o.seed;
    } else {
        std::ifstream in(o.matrix_file);
        if (!in) throw Error(ErrorKind::ParseError, "cannot open " + o.matrix_file);
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw Error(ErrorKind::ParseError, std::string("bad JSON in ") + o.matrix_file + ": " + e.what());
        }
        if (!j.is_array()) throw Error(ErrorKind::ParseError, "test matrix must be a JSON array");
        for (const auto& e : j) matrix.push_back(TestMatrixEntry::from_json(e));
        for (const auto& e : matrix) {
            const auto f = FiniteField::create(e.p, e.m, e.modulus);
            f->aut(e.i);
            if (e.n < 1) throw Error(ErrorKind::LengthMismatch, "n must be positive");
        }
    }
    bool ok = true;
    auto print = [&](const VerdictReport& r) {
        if (as_json(o)) {
            std::cout << r.to_json().dump() << "\n";
        } else {
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.claim << " [" << to_string(r.mode) << "] "
                      << r.config.dump();
            if (!r.detail.empty()) std::cout << " " << r.detail;
            if (r.witness) std::cout << " witness: " << *r.witness;
            std::cout << "\n";
        }
    };
    for (const auto& r : verify_all(matrix, o.inject_broken)) {
        print(r);
        ok = ok && r.pass;
    }
    if (o.controls) {
        // Every control must fail; a passing control is itself a failure.
        for (auto r : negative_controls(matrix.front())) {
            r.claim = "control:" + r.claim;
            r.pass = !r.pass;
            print(r);
            ok = ok && r.pass;
        }
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Skew cyclic codes over F_q + vF_q + v^2F_q"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--field", o.field, "field spec p=..,m=..,mod=c0,..,cm")->capture_default_str();
    app.add_option("--aut", o.aut, "automorphism exponent i (theta_i = p^i power), i | m")->capture_default_str();
    app.add_option("--n", o.n, "code length")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
    app.add_option("--seed", o.seed, "sampling seed")->capture_default_str();
    app.add_option("--bound", o.bound, "codeword enumeration bound")->capture_default_str();

    auto* field = app.add_subcommand("field", "field utilities");
    field->require_subcommand(1);
    auto* field_check = field->add_subcommand("check", "validate a field spec and an automorphism");

    auto* factor = app.add_subcommand("factor", "factor x^n - 1 and count codes");

    auto* code = app.add_subcommand("code", "single code operations");
    code->require_subcommand(1);
    code->fallthrough();
    code->add_option("--g", o.g, "combined generator over R, coefficients a|b|c");
    code->add_option("--g1", o.g1, "first component generator");
    code->add_option("--g2", o.g2, "second component generator");
    code->add_option("--g3", o.g3, "third component generator");
    code->add_option("--code", o.code_file, "code JSON file");
    code->add_option("--word", o.word, "word over R, ';' separated");
    std::map<std::string, int (*)(const Options&)> code_cmds{
        {"build", cmd_code_build},       {"dual", cmd_code_dual},         {"gray", cmd_code_gray},
        {"matrix", cmd_code_matrix},     {"distance", cmd_code_distance}, {"idempotent", cmd_code_idempotent},
        {"contains", cmd_code_contains},
    };
    for (const auto& [name, fn] : code_cmds) code->add_subcommand(name);

    auto* census_cmd = app.add_subcommand("census", "list every code of length n");
    census_cmd->add_option("--max-rows", o.max_rows, "table bound")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--matrix", o.matrix_file, "test matrix JSON (array of entries)");
    verify->add_flag("--inject-broken", o.inject_broken, "add a corrupted code to every entry");
    verify->add_flag("--controls", o.controls, "also run the negative controls (each must fail)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    o.explicit_config = app.count("--field") + app.count("--aut") + app.count("--n") > 0;
    try {
        if (*field_check) return cmd_field_check(o);
        if (*factor) return cmd_factor(o);
        if (*census_cmd) return cmd_census(o);
        if (*verify) return cmd_verify(o);
        for (const auto& [name, fn] : code_cmds)
            if (*code->get_subcommand(name)) return fn(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
