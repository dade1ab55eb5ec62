#include "skewcyc/text.hpp"

#include <cctype>
#include <charconv>
#include <functional>
#include <limits>

namespace skewcyc {

namespace {

[[noreturn]] void parse_fail(std::string_view what, std::string_view text) {
    throw Error(ErrorKind::ParseError, std::string(what) + ": '" + std::string(text) + "'");
}

std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

std::int64_t parse_int(std::string_view s) {
    std::int64_t v = 0;
    const char* begin = s.data();
    if (!s.empty() && s.front() == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) parse_fail("expected an integer", s);
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t k = 0; k <= s.size(); ++k)
        if (k == s.size() || s[k] == sep) {
            out.push_back(s.substr(start, k - start));
            start = k + 1;
        }
    return out;
}

// Splits a polynomial into signed terms at top-level '+' / '-'.
std::vector<std::pair<bool, std::string>> split_terms(const std::string& s) {
    std::vector<std::pair<bool, std::string>> terms;
    int depth = 0;
    bool negative = false;
    std::string cur;
    auto flush = [&](std::size_t pos) {
        if (cur.empty()) {
            if (pos != 0) parse_fail("empty term in polynomial", s);
            return;
        }
        terms.emplace_back(negative, cur);
        cur.clear();
    };
    for (std::size_t k = 0; k < s.size(); ++k) {
        const char c = s[k];
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (depth == 0 && (c == '+' || c == '-')) {
            flush(k);
            negative = c == '-';
            continue;
        }
        cur.push_back(c);
    }
    flush(s.size());
    if (depth != 0) parse_fail("unbalanced brackets", s);
    return terms;
}

template <class K>
SkewPoly<K> parse_poly(std::string_view text, const FieldPtr& field, const AutExponent& aut,
                       const std::function<K(std::string_view)>& parse_coeff) {
    using Ops = CoeffOps<K>;
    const std::string s = strip_spaces(text);
    if (s.empty()) parse_fail("empty polynomial", text);
    std::vector<K> coeffs;
    for (const auto& [negative, term] : split_terms(s)) {
        // Locate the x that is outside any bracket.
        std::size_t xpos = std::string::npos;
        int depth = 0;
        for (std::size_t k = 0; k < term.size(); ++k) {
            if (term[k] == '[') ++depth;
            if (term[k] == ']') --depth;
            if (depth == 0 && term[k] == 'x') {
                xpos = k;
                break;
            }
        }
        std::string_view coef_part = std::string_view(term).substr(0, xpos);
        int degree = 0;
        if (xpos != std::string::npos) {
            if (!coef_part.empty() && coef_part.back() == '*') coef_part.remove_suffix(1);
            std::string_view rest = std::string_view(term).substr(xpos + 1);
            degree = 1;
            if (!rest.empty()) {
                if (rest.front() != '^') parse_fail("unexpected text after x", term);
                const auto e = parse_int(rest.substr(1));
                if (e < 0 || e > 1'000'000) parse_fail("bad exponent", term);
                degree = static_cast<int>(e);
            }
        }
        K c = coef_part.empty() ? Ops::one(*field) : parse_coeff(coef_part);
        if (negative) c = -c;
        if (coeffs.size() <= static_cast<std::size_t>(degree)) coeffs.resize(degree + 1, Ops::zero(*field));
        coeffs[degree] += c;
    }
    return SkewPoly<K>(field, aut, std::move(coeffs));
}

template <class K>
std::string poly_to_string(const SkewPoly<K>& f, const std::function<std::string(const K&)>& coeff_str) {
    if (f.is_zero()) return "0";
    const K one = CoeffOps<K>::one(*f.field());
    std::string out;
    for (int k = 0; k <= f.degree(); ++k) {
        const K& c = f.coeffs()[k];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (k == 0) {
            out += coeff_str(c);
            continue;
        }
        if (c != one) out += coeff_str(c) + "*";
        out += k == 1 ? "x" : "x^" + std::to_string(k);
    }
    return out;
}

}  // namespace

FieldPtr parse_field(std::string_view text) {
    const std::string s = strip_spaces(text);
    std::int64_t p = -1, m = -1;
    std::vector<std::int64_t> mod;
    bool in_mod = false;
    for (auto tok : split(s, ',')) {
        const auto eq = tok.find('=');
        if (eq == std::string_view::npos) {
            if (!in_mod) parse_fail("expected key=value in field spec", text);
            mod.push_back(parse_int(tok));
            continue;
        }
        const auto key = tok.substr(0, eq);
        const auto value = tok.substr(eq + 1);
        in_mod = false;
        if (key == "p") {
            p = parse_int(value);
        } else if (key == "m") {
            m = parse_int(value);
        } else if (key == "mod") {
            in_mod = true;
            mod.push_back(parse_int(value));
        } else {
            parse_fail("unknown field spec key", key);
        }
    }
    if (p < 0 || m < 0) parse_fail("field spec needs p and m", text);
    if (p > std::numeric_limits<std::uint32_t>::max()) parse_fail("characteristic too large", text);
    if (m > 64) throw Error(ErrorKind::FieldTooLarge, "extension degree too large");
    if (mod.empty() && m == 1) mod = {0, 1};
    return FiniteField::create(static_cast<std::uint32_t>(p), static_cast<int>(m), std::move(mod));
}

FieldElem parse_field_elem(std::string_view text, const FiniteField& field) {
    const std::string s = strip_spaces(text);
    if (s.size() >= 2 && s.front() == '[' && s.back() == ']') {
        std::vector<std::int64_t> c;
        for (auto tok : split(std::string_view(s).substr(1, s.size() - 2), ',')) c.push_back(parse_int(tok));
        return field.from_coeffs(c);
    }
    return field.from_int(parse_int(s));
}

RingElem parse_ring_elem(std::string_view text, const FiniteField& field) {
    const std::string s = strip_spaces(text);
    const auto parts = split(s, '|');
    if (parts.size() == 1) return RingElem::scalar(parse_field_elem(parts[0], field));
    if (parts.size() != 3) parse_fail("ring element needs the form a|b|c", text);
    return {parse_field_elem(parts[0], field), parse_field_elem(parts[1], field), parse_field_elem(parts[2], field)};
}

FqVector parse_fq_vector(std::string_view text, const FiniteField& field) {
    FqVector out;
    const std::string s = strip_spaces(text);
    if (s.empty()) return out;
    for (auto tok : split(s, ';')) out.push_back(parse_field_elem(tok, field));
    return out;
}

RVector parse_r_vector(std::string_view text, const FiniteField& field) {
    RVector out;
    const std::string s = strip_spaces(text);
    if (s.empty()) return out;
    for (auto tok : split(s, ';')) out.push_back(parse_ring_elem(tok, field));
    return out;
}

FqPoly parse_fq_poly(std::string_view text, const FieldPtr& field, const AutExponent& aut) {
    return parse_poly<FieldElem>(text, field, aut,
                                 [&](std::string_view c) { return parse_field_elem(c, *field); });
}

RPoly parse_r_poly(std::string_view text, const FieldPtr& field, const AutExponent& aut) {
    return parse_poly<RingElem>(text, field, aut, [&](std::string_view c) { return parse_ring_elem(c, *field); });
}

std::string to_string(const FqPoly& f) {
    return poly_to_string<FieldElem>(f, [](const FieldElem& c) { return to_string(c); });
}

std::string to_string(const RPoly& f) {
    return poly_to_string<RingElem>(f, [](const RingElem& c) { return to_string(c); });
}

std::string to_string(std::span<const FieldElem> v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ";" : "") + to_string(v[k]);
    return out;
}

std::string to_string(std::span<const RingElem> v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ";" : "") + to_string(v[k]);
    return out;
}

nlohmann::json field_to_json(const FiniteField& field) {
    return {{"p", field.characteristic()}, {"m", field.degree()}, {"mod", field.modulus()}};
}

FieldPtr field_from_json(const nlohmann::json& j) {
    try {
        std::vector<std::int64_t> mod = j.contains("mod") ? j.at("mod").get<std::vector<std::int64_t>>()
                                                          : std::vector<std::int64_t>{0, 1};
        return FiniteField::create(j.at("p").get<std::uint32_t>(), j.at("m").get<int>(), std::move(mod));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("bad field block: ") + e.what());
    }
}

nlohmann::json code_to_json(const SkewCyclicCode& code) {
    return {
        {"field", field_to_json(*code.field())},
        {"aut", code.aut().value()},
        {"n", code.length()},
        {"g1", to_string(code.component(0).generator())},
        {"g2", to_string(code.component(1).generator())},
        {"g3", to_string(code.component(2).generator())},
    };
}

SkewCyclicCode code_from_json(const nlohmann::json& j) {
    try {
        const FieldPtr field = field_from_json(j.at("field"));
        const AutExponent aut = field->aut(j.at("aut").get<int>());
        const int n = j.at("n").get<int>();
        return SkewCyclicCode::from_generators(n, parse_fq_poly(j.at("g1").get<std::string>(), field, aut),
                                               parse_fq_poly(j.at("g2").get<std::string>(), field, aut),
                                               parse_fq_poly(j.at("g3").get<std::string>(), field, aut));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("bad code block: ") + e.what());
    }
}

}  // namespace skewcyc
