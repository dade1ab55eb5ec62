#include "skewcyc/codes.hpp"

#include <numeric>

namespace skewcyc {

FqVector skew_shift(std::span<const FieldElem> word, const AutExponent& aut) {
    FqVector out;
    out.reserve(word.size());
    if (word.empty()) return out;
    const auto& f = word[0].field();
    out.push_back(f.frobenius(word.back(), aut));
    for (std::size_t j = 0; j + 1 < word.size(); ++j) out.push_back(f.frobenius(word[j], aut));
    return out;
}

RVector skew_shift(std::span<const RingElem> word, const AutExponent& aut) {
    RVector out;
    out.reserve(word.size());
    if (word.empty()) return out;
    out.push_back(theta(word.back(), aut));
    for (std::size_t j = 0; j + 1 < word.size(); ++j) out.push_back(theta(word[j], aut));
    return out;
}

// ---------------------------------------------------------------------------
// ComponentCode

ComponentCode ComponentCode::from_generator(int n, FqPoly g) {
    if (n < 1) throw Error(ErrorKind::LengthMismatch, "code length must be positive");
    if (!g.is_monic()) throw Error(ErrorKind::NotMonic, "generator must be monic");
    if (g.degree() > n) throw Error(ErrorKind::NotRightDivisor, "generator degree exceeds n");
    auto [h, r] = right_divide(FqPoly::x_n_minus_one(g.field(), g.aut(), n), g);
    if (!r.is_zero()) throw Error(ErrorKind::NotRightDivisor, "generator does not right-divide x^n-1");
    return ComponentCode(n, std::move(g), std::move(h), true);
}

ComponentCode ComponentCode::unchecked(int n, FqPoly g) {
    if (n < 1) throw Error(ErrorKind::LengthMismatch, "code length must be positive");
    if (!g.is_monic() || g.degree() > n) throw Error(ErrorKind::NotMonic, "generator must be monic of degree <= n");
    auto h = right_divide(FqPoly::x_n_minus_one(g.field(), g.aut(), n), g).quotient;
    return ComponentCode(n, std::move(g), std::move(h), false);
}

bool ComponentCode::contains(const FqPoly& word) const {
    g_.check_compatible(word);
    if (word.degree() >= n_) throw Error(ErrorKind::LengthMismatch, "word longer than the code length");
    return right_divide(word, g_).remainder.is_zero();
}

bool ComponentCode::contains(std::span<const FieldElem> word) const {
    if (static_cast<int>(word.size()) != n_) throw Error(ErrorKind::LengthMismatch, "word length differs from n");
    return contains(FqPoly(field(), aut(), FqVector(word.begin(), word.end())));
}

FqMatrix ComponentCode::generator_matrix() const {
    FqMatrix rows;
    const int k = dimension();
    for (int j = 0; j < k; ++j) {
        // x^j g: coefficient theta^j(g_l) at position l + j
        FqVector row = zero_vector(*field(), n_);
        const FqPoly shifted = g_.twisted(j);
        for (int l = 0; l <= g_.degree(); ++l) row[l + j] = shifted.coeffs()[l];
        rows.push_back(std::move(row));
    }
    return rows;
}

FqPoly ComponentCode::h_tilde() const {
    if (h_.degree() == 0) return FqPoly::one(field(), aut());  // zero code, h = 1
    const int k = h_.degree();
    std::vector<FieldElem> v;
    v.reserve(k + 1);
    for (int j = 0; j <= k; ++j) v.push_back(field()->frobenius_power(h_.coeff(k - j), aut().power_exponent(j)));
    return {field(), aut(), std::move(v)};
}

FqPoly ComponentCode::dual_generator() const { return make_monic(h_tilde()); }

ComponentCode ComponentCode::dual() const {
    return verified_ ? from_generator(n_, dual_generator()) : unchecked(n_, dual_generator());
}

bool ComponentCode::is_self_dual() const {
    if (2 * dimension() != n_) return false;
    const ComponentCode d = dual();
    for (const auto& row : generator_matrix())
        if (!d.contains(row)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// SkewCyclicCode

SkewCyclicCode::SkewCyclicCode(std::array<ComponentCode, 3> c)
    : c_(std::move(c)),
      g_(combine(c_[0].generator(), c_[1].generator(), c_[2].generator())),
      h_(combine(c_[0].check_polynomial(), c_[1].check_polynomial(), c_[2].check_polynomial())) {}

SkewCyclicCode SkewCyclicCode::from_components(ComponentCode c1, ComponentCode c2, ComponentCode c3) {
    if (c1.length() != c2.length() || c1.length() != c3.length())
        throw Error(ErrorKind::LengthMismatch, "component codes differ in length");
    c1.generator().check_compatible(c2.generator());
    c1.generator().check_compatible(c3.generator());
    SkewCyclicCode code({std::move(c1), std::move(c2), std::move(c3)});
    if (code.verified() &&
        code.h_ * code.g_ != RPoly::x_n_minus_one(code.field(), code.aut(), code.length()))
        throw Error(ErrorKind::NotRightDivisor, "combined generator does not right-divide x^n-1 over R");
    return code;
}

SkewCyclicCode SkewCyclicCode::from_generators(int n, const FqPoly& g1, const FqPoly& g2, const FqPoly& g3) {
    return from_components(ComponentCode::from_generator(n, g1), ComponentCode::from_generator(n, g2),
                           ComponentCode::from_generator(n, g3));
}

SkewCyclicCode SkewCyclicCode::from_combined(int n, const RPoly& g) {
    if (g.degree() > n) throw Error(ErrorKind::LengthMismatch, "generator degree exceeds n");
    std::array<FqPoly, 3> comps{project(g, 0), project(g, 1), project(g, 2)};
    const FqPoly xn = FqPoly::x_n_minus_one(g.field(), g.aut(), n);
    for (auto& c : comps) c = right_gcd(c, xn);
    return from_generators(n, comps[0], comps[1], comps[2]);
}

int SkewCyclicCode::log_q_size() const { return c_[0].dimension() + c_[1].dimension() + c_[2].dimension(); }

bool SkewCyclicCode::verified() const { return c_[0].verified() && c_[1].verified() && c_[2].verified(); }

bool SkewCyclicCode::contains(std::span<const RingElem> word) const {
    if (static_cast<int>(word.size()) != length())
        throw Error(ErrorKind::LengthMismatch, "word length differs from n");
    for (int k = 0; k < 3; ++k) {
        FqVector proj;
        proj.reserve(word.size());
        for (const auto& r : word) proj.push_back(crt_component(r, k));
        if (!c_[k].contains(proj)) return false;
    }
    return true;
}

bool SkewCyclicCode::contains(const RPoly& word) const {
    g_.check_compatible(word);
    return contains(word.to_vector(length()));
}

std::vector<RVector> SkewCyclicCode::generator_matrix() const {
    const Idempotents eta = make_idempotents(*field());
    std::vector<RVector> rows;
    for (int k = 0; k < 3; ++k)
        for (const auto& row : c_[k].generator_matrix()) {
            RVector r;
            r.reserve(row.size());
            for (const auto& x : row) r.push_back(eta[k] * x);
            rows.push_back(std::move(r));
        }
    return rows;
}

FqMatrix SkewCyclicCode::gray_generator_matrix() const {
    FqMatrix out;
    for (const auto& row : generator_matrix()) out.push_back(gray_map(row));
    return out;
}

SkewCyclicCode SkewCyclicCode::dual() const {
    SkewCyclicCode d({c_[0].dual(), c_[1].dual(), c_[2].dual()});
    return d;
}

bool SkewCyclicCode::is_self_dual() const {
    return c_[0].is_self_dual() && c_[1].is_self_dual() && c_[2].is_self_dual();
}

// ---------------------------------------------------------------------------

std::string power_string(std::uint64_t base, std::uint64_t exponent) {
    std::vector<int> digits{1};  // little-endian decimal
    for (std::uint64_t e = 0; e < exponent; ++e) {
        std::uint64_t carry = 0;
        for (auto& d : digits) {
            const std::uint64_t v = static_cast<std::uint64_t>(d) * base + carry;
            d = static_cast<int>(v % 10);
            carry = v / 10;
        }
        for (; carry; carry /= 10) digits.push_back(static_cast<int>(carry % 10));
    }
    std::string s;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) s.push_back(static_cast<char>('0' + *it));
    return s;
}

FqPoly idempotent_generator(const ComponentCode& code) {
    const int n = code.length();
    const auto& field = code.field();
    if (std::gcd(static_cast<std::uint32_t>(n), field->characteristic()) != 1)
        throw Error(ErrorKind::HypothesisViolated, "idempotent generator needs (n, q) = 1");
    if (std::gcd(n, code.aut().order()) != 1)
        throw Error(ErrorKind::HypothesisViolated, "idempotent generator needs (n, t_i) = 1");
    const FqPoly& g = code.generator();
    const FqPoly& h = code.check_polynomial();
    if (!has_fixed_coefficients(g) || !has_fixed_coefficients(h))
        throw Error(ErrorKind::HypothesisViolated, "generator has coefficients outside F_{p^i}");

    const GcdResult bez = extended_gcd_commutative(g, h);
    if (bez.d.degree() != 0) throw Error(ErrorKind::NotCoprime, "g and h share a factor");
    const FqPoly e = reduce_mod_xn_minus_1(bez.a * g, n);

    if (reduce_mod_xn_minus_1(e * e, n) != e)
        throw Error(ErrorKind::DomainMismatch, "computed e is not idempotent");
    if (right_gcd(e, FqPoly::x_n_minus_one(field, code.aut(), n)) != g)
        throw Error(ErrorKind::DomainMismatch, "computed e does not generate the code");
    return e;
}

RPoly idempotent_generator(const SkewCyclicCode& code) {
    const FqPoly e1 = idempotent_generator(code.component(0));
    const FqPoly e2 = idempotent_generator(code.component(1));
    const FqPoly e3 = idempotent_generator(code.component(2));
    const RPoly e = combine(e1, e2, e3);
    if (reduce_mod_xn_minus_1(e * e, code.length()) != e)
        throw Error(ErrorKind::DomainMismatch, "combined e is not idempotent over R");
    if (!e.is_zero() && !code.contains(e)) throw Error(ErrorKind::DomainMismatch, "combined e is not in the code");
    return e;
}

DistanceResult min_hamming_distance(const ComponentCode& code, std::uint64_t bound) {
    if (code.dimension() == 0) return {0, true};
    const FqMatrix rows = code.generator_matrix();
    std::size_t best = static_cast<std::size_t>(code.length());
    for_each_in_span(*code.field(), rows, static_cast<std::size_t>(code.length()), bound, [&](const FqVector& w) {
        const std::size_t wt = hamming_weight(w);
        if (wt != 0 && wt < best) best = wt;
    });
    return {best, false};
}

DistanceResult min_lee_distance(const SkewCyclicCode& code, std::uint64_t bound) {
    DistanceResult out{0, true};
    for (int k = 0; k < 3; ++k) {
        const DistanceResult d = min_hamming_distance(code.component(k), bound);
        if (d.degenerate) continue;
        if (out.degenerate || d.distance < out.distance) out = d;
    }
    return out;
}

CensusCount count_skew_cyclic_codes(int n, const FieldPtr& field, const AutExponent& aut, std::uint64_t bound) {
    if (std::gcd(n, aut.order()) != 1)
        throw Error(ErrorKind::HypothesisViolated,
                    "census formula needs (n, t_i) = 1, got gcd(" + std::to_string(n) + ", " +
                        std::to_string(aut.order()) + ") != 1");
    CensusCount c;
    c.factorization = factor_xn_minus_1(n, field, aut, bound);
    c.over_fq = c.factorization.divisor_count();
    c.over_r = c.over_fq * c.over_fq * c.over_fq;
    return c;
}

std::vector<ComponentCode> component_census(int n, const FieldPtr& field, const AutExponent& aut,
                                            std::uint64_t bound) {
    std::vector<ComponentCode> out;
    for (auto& g : monic_right_divisors(n, field, aut, bound)) out.push_back(ComponentCode::from_generator(n, g));
    return out;
}

std::vector<SkewCyclicCode> census(int n, const FieldPtr& field, const AutExponent& aut, std::uint64_t max_codes,
                                   std::uint64_t bound) {
    const auto comps = component_census(n, field, aut, bound);
    const std::uint64_t total = static_cast<std::uint64_t>(comps.size()) * comps.size() * comps.size();
    if (total > max_codes)
        throw Error(ErrorKind::TableTooLarge,
                    std::to_string(total) + " codes exceed the table bound " + std::to_string(max_codes));
    std::vector<SkewCyclicCode> out;
    out.reserve(total);
    for (const auto& a : comps)
        for (const auto& b : comps)
            for (const auto& c : comps) out.push_back(SkewCyclicCode::from_components(a, b, c));
    return out;
}

}  // namespace skewcyc
