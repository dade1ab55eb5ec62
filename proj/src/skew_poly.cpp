#include "skewcyc/skew_poly.hpp"

#include <numeric>

namespace skewcyc {

bool poly_less(const FqPoly& f, const FqPoly& g) {
    if (f.degree() != g.degree()) return f.degree() < g.degree();
    for (int k = 0; k <= f.degree(); ++k)
        if (f.coeffs()[k] != g.coeffs()[k]) return f.coeffs()[k].code() < g.coeffs()[k].code();
    return false;
}

FqPoly make_monic(const FqPoly& f) {
    if (f.is_zero() || f.is_monic()) return f;
    return f.lead().inverse() * f;
}

FqPoly right_gcd(const FqPoly& f, const FqPoly& g) {
    FqPoly a = make_monic(f), b = make_monic(g);
    while (!b.is_zero()) {
        FqPoly r = right_divide(a, b).remainder;
        a = b;
        b = make_monic(r);
    }
    return a;
}

bool has_fixed_coefficients(const FqPoly& f) {
    const auto& field = *f.field();
    for (const auto& c : f.coeffs())
        if (field.frobenius(c, f.aut()) != c) return false;
    return true;
}

namespace {

std::uint64_t saturating_pow(std::uint64_t base, int e) {
    std::uint64_t r = 1;
    for (int k = 0; k < e; ++k) {
        if (r > UINT64_MAX / base) return UINT64_MAX;
        r *= base;
    }
    return r;
}

// Remainder of x^n - 1 right-divided by the monic g (codes, ascending, g.back() == 1)
// is zero. Works on raw codes to keep the exhaustive search cheap.
bool divides_xn_minus_1(const FiniteField& F, const AutExponent& aut, int n, const std::vector<std::uint32_t>& g,
                        std::vector<std::uint32_t>& scratch) {
    const int dg = static_cast<int>(g.size()) - 1;
    scratch.assign(n + 1, 0);
    scratch[0] = F.neg_code(F.one().code());
    scratch[n] = F.one().code();
    for (int k = n; k >= dg; --k) {
        const std::uint32_t c = scratch[k];
        if (c == 0) continue;
        const int shift = k - dg;
        const int j = aut.power_exponent(shift);
        for (int l = 0; l <= dg; ++l)
            scratch[shift + l] = F.sub_code(scratch[shift + l], F.mul_code(c, F.frob_code(g[l], j)));
    }
    for (int k = 0; k < dg; ++k)
        if (scratch[k] != 0) return false;
    return true;
}

void sort_polys(std::vector<FqPoly>& v) { std::sort(v.begin(), v.end(), poly_less); }

}  // namespace

std::vector<FqPoly> brute_force_right_divisors(int n, const FieldPtr& field, const AutExponent& aut,
                                               std::uint64_t bound) {
    if (n < 1) throw Error(ErrorKind::LengthMismatch, "length must be positive");
    const std::uint64_t q = field->order();
    std::uint64_t space = 0;
    for (int d = 0; d < n; ++d) {
        const auto s = saturating_pow(q, d);
        space = space > UINT64_MAX - s ? UINT64_MAX : space + s;
    }
    if (space > bound)
        throw Error(ErrorKind::SearchSpaceTooLarge,
                    "exhaustive divisor search needs " + std::to_string(space) + " candidates, bound is " +
                        std::to_string(bound));

    const FiniteField& F = *field;
    std::vector<FqPoly> out;
    std::vector<std::uint32_t> g, scratch;
    for (int d = 0; d < n; ++d) {
        g.assign(d + 1, 0);
        g[d] = F.one().code();
        const std::uint64_t count = saturating_pow(q, d);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::uint64_t t = idx;
            for (int k = 0; k < d; ++k) {
                g[k] = static_cast<std::uint32_t>(t % q);
                t /= q;
            }
            if (!divides_xn_minus_1(F, aut, n, g, scratch)) continue;
            std::vector<FieldElem> coeffs;
            coeffs.reserve(g.size());
            for (auto c : g) coeffs.push_back(F.from_code(c));
            out.emplace_back(field, aut, std::move(coeffs));
        }
    }
    out.push_back(FqPoly::x_n_minus_one(field, aut, n));
    sort_polys(out);
    return out;
}

std::vector<FqPoly> monic_right_divisors(int n, const FieldPtr& field, const AutExponent& aut, std::uint64_t bound) {
    try {
        return brute_force_right_divisors(n, field, aut, bound);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::SearchSpaceTooLarge) throw;
        if (std::gcd(n, aut.order()) != 1) throw;
    }
    // (n, t_i) = 1: every monic right divisor lies in F_{p^i}[x], where the
    // ring is commutative and divisors are products of the prime-power factors.
    const Factorization fac = factor_xn_minus_1(n, field, aut, bound);
    std::vector<FqPoly> out{FqPoly::one(field, aut)};
    for (const auto& [p, s] : fac.factors) {
        std::vector<FqPoly> next;
        for (const auto& base : out) {
            FqPoly acc = base;
            next.push_back(acc);
            for (int e = 1; e <= s; ++e) {
                acc = acc * p;
                next.push_back(acc);
            }
        }
        out = std::move(next);
    }
    for (const auto& g : out)
        if (!is_right_divisor_of_xn_minus_1(g, n))
            throw Error(ErrorKind::NotRightDivisor, "factorization produced a non-divisor");
    sort_polys(out);
    return out;
}

std::uint64_t Factorization::divisor_count() const {
    std::uint64_t c = 1;
    for (const auto& f : factors) c *= static_cast<std::uint64_t>(f.second + 1);
    return c;
}

FqPoly Factorization::expand(const FieldPtr& field, const AutExponent& aut) const {
    FqPoly acc = FqPoly::one(field, aut);
    for (const auto& [p, s] : factors)
        for (int e = 0; e < s; ++e) acc = acc * p;
    return acc;
}

namespace {

// Monic polynomials of degree d over the given subfield, in odometer order;
// `visit` returns false to stop early.
template <class Visit>
void for_each_monic(const FieldPtr& field, const AutExponent& aut, const std::vector<FieldElem>& sub, int d,
                    Visit&& visit) {
    std::vector<std::size_t> idx(d, 0);
    std::vector<FieldElem> coeffs(d + 1, field->zero());
    coeffs[d] = field->one();
    while (true) {
        for (int k = 0; k < d; ++k) coeffs[k] = sub[idx[k]];
        if (!visit(FqPoly(field, aut, coeffs))) return;
        int k = 0;
        while (k < d && ++idx[k] == sub.size()) idx[k++] = 0;
        if (k == d) return;
    }
}

}  // namespace

bool is_irreducible_over_subfield(const FqPoly& f, std::uint64_t bound) {
    if (f.degree() < 1) return false;
    if (!has_fixed_coefficients(f))
        throw Error(ErrorKind::DomainMismatch, "polynomial has coefficients outside the fixed subfield");
    const auto sub = f.field()->fixed_subfield(f.aut());
    if (saturating_pow(sub.size(), f.degree() / 2) > bound)
        throw Error(ErrorKind::SearchSpaceTooLarge, "irreducibility trial division too large");
    bool reducible = false;
    for (int d = 1; d <= f.degree() / 2 && !reducible; ++d)
        for_each_monic(f.field(), f.aut(), sub, d, [&](const FqPoly& cand) {
            if (right_divide(f, cand).remainder.is_zero()) reducible = true;
            return !reducible;
        });
    return !reducible;
}

Factorization factor_xn_minus_1(int n, const FieldPtr& field, const AutExponent& aut, std::uint64_t bound) {
    if (n < 1) throw Error(ErrorKind::LengthMismatch, "length must be positive");
    const auto sub = field->fixed_subfield(aut);
    Factorization fac;
    FqPoly rest = FqPoly::x_n_minus_one(field, aut, n);
    // With every factor of degree < d already divided out, any monic degree-d
    // divisor of `rest` is irreducible.
    for (int d = 1; 2 * d <= rest.degree(); ++d) {
        if (saturating_pow(sub.size(), d) > bound)
            throw Error(ErrorKind::SearchSpaceTooLarge, "factorization trial division too large");
        for_each_monic(field, aut, sub, d, [&](const FqPoly& cand) {
            int mult = 0;
            while (true) {
                auto [quot, rem] = right_divide(rest, cand);
                if (!rem.is_zero()) break;
                rest = quot;
                ++mult;
            }
            if (mult > 0) fac.factors.emplace_back(cand, mult);
            return 2 * d <= rest.degree();
        });
    }
    if (rest.degree() > 0) fac.factors.emplace_back(make_monic(rest), 1);

    std::sort(fac.factors.begin(), fac.factors.end(),
              [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });
    if (fac.expand(field, aut) != FqPoly::x_n_minus_one(field, aut, n))
        throw Error(ErrorKind::DomainMismatch, "factorization does not expand to x^n-1");
    for (const auto& [p, s] : fac.factors)
        if (!is_irreducible_over_subfield(p, bound))
            throw Error(ErrorKind::DomainMismatch, "factor failed the irreducibility re-check");
    return fac;
}

GcdResult extended_gcd_commutative(const FqPoly& f, const FqPoly& g) {
    f.check_compatible(g);
    if (f.is_zero() && g.is_zero()) throw Error(ErrorKind::BothZero, "gcd of two zero polynomials");
    if (!has_fixed_coefficients(f) || !has_fixed_coefficients(g))
        throw Error(ErrorKind::DomainMismatch, "extended gcd needs coefficients in the fixed subfield");
    const auto& field = f.field();
    const auto aut = f.aut();
    FqPoly r0 = f, r1 = g;
    FqPoly a0 = FqPoly::one(field, aut), a1(field, aut);
    FqPoly b0(field, aut), b1 = FqPoly::one(field, aut);
    while (!r1.is_zero()) {
        auto [quot, rem] = right_divide(r0, r1);
        FqPoly a2 = a0 - quot * a1;
        FqPoly b2 = b0 - quot * b1;
        r0 = std::move(r1);
        r1 = std::move(rem);
        a0 = std::move(a1);
        a1 = std::move(a2);
        b0 = std::move(b1);
        b1 = std::move(b2);
    }
    const FieldElem scale = r0.lead().inverse();
    GcdResult out{scale * r0, scale * a0, scale * b0};
    if (out.a * f + out.b * g != out.d) throw Error(ErrorKind::DomainMismatch, "Bezout identity check failed");
    return out;
}

RPoly combine(const FqPoly& f1, const FqPoly& f2, const FqPoly& f3) {
    f1.check_compatible(f2);
    f1.check_compatible(f3);
    const int len = std::max({f1.degree(), f2.degree(), f3.degree()}) + 1;
    std::vector<RingElem> v;
    v.reserve(len);
    for (int k = 0; k < len; ++k) v.push_back(crt_join({f1.coeff(k), f2.coeff(k), f3.coeff(k)}));
    return {f1.field(), f1.aut(), std::move(v)};
}

FqPoly project(const RPoly& f, int k) {
    std::vector<FieldElem> v;
    v.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) v.push_back(crt_component(c, k));
    return {f.field(), f.aut(), std::move(v)};
}

}  // namespace skewcyc
