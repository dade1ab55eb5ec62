#pragma once

// Skew polynomial rings K[x, theta_i] for K = F_q (FieldElem) or K = R
// (RingElem), with the twisted product x a = theta_i(a) x.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "skewcyc/finite_field.hpp"
#include "skewcyc/ring_r.hpp"

namespace skewcyc {

template <class K>
struct CoeffOps;

template <>
struct CoeffOps<FieldElem> {
    static FieldElem zero(const FiniteField& f) { return f.zero(); }
    static FieldElem one(const FiniteField& f) { return f.one(); }
    static FieldElem twist(const FieldElem& x, int j) { return x.field().frobenius_power(x, j); }
    static bool is_unit(const FieldElem& x) { return !x.is_zero(); }
    static FieldElem inverse(const FieldElem& x) { return x.inverse(); }
};

template <>
struct CoeffOps<RingElem> {
    static RingElem zero(const FiniteField& f) { return RingElem::zero(f); }
    static RingElem one(const FiniteField& f) { return RingElem::one(f); }
    static RingElem twist(const RingElem& x, int j) { return frobenius_power(x, j); }
    static bool is_unit(const RingElem& x) { return x.is_unit(); }
    static RingElem inverse(const RingElem& x) { return x.inverse(); }
};

template <class K>
class SkewPoly {
public:
    using Ops = CoeffOps<K>;

    SkewPoly(FieldPtr field, AutExponent aut, std::vector<K> coeffs = {})
        : field_(std::move(field)), aut_(aut), coeffs_(std::move(coeffs)) {
        if (aut_.field_degree() != field_->degree())
            throw Error(ErrorKind::InvalidExponent, "automorphism exponent built for another field");
        normalize();
    }

    static SkewPoly monomial(FieldPtr field, AutExponent aut, K c, int degree) {
        std::vector<K> v(static_cast<std::size_t>(degree) + 1, Ops::zero(*field));
        v[degree] = std::move(c);
        return SkewPoly(std::move(field), aut, std::move(v));
    }
    static SkewPoly constant(FieldPtr field, AutExponent aut, K c) { return monomial(std::move(field), aut, std::move(c), 0); }
    static SkewPoly one(FieldPtr field, AutExponent aut) {
        K c = Ops::one(*field);
        return constant(std::move(field), aut, std::move(c));
    }
    static SkewPoly x_n_minus_one(FieldPtr field, AutExponent aut, int n) {
        std::vector<K> v(static_cast<std::size_t>(n) + 1, Ops::zero(*field));
        v[0] = -Ops::one(*field);
        v[n] = v[n] + Ops::one(*field);
        return SkewPoly(std::move(field), aut, std::move(v));
    }

    const FieldPtr& field() const { return field_; }
    const AutExponent& aut() const { return aut_; }
    const std::vector<K>& coeffs() const { return coeffs_; }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const K& lead() const { return coeffs_.back(); }
    bool is_monic() const { return !coeffs_.empty() && lead() == Ops::one(*field_); }
    K coeff(int k) const {
        return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : Ops::zero(*field_);
    }

    /// Coefficient vector padded with zeros to length n.
    std::vector<K> to_vector(int n) const {
        if (degree() >= n)
            throw Error(ErrorKind::LengthMismatch,
                        "polynomial of degree " + std::to_string(degree()) + " does not fit length " + std::to_string(n));
        std::vector<K> v(coeffs_);
        v.resize(n, Ops::zero(*field_));
        return v;
    }

    SkewPoly operator+(const SkewPoly& o) const {
        check_compatible(o);
        std::vector<K> v(std::max(coeffs_.size(), o.coeffs_.size()), Ops::zero(*field_));
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = coeff(int(k)) + o.coeff(int(k));
        return {field_, aut_, std::move(v)};
    }
    SkewPoly operator-(const SkewPoly& o) const {
        check_compatible(o);
        std::vector<K> v(std::max(coeffs_.size(), o.coeffs_.size()), Ops::zero(*field_));
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = coeff(int(k)) - o.coeff(int(k));
        return {field_, aut_, std::move(v)};
    }
    SkewPoly operator-() const {
        std::vector<K> v(coeffs_);
        for (auto& c : v) c = -c;
        return {field_, aut_, std::move(v)};
    }
    /// Left scalar multiple c * f.
    friend SkewPoly operator*(const K& c, const SkewPoly& f) {
        std::vector<K> v(f.coeffs_);
        for (auto& x : v) x = c * x;
        return {f.field_, f.aut_, std::move(v)};
    }
    SkewPoly operator*(const SkewPoly& o) const;

    /// Applies theta_i^k to every coefficient.
    SkewPoly twisted(long long k) const {
        std::vector<K> v(coeffs_);
        const int j = aut_.power_exponent(k);
        for (auto& c : v) c = Ops::twist(c, j);
        return {field_, aut_, std::move(v)};
    }

    /// Same coefficients read in K[x, theta_j]; used for the commutative subfield.
    SkewPoly with_aut(AutExponent aut) const { return {field_, aut, coeffs_}; }

    bool operator==(const SkewPoly& o) const {
        return field_.get() == o.field_.get() && aut_ == o.aut_ && coeffs_ == o.coeffs_;
    }

    void check_compatible(const SkewPoly& o) const {
        if (field_.get() != o.field_.get()) throw Error(ErrorKind::DomainMismatch, "polynomials over different fields");
        if (!(aut_ == o.aut_)) throw Error(ErrorKind::AutMismatch, "polynomials twisted by different automorphisms");
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    FieldPtr field_;
    AutExponent aut_;
    std::vector<K> coeffs_;
};

using FqPoly = SkewPoly<FieldElem>;
using RPoly = SkewPoly<RingElem>;

/// (a x^i)(b x^j) = a theta^i(b) x^(i+j), extended bilinearly.
template <class K>
SkewPoly<K> skew_mul(const SkewPoly<K>& f, const SkewPoly<K>& g) {
    f.check_compatible(g);
    if (f.is_zero() || g.is_zero()) return {f.field(), f.aut()};
    using Ops = CoeffOps<K>;
    std::vector<K> out(f.coeffs().size() + g.coeffs().size() - 1, Ops::zero(*f.field()));
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const K& a = f.coeffs()[i];
        if (a.is_zero()) continue;
        const int j = f.aut().power_exponent(static_cast<long long>(i));
        for (std::size_t k = 0; k < g.coeffs().size(); ++k) out[i + k] += a * Ops::twist(g.coeffs()[k], j);
    }
    return {f.field(), f.aut(), std::move(out)};
}

template <class K>
SkewPoly<K> SkewPoly<K>::operator*(const SkewPoly& o) const {
    return skew_mul(*this, o);
}

template <class K>
struct DivisionResult {
    SkewPoly<K> quotient;
    SkewPoly<K> remainder;
};

/// f = quotient * g + remainder with deg remainder < deg g. g must be nonzero
/// with a unit leading coefficient (monic over R in practice).
template <class K>
DivisionResult<K> right_divide(const SkewPoly<K>& f, const SkewPoly<K>& g) {
    using Ops = CoeffOps<K>;
    f.check_compatible(g);
    if (g.is_zero()) throw Error(ErrorKind::ZeroDivisor, "division by the zero polynomial");
    if (!Ops::is_unit(g.lead()))
        throw Error(ErrorKind::NonMonicDivisor, "divisor leading coefficient is not a unit");
    const int dg = g.degree();
    std::vector<K> rem(f.coeffs());
    std::vector<K> quot(std::max(0, f.degree() - dg + 1), Ops::zero(*f.field()));
    const auto& gc = g.coeffs();
    for (int k = f.degree(); k >= dg; --k) {
        if (rem[k].is_zero()) continue;
        const int shift = k - dg;
        const int j = f.aut().power_exponent(shift);
        // c * theta^shift(lc g) = rem[k]
        const K c = rem[k] * Ops::inverse(Ops::twist(g.lead(), j));
        quot[shift] = c;
        for (int l = 0; l <= dg; ++l) rem[shift + l] -= c * Ops::twist(gc[l], j);
    }
    return {SkewPoly<K>(f.field(), f.aut(), std::move(quot)), SkewPoly<K>(f.field(), f.aut(), std::move(rem))};
}

/// Right remainder of f modulo x^n - 1, i.e. the representative of f in
/// K[x, theta] / K[x, theta](x^n - 1).
template <class K>
SkewPoly<K> reduce_mod_xn_minus_1(const SkewPoly<K>& f, int n) {
    if (f.degree() < n) return f;
    return right_divide(f, SkewPoly<K>::x_n_minus_one(f.field(), f.aut(), n)).remainder;
}

template <class K>
bool is_right_divisor_of_xn_minus_1(const SkewPoly<K>& g, int n) {
    if (g.degree() > n) return false;
    return right_divide(SkewPoly<K>::x_n_minus_one(g.field(), g.aut(), n), g).remainder.is_zero();
}

/// Left quotient h with x^n - 1 = h g; throws NotRightDivisor otherwise.
template <class K>
SkewPoly<K> left_quotient_of_xn_minus_1(const SkewPoly<K>& g, int n) {
    auto [h, r] = right_divide(SkewPoly<K>::x_n_minus_one(g.field(), g.aut(), n), g);
    if (!r.is_zero()) throw Error(ErrorKind::NotRightDivisor, "generator does not right-divide x^n-1");
    return h;
}

/// Degree first, then coefficient codes from the constant term upward.
bool poly_less(const FqPoly& f, const FqPoly& g);

/// lc(f)^-1 * f; the zero polynomial is returned unchanged.
FqPoly make_monic(const FqPoly& f);

/// Monic generator of the left ideal K[x,theta] f + K[x,theta] g.
FqPoly right_gcd(const FqPoly& f, const FqPoly& g);

/// True iff every coefficient is fixed by theta_i (the polynomial lies in F_{p^i}[x]).
bool has_fixed_coefficients(const FqPoly& f);

inline constexpr std::uint64_t kDefaultSearchBound = 10'000'000;

/// All monic right divisors of x^n - 1 in F_q[x, theta_i], ordered by degree
/// then lexicographically. Exhaustive when sum_{d<n} q^d <= bound; otherwise
/// requires (n, t_i) = 1 and expands the subfield factorization.
std::vector<FqPoly> monic_right_divisors(int n, const FieldPtr& field, const AutExponent& aut,
                                         std::uint64_t bound = kDefaultSearchBound);

/// Exhaustive search only (never falls back); used as an oracle.
std::vector<FqPoly> brute_force_right_divisors(int n, const FieldPtr& field, const AutExponent& aut,
                                               std::uint64_t bound = kDefaultSearchBound);

struct Factorization {
    std::vector<std::pair<FqPoly, int>> factors;

    /// prod (s_j + 1)
    std::uint64_t divisor_count() const;
    FqPoly expand(const FieldPtr& field, const AutExponent& aut) const;
};

/// x^n - 1 = prod p_j^(s_j) over the theta_i-fixed subfield F_{p^i}. The
/// product is re-expanded and each factor re-checked for irreducibility.
Factorization factor_xn_minus_1(int n, const FieldPtr& field, const AutExponent& aut,
                                std::uint64_t bound = kDefaultSearchBound);

/// No monic factor of degree 1..deg/2 with coefficients in F_{p^i}.
bool is_irreducible_over_subfield(const FqPoly& f, std::uint64_t bound = kDefaultSearchBound);

struct GcdResult {
    FqPoly d;
    FqPoly a;
    FqPoly b;
};

/// a f + b g = d, d monic, for polynomials with theta_i-fixed coefficients.
GcdResult extended_gcd_commutative(const FqPoly& f, const FqPoly& g);

/// Coefficientwise eta_1 f1 + eta_2 f2 + eta_3 f3.
RPoly combine(const FqPoly& f1, const FqPoly& f2, const FqPoly& f3);
/// The k-th CRT projection (k in 0..2) of a polynomial over R.
FqPoly project(const RPoly& f, int k);

}  // namespace skewcyc
