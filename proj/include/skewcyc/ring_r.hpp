#pragma once

// The ring R = F_q + v F_q + v^2 F_q with v^3 = v, its CRT splitting
// R ~ F_q^3 via the idempotents eta_1, eta_2, eta_3, the automorphisms theta_i,
// the Gray map and the Lee weight.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "skewcyc/finite_field.hpp"

namespace skewcyc {

/// a + b v + c v^2.
struct RingElem {
    FieldElem a;
    FieldElem b;
    FieldElem c;

    static RingElem zero(const FiniteField& f) { return {f.zero(), f.zero(), f.zero()}; }
    static RingElem one(const FiniteField& f) { return {f.one(), f.zero(), f.zero()}; }
    static RingElem v(const FiniteField& f) { return {f.zero(), f.one(), f.zero()}; }
    /// Embeds a scalar as a + 0v + 0v^2.
    static RingElem scalar(const FieldElem& x) {
        const auto z = x.field().zero();
        return {x, z, z};
    }

    const FiniteField& field() const { return a.field(); }
    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero(); }
    bool is_one() const { return a.is_one() && b.is_zero() && c.is_zero(); }
    /// Units are exactly the elements with all three CRT coordinates nonzero.
    bool is_unit() const;
    RingElem inverse() const;

    RingElem operator+(const RingElem& o) const { return {a + o.a, b + o.b, c + o.c}; }
    RingElem operator-(const RingElem& o) const { return {a - o.a, b - o.b, c - o.c}; }
    RingElem operator-() const { return {-a, -b, -c}; }
    RingElem operator*(const RingElem& o) const;
    RingElem operator*(const FieldElem& s) const { return {a * s, b * s, c * s}; }
    RingElem& operator+=(const RingElem& o) { return *this = *this + o; }
    RingElem& operator-=(const RingElem& o) { return *this = *this - o; }
    RingElem& operator*=(const RingElem& o) { return *this = *this * o; }

    bool operator==(const RingElem&) const = default;
};

/// Coordinates with r = eta_1 x1 + eta_2 x2 + eta_3 x3.
struct CrtTriple {
    FieldElem x1;
    FieldElem x2;
    FieldElem x3;

    const FieldElem& operator[](int k) const { return k == 0 ? x1 : (k == 1 ? x2 : x3); }
    FieldElem& operator[](int k) { return k == 0 ? x1 : (k == 1 ? x2 : x3); }
    bool operator==(const CrtTriple&) const = default;
};

struct Idempotents {
    RingElem eta1;  // 1 - v^2
    RingElem eta2;  // 2^-1 v + 2^-1 v^2
    RingElem eta3;  // -2^-1 v + 2^-1 v^2

    const RingElem& operator[](int k) const { return k == 0 ? eta1 : (k == 1 ? eta2 : eta3); }
};

/// Builds eta_1..eta_3 and checks eta_j eta_k = delta_jk eta_j and their sum
/// is 1 before returning.
Idempotents make_idempotents(const FiniteField& f);

/// (a, a+b+c, a-b+c): evaluation at v = 0, 1, -1.
CrtTriple crt_split(const RingElem& r);
RingElem crt_join(const CrtTriple& t);
/// Projection onto the k-th CRT coordinate (k in 0..2).
FieldElem crt_component(const RingElem& r, int k);

/// Applies theta_i to a, b, c; v is fixed.
RingElem theta(const RingElem& r, const AutExponent& aut);
/// Frobenius power a -> a^(p^j) applied coefficientwise.
RingElem frobenius_power(const RingElem& r, int j);

using FqVector = std::vector<FieldElem>;
using RVector = std::vector<RingElem>;

/// Interleaved image (a0, a0+b0+c0, a0-b0+c0, a1, ...), length 3n.
FqVector gray_map(std::span<const RingElem> r);
RVector gray_inverse(std::span<const FieldElem> g);

std::size_t hamming_weight(std::span<const FieldElem> x);
std::size_t hamming_distance(std::span<const FieldElem> x, std::span<const FieldElem> y);
std::size_t lee_weight(const RingElem& r);
std::size_t lee_weight(std::span<const RingElem> r);
std::size_t lee_distance(std::span<const RingElem> x, std::span<const RingElem> y);

/// Ring element text `a|b|c`, each part an element bracket list.
std::string to_string(const RingElem& r);

}  // namespace skewcyc
