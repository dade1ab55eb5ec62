#pragma once

// Skew cyclic codes over F_q (ComponentCode) and over R (SkewCyclicCode, the
// direct sum eta_1 C_1 + eta_2 C_2 + eta_3 C_3).

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "skewcyc/linalg.hpp"
#include "skewcyc/skew_poly.hpp"

namespace skewcyc {

inline constexpr std::uint64_t kDefaultCodewordBound = 1'000'000;

/// Minimum distance; the zero code reports 0 with `degenerate` set.
struct DistanceResult {
    std::size_t distance = 0;
    bool degenerate = false;

    bool operator==(const DistanceResult&) const = default;
};

/// sigma(c) = (theta(c_{n-1}), theta(c_0), ..., theta(c_{n-2})).
FqVector skew_shift(std::span<const FieldElem> word, const AutExponent& aut);
RVector skew_shift(std::span<const RingElem> word, const AutExponent& aut);

/// The left submodule <g> of F_q[x, theta_i] / (x^n - 1) for a monic right
/// divisor g of x^n - 1, with x^n - 1 = h g.
class ComponentCode {
public:
    /// Throws NotMonic or NotRightDivisor.
    static ComponentCode from_generator(int n, FqPoly g);
    /// Skips the divisor check (h is the left quotient, remainder dropped).
    /// Only for building deliberately broken inputs.
    static ComponentCode unchecked(int n, FqPoly g);

    int length() const { return n_; }
    const FqPoly& generator() const { return g_; }
    /// Left quotient h with x^n - 1 = h g.
    const FqPoly& check_polynomial() const { return h_; }
    int dimension() const { return n_ - g_.degree(); }
    const FieldPtr& field() const { return g_.field(); }
    const AutExponent& aut() const { return g_.aut(); }
    bool verified() const { return verified_; }

    bool contains(const FqPoly& word) const;
    bool contains(std::span<const FieldElem> word) const;

    /// Row j holds the coefficients of x^j g, j = 0..k-1.
    FqMatrix generator_matrix() const;

    /// h~(x) = h_{n-r} + theta(h_{n-r-1}) x + ... + theta^{n-r}(h_0) x^{n-r}.
    FqPoly h_tilde() const;
    /// Monic generator of the dual, lc(h~)^-1 h~.
    FqPoly dual_generator() const;
    ComponentCode dual() const;
    bool is_self_dual() const;

    bool operator==(const ComponentCode& o) const { return n_ == o.n_ && g_ == o.g_; }

private:
    ComponentCode(int n, FqPoly g, FqPoly h, bool verified)
        : n_(n), g_(std::move(g)), h_(std::move(h)), verified_(verified) {}

    int n_;
    FqPoly g_;
    FqPoly h_;
    bool verified_;
};

class SkewCyclicCode {
public:
    /// Throws LengthMismatch, AutMismatch or DomainMismatch.
    static SkewCyclicCode from_components(ComponentCode c1, ComponentCode c2, ComponentCode c3);
    static SkewCyclicCode from_generators(int n, const FqPoly& g1, const FqPoly& g2, const FqPoly& g3);
    /// The code generated by an arbitrary polynomial over R: each CRT
    /// projection is replaced by its right gcd with x^n - 1.
    static SkewCyclicCode from_combined(int n, const RPoly& g);

    int length() const { return c_[0].length(); }
    const FieldPtr& field() const { return c_[0].field(); }
    const AutExponent& aut() const { return c_[0].aut(); }
    const ComponentCode& component(int k) const { return c_[k]; }
    const std::array<ComponentCode, 3>& decompose() const { return c_; }
    /// eta_1 g_1 + eta_2 g_2 + eta_3 g_3.
    const RPoly& generator() const { return g_; }
    /// eta_1 h_1 + eta_2 h_2 + eta_3 h_3, so that x^n - 1 = h g over R.
    const RPoly& check_polynomial() const { return h_; }
    /// log_q |C| = 3n - sum deg g_k.
    int log_q_size() const;
    bool verified() const;

    bool contains(std::span<const RingElem> word) const;
    bool contains(const RPoly& word) const;

    /// Stacked rows eta_1 G_1, eta_2 G_2, eta_3 G_3.
    std::vector<RVector> generator_matrix() const;
    /// Gray images of the generator rows; an F_q basis of Phi(C).
    FqMatrix gray_generator_matrix() const;

    /// Components replaced by their duals; generator eta_k h~_k combined.
    SkewCyclicCode dual() const;
    bool is_self_dual() const;

    bool operator==(const SkewCyclicCode& o) const { return c_ == o.c_; }

private:
    explicit SkewCyclicCode(std::array<ComponentCode, 3> c);

    std::array<ComponentCode, 3> c_;
    RPoly g_;
    RPoly h_;
};

/// q^e as an exact decimal string.
std::string power_string(std::uint64_t base, std::uint64_t exponent);

/// e = a g mod x^n - 1 from a g + b h = 1 over F_{p^i}; needs (n, q) = 1 and
/// (n, t_i) = 1. Idempotency and <e> = <g> are verified before returning.
FqPoly idempotent_generator(const ComponentCode& code);
/// eta_1 e_1 + eta_2 e_2 + eta_3 e_3, re-verified over R.
RPoly idempotent_generator(const SkewCyclicCode& code);

DistanceResult min_hamming_distance(const ComponentCode& code, std::uint64_t bound = kDefaultCodewordBound);
/// Minimum over the nonzero components.
DistanceResult min_lee_distance(const SkewCyclicCode& code, std::uint64_t bound = kDefaultCodewordBound);

struct CensusCount {
    std::uint64_t over_fq = 0;
    std::uint64_t over_r = 0;
    Factorization factorization;
};

/// prod (s_j + 1) and its cube, from x^n - 1 over F_{p^i}; needs (n, t_i) = 1.
CensusCount count_skew_cyclic_codes(int n, const FieldPtr& field, const AutExponent& aut,
                                    std::uint64_t bound = kDefaultSearchBound);

/// Every component code of length n (one per monic right divisor).
std::vector<ComponentCode> component_census(int n, const FieldPtr& field, const AutExponent& aut,
                                            std::uint64_t bound = kDefaultSearchBound);
/// Every skew cyclic code of length n over R; throws TableTooLarge above
/// `max_codes`.
std::vector<SkewCyclicCode> census(int n, const FieldPtr& field, const AutExponent& aut,
                                   std::uint64_t max_codes = 10'000, std::uint64_t bound = kDefaultSearchBound);

}  // namespace skewcyc
