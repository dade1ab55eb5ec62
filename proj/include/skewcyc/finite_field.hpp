#pragma once

// Exact arithmetic in F_q = F_p[w]/(f(w)), p an odd prime, plus the Frobenius
// powers a -> a^(p^j).
//
// A FiniteField is immutable and always owned through a FieldPtr. Elements are
// small values (field pointer + packed coefficient code); the field must
// outlive every element created from it.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "skewcyc/error.hpp"

namespace skewcyc {

class FiniteField;
class FieldElem;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// Default cap on the number of elements `elements()` will produce.
inline constexpr std::uint64_t kDefaultEnumerationBound = 1u << 16;

class FieldElem {
public:
    FieldElem() = default;
    FieldElem(const FiniteField* field, std::uint32_t code) : field_(field), code_(code) {}

    const FiniteField& field() const { return *field_; }
    const FiniteField* field_ptr() const { return field_; }
    /// Packed coordinates: sum of c_k * p^(m-1-k), so code order is the
    /// lexicographic order of the ascending coefficient vector.
    std::uint32_t code() const { return code_; }
    std::vector<std::uint32_t> coeffs() const;

    bool is_zero() const { return code_ == 0; }
    bool is_one() const;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
    FieldElem inverse() const;

    bool operator==(const FieldElem& o) const { return field_ == o.field_ && code_ == o.code_; }
    std::strong_ordering operator<=>(const FieldElem& o) const { return code_ <=> o.code_; }

private:
    const FiniteField* field_ = nullptr;
    std::uint32_t code_ = 0;
};

/// Selects theta_i : a -> a^(p^i) on F_{p^m}; i must divide m.
class AutExponent {
public:
    AutExponent(int i, int m);

    int value() const { return i_; }
    int field_degree() const { return m_; }
    /// t_i = m / i
    int order() const { return m_ / i_; }
    /// Frobenius exponent j (mod m) of theta_i^k.
    int power_exponent(long long k) const;

    bool operator==(const AutExponent&) const = default;

private:
    int i_;
    int m_;
};

class FiniteField : public std::enable_shared_from_this<FiniteField> {
public:
    /// Validates p, the degree and the irreducibility of `modulus` (ascending
    /// coefficients, monic, degree m). For m = 1 the modulus is recorded as
    /// [0, 1].
    static FieldPtr create(std::uint32_t p, int m, std::vector<std::int64_t> modulus);

    FiniteField(const FiniteField&) = delete;
    FiniteField& operator=(const FiniteField&) = delete;

    std::uint32_t characteristic() const { return p_; }
    int degree() const { return m_; }
    std::uint32_t order() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FieldElem zero() const { return {this, 0}; }
    FieldElem one() const;
    /// Image of an integer in the prime subfield.
    FieldElem from_int(std::int64_t v) const;
    /// Reduces each coefficient mod p; requires exactly m coefficients.
    FieldElem from_coeffs(std::span<const std::int64_t> coeffs) const;
    FieldElem from_code(std::uint32_t code) const;
    /// The class of w.
    FieldElem generator() const;

    /// x^(p^j) for any j >= 0 (taken mod m).
    FieldElem frobenius_power(const FieldElem& x, int j) const;
    /// theta_i(x); throws InvalidExponent unless i divides m.
    FieldElem frobenius(const FieldElem& x, int i) const;
    FieldElem frobenius(const FieldElem& x, const AutExponent& aut) const;
    AutExponent aut(int i) const { return AutExponent(i, m_); }

    /// All q elements in lexicographic coefficient order.
    std::vector<FieldElem> elements(std::uint64_t bound = kDefaultEnumerationBound) const;
    /// Elements fixed by theta_i, i.e. the subfield F_{p^i}, in code order.
    std::vector<FieldElem> fixed_subfield(const AutExponent& aut) const;

    bool same_as(const FiniteField& o) const {
        return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
    }

    // Raw code-level arithmetic, used by FieldElem and hot loops.
    std::uint32_t add_code(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub_code(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg_code(std::uint32_t a) const;
    std::uint32_t mul_code(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv_code(std::uint32_t a) const;
    std::uint32_t frob_code(std::uint32_t a, int j) const;

private:
    FiniteField(std::uint32_t p, int m, std::vector<std::uint32_t> modulus);

    std::vector<std::uint32_t> unpack(std::uint32_t code) const;
    std::uint32_t pack(std::span<const std::uint32_t> coeffs) const;

    std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg_slow(std::uint32_t a) const;
    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv_euclid(std::uint32_t a) const;
    std::uint32_t pow_slow(std::uint32_t a, std::uint64_t e) const;

    std::uint32_t p_;
    int m_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> place_;  // p^(m-1-k)

    // Lookup tables; add/mul only for small q.
    std::vector<std::uint16_t> add_table_;
    std::vector<std::uint16_t> mul_table_;
    std::vector<std::uint32_t> neg_table_;
    std::vector<std::uint32_t> inv_table_;
    std::vector<std::vector<std::uint32_t>> frob_tables_;  // [j][code] = code^(p^j)
};

/// Text form of a field, e.g. `p=3,m=2,mod=1,0,1`.
std::string to_string(const FiniteField& f);
/// Element text form `[c0,c1,...,c_{m-1}]`.
std::string to_string(const FieldElem& x);

bool is_prime(std::uint64_t n);

}  // namespace skewcyc
