#pragma once

#include <functional>
#include <optional>
#include <random>

#include "skewcyc/codes.hpp"
#include "skewcyc/text.hpp"

namespace testing {

using namespace skewcyc;

inline FieldPtr f3() { return FiniteField::create(3, 1, {0, 1}); }
inline FieldPtr f9() { return FiniteField::create(3, 2, {1, 0, 1}); }
inline FieldPtr f25() { return FiniteField::create(5, 2, {2, 0, 1}); }

/// Kind of the Error thrown by fn, or nullopt if it returns normally.
inline std::optional<ErrorKind> error_kind(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

inline FieldElem random_elem(const FiniteField& f, std::mt19937_64& rng) {
    return f.from_code(std::uniform_int_distribution<std::uint32_t>(0, f.order() - 1)(rng));
}

inline RingElem random_ring(const FiniteField& f, std::mt19937_64& rng) {
    return {random_elem(f, rng), random_elem(f, rng), random_elem(f, rng)};
}

inline FqPoly random_fq_poly(const FieldPtr& f, const AutExponent& aut, int max_deg, std::mt19937_64& rng) {
    std::vector<FieldElem> c;
    const int d = std::uniform_int_distribution<int>(0, max_deg)(rng);
    for (int k = 0; k <= d; ++k) c.push_back(random_elem(*f, rng));
    return FqPoly(f, aut, c);
}

inline RPoly random_r_poly(const FieldPtr& f, const AutExponent& aut, int max_deg, std::mt19937_64& rng) {
    std::vector<RingElem> c;
    const int d = std::uniform_int_distribution<int>(0, max_deg)(rng);
    for (int k = 0; k <= d; ++k) c.push_back(random_ring(*f, rng));
    return RPoly(f, aut, c);
}

inline FqPoly fq(const FieldPtr& f, const AutExponent& aut, const char* text) { return parse_fq_poly(text, f, aut); }

}  // namespace testing
