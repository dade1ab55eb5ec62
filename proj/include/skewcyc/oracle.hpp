#pragma once

// Brute-force oracles and the claim-by-claim verification harness.
//
// The oracles never call the division-based membership test: codeword sets
// are rebuilt from generator vectors by closing under addition, scalar action
// and the skew shift. Agreement between the two routes is itself checked.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "skewcyc/codes.hpp"

namespace skewcyc {

struct OracleBounds {
    /// Codeword sets up to this size are checked word by word.
    std::uint64_t exhaustive_threshold = 10'000;
    /// Random codewords drawn per property above the threshold.
    std::uint64_t samples = 200;
    /// Pair count above which the Gray isometry check samples.
    std::uint64_t isometry_exhaustive_pairs = 1'000'000;
    std::uint64_t isometry_samples = 10'000;
    /// Largest code enumerated for distances.
    std::uint64_t codeword_bound = kDefaultCodewordBound;
    std::uint64_t search_bound = kDefaultSearchBound;
    std::uint64_t max_codes = 10'000;
};

struct TestMatrixEntry {
    std::uint32_t p = 3;
    int m = 2;
    std::vector<std::int64_t> modulus{1, 0, 1};
    int i = 1;
    int n = 1;
    std::uint64_t seed = 0;
    OracleBounds bounds;

    nlohmann::json to_json() const;
    static TestMatrixEntry from_json(const nlohmann::json& j);
};

enum class VerdictMode { Exhaustive, Sampled, Skipped };

struct VerdictReport {
    std::string claim;
    nlohmann::json config;
    VerdictMode mode = VerdictMode::Exhaustive;
    bool pass = true;
    /// Replayable description of the first failure.
    std::optional<std::string> witness;
    std::string detail;

    nlohmann::json to_json() const;
};

std::string_view to_string(VerdictMode mode);

// ---------------------------------------------------------------------------
// Oracles

/// F_q basis (rref) of the smallest subspace containing g's coefficient
/// vector and closed under the skew shift.
FqMatrix oracle_span_basis(const ComponentCode& code);
/// Same for an R-code, in Gray coordinates: closure of the eta_k g_k vectors
/// under the skew shift and multiplication by 1, v, v^2.
FqMatrix oracle_span_basis(const SkewCyclicCode& code);
/// Closure of an arbitrary generating set of R-vectors, in Gray coordinates.
FqMatrix oracle_module_basis(const FiniteField& field, const AutExponent& aut, std::vector<RVector> generators);

std::vector<FqVector> oracle_code_enumerate(const ComponentCode& code, std::uint64_t bound = 10'000);
std::vector<RVector> oracle_code_enumerate(const SkewCyclicCode& code, std::uint64_t bound = 10'000);

/// Minimum Hamming weight of Phi(C) by direct enumeration of the oracle span.
DistanceResult oracle_gray_distance(const SkewCyclicCode& code, std::uint64_t bound = kDefaultCodewordBound);

// ---------------------------------------------------------------------------
// Single-claim verifiers. Each returns one report; `config` identifies the
// input.

using GrayMapFn = std::function<FqVector(std::span<const RingElem>)>;

VerdictReport verify_idempotents(const FiniteField& field, const Idempotents& eta);
VerdictReport verify_gray_isometry(const TestMatrixEntry& entry, const GrayMapFn& map = {});
/// Brute-force divisor count against prod(s_j + 1) of `factorization`.
VerdictReport verify_census(const TestMatrixEntry& entry, const std::optional<Factorization>& factorization = {});
/// `divisors` replaces the brute-force divisor list.
VerdictReport verify_subfield_divisors(const TestMatrixEntry& entry,
                                       const std::optional<std::vector<FqPoly>>& divisors = {});

/// Phi restricted to C is injective and dim Phi(C) = log_q |C|.
VerdictReport verify_gray_dimension(const SkewCyclicCode& code);
VerdictReport verify_cardinality(const SkewCyclicCode& code, const OracleBounds& bounds = {});
VerdictReport verify_closure(const SkewCyclicCode& code, const OracleBounds& bounds = {}, std::uint64_t seed = 0,
                             std::string claim = "Def4.1");
VerdictReport verify_oracle_agreement(const SkewCyclicCode& code, const OracleBounds& bounds = {});
VerdictReport verify_decomposition(const SkewCyclicCode& code, const OracleBounds& bounds = {},
                                   std::uint64_t seed = 0);
VerdictReport verify_generator(const SkewCyclicCode& code);
VerdictReport verify_principal(const SkewCyclicCode& code, const OracleBounds& bounds = {});
VerdictReport verify_duality(const SkewCyclicCode& code, const std::optional<SkewCyclicCode>& dual = {});
VerdictReport verify_dual_gray_commutation(const SkewCyclicCode& code,
                                           const std::optional<SkewCyclicCode>& dual = {});
/// `claimed` replaces the library's own is_self_dual() answer.
VerdictReport verify_self_duality(const SkewCyclicCode& code, std::optional<bool> claimed = {});
VerdictReport verify_distance_law(const SkewCyclicCode& code, const OracleBounds& bounds = {});
VerdictReport verify_quasi_cyclic_gray(const SkewCyclicCode& code);
/// Distinct codes in the list have distinct combined generators.
VerdictReport verify_unique_generators(const std::vector<SkewCyclicCode>& codes, const nlohmann::json& config = {});
VerdictReport verify_idempotent_generator(const SkewCyclicCode& code, const std::optional<RPoly>& e = {});

/// Runs every claim for each entry; one report per (claim, entry), in claim
/// order. `inject_broken` adds a code whose generator is not a divisor of
/// x^n - 1; the structural claims must then fail with a witness.
std::vector<VerdictReport> verify_all(const std::vector<TestMatrixEntry>& matrix, bool inject_broken = false);

/// One deliberately corrupted input per claim; every report should fail.
std::vector<VerdictReport> negative_controls(const TestMatrixEntry& entry);

/// A component code whose generator x - a does not right-divide x^n - 1.
ComponentCode corrupted_component(const FieldPtr& field, const AutExponent& aut, int n);

std::vector<TestMatrixEntry> default_matrix();

}  // namespace skewcyc
