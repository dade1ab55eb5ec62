#pragma once

// Dense row-space linear algebra over F_q: canonical row reduction, kernels
// under the standard inner product and span enumeration.

#include <cstdint>
#include <functional>
#include <vector>

#include "skewcyc/ring_r.hpp"

namespace skewcyc {

using FqMatrix = std::vector<FqVector>;

/// Reduced row echelon form with zero rows dropped; equal row spaces give
/// identical results.
FqMatrix rref(FqMatrix rows);
std::size_t rank(const FqMatrix& rows);

/// Basis of { y : <row, y> = 0 for every row }, vectors of length `ncols`.
FqMatrix orthogonal_complement(const FiniteField& field, const FqMatrix& rows, std::size_t ncols);

/// `basis` must already be in rref form.
bool in_row_space(const FqMatrix& basis, const FqVector& v);

bool same_row_space(const FqMatrix& a, const FqMatrix& b);

/// q^dim, or UINT64_MAX on overflow.
std::uint64_t span_size(const FiniteField& field, std::size_t dim);

/// Calls `visit` on every F_q-combination of the rows of `basis` (which must be
/// linearly independent). Throws EnumerationTooLarge beyond `bound` vectors.
void for_each_in_span(const FiniteField& field, const FqMatrix& basis, std::size_t ncols, std::uint64_t bound,
                      const std::function<void(const FqVector&)>& visit);

FqVector zero_vector(const FiniteField& field, std::size_t n);
FieldElem dot(std::span<const FieldElem> x, std::span<const FieldElem> y);
RingElem dot(std::span<const RingElem> x, std::span<const RingElem> y);

}  // namespace skewcyc
