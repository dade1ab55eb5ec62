#include "skewcyc/linalg.hpp"

namespace skewcyc {

FqMatrix rref(FqMatrix rows) {
    if (rows.empty()) return rows;
    const std::size_t ncols = rows.front().size();
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < ncols && lead_row < rows.size(); ++col) {
        std::size_t pivot = lead_row;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[lead_row]);
        const FieldElem inv = rows[lead_row][col].inverse();
        for (auto& x : rows[lead_row]) x = x * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead_row || rows[r][col].is_zero()) continue;
            const FieldElem factor = rows[r][col];
            for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= factor * rows[lead_row][c];
        }
        ++lead_row;
    }
    rows.resize(lead_row);
    return rows;
}

std::size_t rank(const FqMatrix& rows) { return rref(rows).size(); }

FqMatrix orthogonal_complement(const FiniteField& field, const FqMatrix& rows, std::size_t ncols) {
    const FqMatrix basis = rref(rows);
    std::vector<int> pivot_of_col(ncols, -1);
    for (std::size_t r = 0; r < basis.size(); ++r)
        for (std::size_t c = 0; c < ncols; ++c)
            if (!basis[r][c].is_zero()) {
                pivot_of_col[c] = static_cast<int>(r);
                break;
            }
    FqMatrix out;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        FqVector y = zero_vector(field, ncols);
        y[free] = field.one();
        for (std::size_t c = 0; c < ncols; ++c)
            if (pivot_of_col[c] >= 0) y[c] = -basis[pivot_of_col[c]][free];
        out.push_back(std::move(y));
    }
    return out;
}

bool in_row_space(const FqMatrix& basis, const FqVector& v) {
    FqVector rem = v;
    for (const auto& row : basis) {
        std::size_t c = 0;
        while (c < row.size() && row[c].is_zero()) ++c;
        if (c == row.size() || rem[c].is_zero()) continue;
        const FieldElem factor = rem[c];
        for (std::size_t k = c; k < row.size(); ++k) rem[k] -= factor * row[k];
    }
    for (const auto& x : rem)
        if (!x.is_zero()) return false;
    return true;
}

bool same_row_space(const FqMatrix& a, const FqMatrix& b) { return rref(a) == rref(b); }

std::uint64_t span_size(const FiniteField& field, std::size_t dim) {
    std::uint64_t r = 1;
    for (std::size_t k = 0; k < dim; ++k) {
        if (r > UINT64_MAX / field.order()) return UINT64_MAX;
        r *= field.order();
    }
    return r;
}

void for_each_in_span(const FiniteField& field, const FqMatrix& basis, std::size_t ncols, std::uint64_t bound,
                      const std::function<void(const FqVector&)>& visit) {
    const std::uint64_t total = span_size(field, basis.size());
    if (total > bound)
        throw Error(ErrorKind::EnumerationTooLarge,
                    "span has q^" + std::to_string(basis.size()) + " vectors, bound is " + std::to_string(bound));
    // Odometer over coefficient codes; acc = sum_j s_j * basis[j] is updated
    // by (s_new - s_old) * basis[j] for every digit that changes.
    std::vector<std::uint32_t> digit(basis.size(), 0);
    FqVector acc = zero_vector(field, ncols);
    visit(acc);
    for (std::uint64_t step = 1; step < total; ++step) {
        for (std::size_t pos = 0; pos < digit.size(); ++pos) {
            const FieldElem old_s = field.from_code(digit[pos]);
            digit[pos] = (digit[pos] + 1) % field.order();
            const FieldElem delta = field.from_code(digit[pos]) - old_s;
            for (std::size_t c = 0; c < ncols; ++c) acc[c] += delta * basis[pos][c];
            if (digit[pos] != 0) break;
        }
        visit(acc);
    }
}

FqVector zero_vector(const FiniteField& field, std::size_t n) { return FqVector(n, field.zero()); }

FieldElem dot(std::span<const FieldElem> x, std::span<const FieldElem> y) {
    if (x.size() != y.size()) throw Error(ErrorKind::LengthMismatch, "inner product of different lengths");
    if (x.empty()) throw Error(ErrorKind::LengthMismatch, "inner product of empty vectors");
    FieldElem s = x[0].field().zero();
    for (std::size_t j = 0; j < x.size(); ++j) s += x[j] * y[j];
    return s;
}

RingElem dot(std::span<const RingElem> x, std::span<const RingElem> y) {
    if (x.size() != y.size()) throw Error(ErrorKind::LengthMismatch, "inner product of different lengths");
    if (x.empty()) throw Error(ErrorKind::LengthMismatch, "inner product of empty vectors");
    RingElem s = RingElem::zero(x[0].field());
    for (std::size_t j = 0; j < x.size(); ++j) s += x[j] * y[j];
    return s;
}

}  // namespace skewcyc
