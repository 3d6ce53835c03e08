#ifndef PCALG_LINALG_HPP
#define PCALG_LINALG_HPP

#include "pcalg/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace pcalg {

// Sparse row over Q(sqrt2,sqrt3): (column, coefficient) pairs sorted by
// column index, no zero coefficients. Column order encodes the monomial
// order, so the RREF below is the reduced-echelon normal form the solver
// contracts promise (pivot coefficient 1, pivot column absent elsewhere).
using SparseRow = std::vector<std::pair<int, Scalar>>;

SparseRow row_sub_scaled(const SparseRow& x, const SparseRow& y, const Scalar& factor);
SparseRow row_scaled(const SparseRow& x, const Scalar& factor);

// Reduced row echelon form, exact arithmetic, deterministic: pivots are
// the first nonzero column of each surviving row. Canonical for the row
// space regardless of input order.
class Rref {
  public:
    void add_row(SparseRow row);
    const std::vector<SparseRow>& rows() const { return rows_; }
    const std::vector<int>& pivot_cols() const { return pivots_; }
    size_t rank() const { return rows_.size(); }
    // reduces r against the current rows; nonzero residue is returned,
    // nothing is inserted
    SparseRow reduce(SparseRow r) const;
    // true iff r lies in the current row space
    bool contains(SparseRow r) const { return reduce(std::move(r)).empty(); }

  private:
    std::vector<SparseRow> rows_;   // sorted by pivot column
    std::vector<int> pivots_;
};

// Nullspace basis of the ncols-column system {rows}, echelon-normalized:
// each basis vector has coefficient 1 on its distinguishing (free) column
// and that column is zero in the other basis vectors.
std::vector<SparseRow> nullspace(const std::vector<SparseRow>& rows, int ncols);

size_t rank_of(const std::vector<SparseRow>& rows);

// Solution of sum_j coeffs[j] * cols[j] + residual = rhs; residual empty
// means rhs lies in the span exactly.
struct SpanSolution {
    std::vector<Scalar> coeffs;
    SparseRow residual;
    bool exact() const { return residual.empty(); }
};

// Columns are considered in the given order; the solution is supported on
// the canonical independent subset (earliest columns win), which is the
// deterministic tie-break the closure solver documents.
SpanSolution solve_in_span(const std::vector<SparseRow>& cols, const SparseRow& rhs);

} // namespace pcalg

#endif
