#include "pcalg/linalg.hpp"

#include <algorithm>
#include <map>

namespace pcalg {

SparseRow row_sub_scaled(const SparseRow& x, const SparseRow& y, const Scalar& factor) {
    SparseRow out;
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j >= y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i++]);
        } else if (i >= x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, -(factor * y[j].second));
            ++j;
        } else {
            Scalar v = x[i].second - factor * y[j].second;
            if (!v.is_zero()) out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

SparseRow row_scaled(const SparseRow& x, const Scalar& factor) {
    SparseRow out;
    if (factor.is_zero()) return out;
    out.reserve(x.size());
    for (const auto& [c, v] : x) out.emplace_back(c, v * factor);
    return out;
}

SparseRow Rref::reduce(SparseRow r) const {
    while (!r.empty()) {
        int lead = r.front().first;
        auto it = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
        if (it == pivots_.end() || *it != lead) break;
        size_t idx = static_cast<size_t>(it - pivots_.begin());
        r = row_sub_scaled(r, rows_[idx], r.front().second);
    }
    return r;
}

void Rref::add_row(SparseRow row) {
    row = reduce(std::move(row));
    if (row.empty()) return;
    // normalize pivot to 1
    Scalar inv = row.front().second.inverse();
    for (auto& [c, v] : row) v = v * inv;
    int pivot = row.front().first;
    // clear the new pivot column from existing rows
    for (auto& existing : rows_) {
        auto it = std::lower_bound(
            existing.begin(), existing.end(), pivot,
            [](const std::pair<int, Scalar>& e, int col) { return e.first < col; });
        if (it != existing.end() && it->first == pivot)
            existing = row_sub_scaled(existing, row, it->second);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    size_t idx = static_cast<size_t>(pos - pivots_.begin());
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + idx, std::move(row));
}

std::vector<SparseRow> nullspace(const std::vector<SparseRow>& rows, int ncols) {
    Rref rref;
    for (const auto& r : rows) rref.add_row(r);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : rref.pivot_cols()) is_pivot[p] = true;

    // map pivot col -> row index for back substitution
    std::map<int, size_t> pivot_row;
    for (size_t i = 0; i < rref.pivot_cols().size(); ++i) pivot_row[rref.pivot_cols()[i]] = i;

    std::vector<SparseRow> basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        SparseRow v;
        v.emplace_back(free, Scalar(1));
        for (size_t i = 0; i < rref.rows().size(); ++i) {
            const SparseRow& row = rref.rows()[i];
            auto it = std::lower_bound(
                row.begin(), row.end(), free,
                [](const std::pair<int, Scalar>& e, int col) { return e.first < col; });
            if (it != row.end() && it->first == free)
                v.emplace_back(rref.pivot_cols()[i], -it->second);
        }
        std::sort(v.begin(), v.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        basis.push_back(std::move(v));
    }
    return basis;
}

size_t rank_of(const std::vector<SparseRow>& rows) {
    Rref rref;
    for (const auto& r : rows) rref.add_row(r);
    return rref.rank();
}

SpanSolution solve_in_span(const std::vector<SparseRow>& cols, const SparseRow& rhs) {
    // Gauss-Jordan on the column matrix, tracking each reduced column's
    // expression in the originals. Dependent columns are skipped, so the
    // returned solution is supported on the earliest independent columns.
    struct Tracked {
        SparseRow col;                                // reduced, leading coeff 1
        std::vector<std::pair<size_t, Scalar>> expr;  // in terms of original cols
    };
    std::map<int, Tracked> pivots;  // keyed by leading row index

    auto reduce = [&pivots](SparseRow c, std::vector<std::pair<size_t, Scalar>> expr)
        -> Tracked {
        while (!c.empty()) {
            auto it = pivots.find(c.front().first);
            if (it == pivots.end()) break;
            Scalar f = c.front().second;
            c = row_sub_scaled(c, it->second.col, f);
            for (const auto& [idx, s] : it->second.expr) expr.emplace_back(idx, -(f * s));
        }
        return Tracked{std::move(c), std::move(expr)};
    };

    for (size_t j = 0; j < cols.size(); ++j) {
        Tracked t = reduce(cols[j], {{j, Scalar(1)}});
        if (t.col.empty()) continue;  // dependent column (canonical support)
        Scalar inv = t.col.front().second.inverse();
        t.col = row_scaled(t.col, inv);
        // consolidate the expression while rescaling
        std::map<size_t, Scalar> acc;
        for (auto& [idx, s] : t.expr) {
            auto [it, fresh] = acc.emplace(idx, s * inv);
            if (!fresh) it->second += s * inv;
        }
        t.expr.clear();
        for (auto& [idx, s] : acc)
            if (!s.is_zero()) t.expr.emplace_back(idx, std::move(s));
        int lead = t.col.front().first;
        pivots.emplace(lead, std::move(t));
    }

    Tracked r = reduce(rhs, {});
    SpanSolution sol;
    sol.coeffs.assign(cols.size(), Scalar(0));
    for (const auto& [idx, s] : r.expr) sol.coeffs[idx] -= s;  // rhs = -expr·cols + residual
    sol.residual = std::move(r.col);
    return sol;
}

} // namespace pcalg
