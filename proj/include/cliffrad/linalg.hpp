#pragma once

#include <stdexcept>
#include <vector>

#include "cliffrad/rational.hpp"

namespace cliffrad {

using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;  // row major

// Solves A X = B exactly for square nonsingular A (B holds multiple
// right-hand sides as columns).  Gaussian elimination with nonzero pivoting.
inline RatMatrix solve_exact(RatMatrix a, RatMatrix b) {
    const size_t n = a.size();
    if (n == 0) return b;
    if (b.size() != n) throw std::invalid_argument("solve_exact: shape mismatch");
    const size_t m = b[0].size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && is_zero(a[piv][col])) ++piv;
        if (piv == n) throw std::domain_error("solve_exact: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        const Rational inv = 1 / a[col][col];
        for (size_t j = col; j < n; ++j) a[col][j] *= inv;
        for (size_t j = 0; j < m; ++j) b[col][j] *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || is_zero(a[r][col])) continue;
            const Rational f = a[r][col];
            for (size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
            for (size_t j = 0; j < m; ++j) b[r][j] -= f * b[col][j];
        }
    }
    return b;
}

// Incremental exact span tracker: rows are kept in reduced form, each with a
// distinct pivot column.  Used for rank-based deduplication.
class SpanTracker {
  public:
    // Reduces v against the current span; if independent, absorbs it and
    // returns true.
    bool add(RatVector v) {
        reduce(v);
        size_t p = pivot_of(v);
        if (p == v.size()) return false;
        const Rational inv = 1 / v[p];
        for (auto& x : v) x *= inv;
        // Back-eliminate to keep the stored rows fully reduced; a single
        // forward pass in reduce() then suffices.
        for (auto& row : rows_) {
            if (is_zero(row[p])) continue;
            const Rational f = row[p];
            for (size_t j = 0; j < row.size(); ++j) row[j] -= f * v[j];
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

    // True if v lies in the current span.
    bool contains(RatVector v) const {
        reduce(v);
        return pivot_of(v) == v.size();
    }

    size_t rank() const { return rows_.size(); }

  private:
    void reduce(RatVector& v) const {
        for (size_t i = 0; i < rows_.size(); ++i) {
            const Rational& c = v[pivots_[i]];
            if (is_zero(c)) continue;
            const Rational f = c;  // rows are pivot-normalized
            for (size_t j = 0; j < v.size(); ++j) v[j] -= f * rows_[i][j];
        }
    }
    static size_t pivot_of(const RatVector& v) {
        for (size_t j = 0; j < v.size(); ++j)
            if (!is_zero(v[j])) return j;
        return v.size();
    }

    std::vector<RatVector> rows_;
    std::vector<size_t> pivots_;
};

}  // namespace cliffrad
