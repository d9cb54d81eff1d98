#pragma once

#include "cosetlab/numeric.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace cosetlab {

// Reduced row echelon basis of a span of rational vectors.  Supports
// incremental insertion and exact membership tests; the workhorse behind
// parabolic-closure computations.
class RowSpace {
public:
    explicit RowSpace(int dim) : dim_(dim) {}

    // Reduce v against the current rows in place; afterwards v is the residue.
    void reduce(Vec& v) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Rat& c = v[pivots_[k]];
            if (c != 0) {
                Rat f = c;  // pivot entries are normalized to 1
                for (int j = 0; j < dim_; ++j) v[j] -= f * rows_[k][j];
            }
        }
    }

    bool contains(Vec v) const {
        reduce(v);
        return is_zero(v);
    }

    // Returns true if v enlarged the span.
    bool insert(Vec v) {
        reduce(v);
        int p = -1;
        for (int j = 0; j < dim_; ++j)
            if (v[j] != 0) { p = j; break; }
        if (p < 0) return false;
        Rat inv = 1 / v[p];
        for (int j = 0; j < dim_; ++j) v[j] *= inv;
        // Back-substitute into existing rows to keep the basis reduced.
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Rat c = rows_[k][p];
            if (c != 0)
                for (int j = 0; j < dim_; ++j) rows_[k][j] -= c * v[j];
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

    int rank() const { return static_cast<int>(rows_.size()); }
    int dim() const { return dim_; }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

private:
    int dim_;
    std::vector<Vec> rows_;
    std::vector<int> pivots_;
};

// Basis of { v : <row, v> = 0 for all rows }.
inline std::vector<Vec> nullspace(const std::vector<Vec>& rows, int dim) {
    RowSpace rs(dim);
    for (const Vec& r : rows) rs.insert(r);
    std::vector<bool> is_pivot(dim, false);
    for (int p : rs.pivots()) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (int j = 0; j < dim; ++j) {
        if (is_pivot[j]) continue;
        Vec v(dim, Rat(0));
        v[j] = 1;
        for (std::size_t k = 0; k < rs.rows().size(); ++k)
            v[rs.pivots()[k]] = -rs.rows()[k][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline int rank_of(const std::vector<Vec>& rows, int dim) {
    RowSpace rs(dim);
    for (const Vec& r : rows) rs.insert(r);
    return rs.rank();
}

// Solve A x = b for square nonsingular rational A (small systems only).
inline Vec solve_square(std::vector<Vec> a, Vec b) {
    const int n = static_cast<int>(a.size());
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (a[r][c] != 0) { p = r; break; }
        assert(p >= 0 && "singular system");
        std::swap(a[c], a[p]);
        std::swap(b[c], b[p]);
        Rat inv = 1 / a[c][c];
        for (int j = c; j < n; ++j) a[c][j] *= inv;
        b[c] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rat f = a[r][c];
            for (int j = c; j < n; ++j) a[r][j] -= f * a[c][j];
            b[r] -= f * b[c];
        }
    }
    return b;
}

// Exact rank of an integer matrix by fraction-free elimination: rows are
// combined by cross-multiplication and renormalized by their gcd, so all
// arithmetic stays in Z.  Pivots of minimal absolute value are preferred,
// which keeps entry growth negligible on sparse incidence matrices.
inline int integer_matrix_rank(std::vector<std::vector<Int>> m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    auto normalize = [&](std::vector<Int>& row) {
        Int g = 0;
        for (const Int& x : row) {
            if (x != 0) g = gcd(g, x);
            if (g == 1) break;
        }
        if (g > 1)
            for (Int& x : row) x /= g;
    };
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            if (piv < 0 || mpz_cmpabs(m[i][c].get_mpz_t(), m[piv][c].get_mpz_t()) < 0) piv = i;
            if (mpz_cmpabs_ui(m[piv][c].get_mpz_t(), 1) == 0) break;
        }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        for (int i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            const Int a = m[r][c], b = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] = a * m[i][j] - b * m[r][j];
            normalize(m[i]);
        }
        ++r;
    }
    return r;
}

}  // namespace cosetlab
