#pragma once

// Exact dense linear algebra over the rationals: reduced row echelon form,
// rank, nullspaces, span membership and span comparison.
//
// The elimination core works on integer rows (each input row is scaled by the
// lcm of its denominators, which leaves the row space unchanged) and keeps
// growth bounded by dividing every updated row by its gcd.  Division-free
// updates make exactness trivial and let the inner loop skip zero entries,
// which matters: the matrices here are mostly 0/1.

#include "mems/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mems {

template <typename Scalar = Rational>
class DenseMatrix {
  public:
    DenseMatrix() : rows_(0), cols_(0) {}
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Scalar(0)) {}

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    bool operator==(const DenseMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
    }
    bool operator!=(const DenseMatrix& other) const { return !(*this == other); }

    DenseMatrix transpose() const {
        DenseMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    // Optional human-readable labels; empty means absent.
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;

  private:
    std::size_t rows_, cols_;
    std::vector<Scalar> entries_;
};

using RationalMatrix = DenseMatrix<Rational>;

inline RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row count mismatch");
    RationalMatrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
    }
    return m;
}

inline RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column count mismatch");
    RationalMatrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
    return m;
}

namespace detail {

// Integer row images of a rational matrix: row r is scaled by the lcm of its
// denominators.  Row scaling preserves the row space, rank and pivot columns.
inline std::vector<std::vector<Int>> integer_rows(const RationalMatrix& m) {
    std::vector<std::vector<Int>> rows(m.rows(), std::vector<Int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int scale = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Int den = boost::multiprecision::denominator(m.at(i, j));
            scale = boost::multiprecision::lcm(scale, den);
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto& q = m.at(i, j);
            rows[i][j] = boost::multiprecision::numerator(q) *
                         (scale / boost::multiprecision::denominator(q));
        }
    }
    return rows;
}

inline void normalize_row_gcd(std::vector<Int>& row) {
    Int g = 0;
    for (const Int& x : row) {
        if (x != 0) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(x));
        if (g == 1) return;
    }
    if (g <= 1) return;
    for (Int& x : row) x /= g;
}

// Division-free Gauss(-Jordan) elimination on integer rows.  Scans columns
// left to right, swaps the first usable row up, and replaces every other row
// k having a nonzero entry a in the pivot column by p*row_k - a*row_r,
// followed by a gcd renormalization.  Returns the pivot columns; on return
// the pivot rows occupy positions 0..rank-1 in pivot-column order.
inline std::vector<std::size_t> eliminate(std::vector<std::vector<Int>>& rows,
                                          std::size_t cols, bool reduce_above) {
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
        std::size_t sel = next;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[next]);
        const std::size_t lo = reduce_above ? 0 : next + 1;
        for (std::size_t k = lo; k < rows.size(); ++k) {
            if (k == next || rows[k][c] == 0) continue;
            const Int p = rows[next][c];
            const Int a = rows[k][c];
            for (std::size_t j = 0; j < cols; ++j) {
                if (rows[next][j] == 0) {
                    if (rows[k][j] != 0) rows[k][j] *= p;
                } else {
                    rows[k][j] = p * rows[k][j] - a * rows[next][j];
                }
            }
            normalize_row_gcd(rows[k]);
        }
        pivots.push_back(c);
        ++next;
    }
    return pivots;
}

}  // namespace detail

// Reduced row echelon form (leading-1 pivots, zero rows last) plus the pivot
// column list.  Canonical for the row space of the input.
inline std::pair<RationalMatrix, std::vector<std::size_t>> rref(const RationalMatrix& m) {
    auto rows = detail::integer_rows(m);
    const auto pivots = detail::eliminate(rows, m.cols(), /*reduce_above=*/true);
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const Int& lead = rows[i][pivots[i]];
        const bool flip = lead < 0;  // the constructor needs a positive denominator
        const Int den = flip ? Int(-lead) : lead;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (rows[i][j] != 0)
                out.at(i, j) = Rational(flip ? Int(-rows[i][j]) : rows[i][j], den);
    }
    return {out, pivots};
}

inline std::size_t rank(const RationalMatrix& m) {
    auto rows = detail::integer_rows(m);
    return detail::eliminate(rows, m.cols(), /*reduce_above=*/false).size();
}

// Nonzero rows of rref(m): the canonical basis of m's row space.
inline RationalMatrix canonical_row_basis(const RationalMatrix& m) {
    auto [r, pivots] = rref(m);
    RationalMatrix out(pivots.size(), m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = r.at(i, j);
    return out;
}

// Basis of {x : Mx = 0} as matrix columns, from the rref of M: one basis
// vector per free column, with -entry back-fill at the pivot coordinates.
inline RationalMatrix kernel(const RationalMatrix& m) {
    auto [r, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    RationalMatrix out(m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        out.at(free_cols[k], k) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            out.at(pivots[i], k) = -r.at(i, free_cols[k]);
    }
    return out;
}

// Canonical basis (rows, in rref form) of {y : y^T M = 0}.
inline RationalMatrix left_nullspace(const RationalMatrix& m) {
    return canonical_row_basis(kernel(m.transpose()).transpose());
}

// Is v a rational linear combination of m's columns?  Decided by eliminating
// the augmented system [m | v]: solvable iff no pivot lands in the last column.
inline bool in_span(const std::vector<Rational>& v, const RationalMatrix& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("in_span: dimension mismatch");
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = v[i];
    }
    auto rows = detail::integer_rows(aug);
    const auto pivots = detail::eliminate(rows, aug.cols(), /*reduce_above=*/false);
    return pivots.empty() || pivots.back() != m.cols();
}

// Do two matrices have the same column span?  Compares the canonical row
// bases of the transposes.
inline bool same_span(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("same_span: dimension mismatch");
    return canonical_row_basis(a.transpose()) == canonical_row_basis(b.transpose());
}

// Basis (columns) of col(a) ∩ col(b), computed from the two spans'
// annihilators: x lies in the intersection iff both left nullspaces kill it.
inline RationalMatrix span_intersection(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("span_intersection: dimension mismatch");
    const RationalMatrix la = left_nullspace(a);
    const RationalMatrix lb = left_nullspace(b);
    RationalMatrix stacked(la.rows() + lb.rows(), a.rows());
    for (std::size_t i = 0; i < la.rows(); ++i)
        for (std::size_t j = 0; j < a.rows(); ++j) stacked.at(i, j) = la.at(i, j);
    for (std::size_t i = 0; i < lb.rows(); ++i)
        for (std::size_t j = 0; j < a.rows(); ++j) stacked.at(la.rows() + i, j) = lb.at(i, j);
    if (stacked.rows() == 0) return RationalMatrix::identity(a.rows());
    return kernel(stacked);
}

}  // namespace mems
