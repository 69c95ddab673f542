#pragma once

// Dense exact linear algebra over Q. All matrices in this project are tiny
// (at most a few hundred columns from monomial bases), so a dense
// representation with eager normalization is used throughout. Row reduction
// is exact: re-reducing a reduced matrix is the identity.

#include "mackeylab/rational.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mackeylab {

class ShapeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidDegree : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw ShapeMismatch("Matrix: negative dimension");
    }
    Matrix(int rows, int cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != static_cast<size_t>(rows) * cols)
            throw ShapeMismatch("Matrix: entry count does not match shape");
    }
    /// Row-major initializer, e.g. Matrix::from_rows({{1,2},{3,4}}).
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows) {
        int r = static_cast<int>(rows.size());
        int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        Matrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[i].size()) != c)
                throw ShapeMismatch("Matrix::from_rows: ragged rows");
            for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }
    static Matrix from_columns(const std::vector<std::vector<Rational>>& cols) {
        int c = static_cast<int>(cols.size());
        int r = c == 0 ? 0 : static_cast<int>(cols[0].size());
        Matrix m(r, c);
        for (int j = 0; j < c; ++j) {
            if (static_cast<int>(cols[j].size()) != r)
                throw ShapeMismatch("Matrix::from_columns: ragged columns");
            for (int i = 0; i < r; ++i) m.at(i, j) = cols[j][i];
        }
        return m;
    }
    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Matrix column(int j) const {
        Matrix c(rows_, 1);
        for (int i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
        return c;
    }

    /// Horizontal concatenation [*this | b].
    Matrix hcat(const Matrix& b) const {
        if (rows_ != b.rows_) throw ShapeMismatch("hcat: row counts differ");
        Matrix m(rows_, cols_ + b.cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
            for (int j = 0; j < b.cols_; ++j) m.at(i, cols_ + j) = b.at(i, j);
        }
        return m;
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (e != 0) return false;
        return true;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw ShapeMismatch("operator*: inner dimensions differ");
        Matrix m(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a.at(i, k) == 0) continue;
                for (int j = 0; j < b.cols_; ++j) m.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return m;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("operator+: shapes differ");
        Matrix m(a.rows_, a.cols_);
        for (size_t k = 0; k < a.entries_.size(); ++k) m.entries_[k] = a.entries_[k] + b.entries_[k];
        return m;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("operator-: shapes differ");
        Matrix m(a.rows_, a.cols_);
        for (size_t k = 0; k < a.entries_.size(); ++k) m.entries_[k] = a.entries_[k] - b.entries_[k];
        return m;
    }
    friend Matrix operator*(const Rational& c, const Matrix& a) {
        Matrix m(a.rows_, a.cols_);
        for (size_t k = 0; k < a.entries_.size(); ++k) m.entries_[k] = c * a.entries_[k];
        return m;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> entries_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<int> pivots;  // pivot column indices, increasing
};

/// Gauss-Jordan over Q. rank = pivots.size().
inline RrefResult rref(const Matrix& m) {
    Matrix a = m;
    std::vector<int> pivots;
    int lead = 0;
    for (int col = 0; col < a.cols() && lead < a.rows(); ++col) {
        int pivot = -1;
        for (int i = lead; i < a.rows(); ++i)
            if (a.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != lead)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(lead, j));
        Rational inv = Rational(1) / a.at(lead, col);
        for (int j = 0; j < a.cols(); ++j) a.at(lead, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == lead || a.at(i, col) == 0) continue;
            Rational f = a.at(i, col);
            for (int j = 0; j < a.cols(); ++j) a.at(i, j) -= f * a.at(lead, j);
        }
        pivots.push_back(col);
        ++lead;
    }
    return {std::move(a), std::move(pivots)};
}

inline int rank(const Matrix& m) { return static_cast<int>(rref(m).pivots.size()); }

/// Null-space basis as matrix columns; count = cols - rank. Free variables
/// are set to 1 one at a time (deterministic: increasing free-column order).
inline Matrix kernel_basis(const Matrix& m) {
    auto [r, pivots] = rref(m);
    std::vector<int> free_cols;
    {
        size_t p = 0;
        for (int j = 0; j < m.cols(); ++j) {
            if (p < pivots.size() && pivots[p] == j)
                ++p;
            else
                free_cols.push_back(j);
        }
    }
    Matrix basis(m.cols(), static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        basis.at(free_cols[k], static_cast<int>(k)) = 1;
        for (size_t p = 0; p < pivots.size(); ++p)
            basis.at(pivots[p], static_cast<int>(k)) = -r.at(static_cast<int>(p), free_cols[k]);
    }
    return basis;
}

/// Column-space basis: the pivot columns of the original matrix.
inline Matrix image_basis(const Matrix& m) {
    auto pivots = rref(m).pivots;
    Matrix basis(m.rows(), static_cast<int>(pivots.size()));
    for (size_t k = 0; k < pivots.size(); ++k)
        for (int i = 0; i < m.rows(); ++i) basis.at(i, static_cast<int>(k)) = m.at(i, pivots[k]);
    return basis;
}

/// Some x with m*x = b, or nullopt. Absence of a solution is a value, not
/// an error. b must be a column with b.rows() == m.rows().
inline std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
    if (b.rows() != m.rows() || b.cols() != 1) throw ShapeMismatch("solve: bad rhs shape");
    auto [r, pivots] = rref(m.hcat(b));
    // Inconsistent iff the augmented column is a pivot.
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Matrix x(m.cols(), 1);
    for (size_t p = 0; p < pivots.size(); ++p) x.at(pivots[p], 0) = r.at(static_cast<int>(p), m.cols());
    return x;
}

/// Solves m*X = B column by column; nullopt if any column has no solution.
inline std::optional<Matrix> solve_matrix(const Matrix& m, const Matrix& b) {
    Matrix x(m.cols(), b.cols());
    for (int j = 0; j < b.cols(); ++j) {
        auto col = solve(m, b.column(j));
        if (!col) return std::nullopt;
        for (int i = 0; i < m.cols(); ++i) x.at(i, j) = col->at(i, 0);
    }
    return x;
}

/// A subquotient Z/B of an ambient space Q^n, with Z given by a column basis
/// and B a subspace of Z. Handles plain subspaces (B = 0) and plain
/// quotients (Z = Q^n) uniformly; this is the substrate for kernels,
/// cokernels, and chain-complex homology. Quotient coordinates come from
/// rref pivots, so bases are reproducible bit-for-bit.
class Subquotient {
public:
    Subquotient(int ambient_dim, Matrix sub, Matrix img)
        : ambient_(ambient_dim), sub_(std::move(sub)) {
        if (sub_.rows() != ambient_ || img.rows() != ambient_)
            throw ShapeMismatch("Subquotient: basis rows != ambient dim");
        auto in_sub = solve_matrix(sub_, img);
        if (!in_sub) throw std::invalid_argument("Subquotient: img is not contained in sub");
        auto red = rref(in_sub->transpose());
        reducer_ = std::move(red.reduced);
        pivot_rows_ = std::move(red.pivots);
        size_t p = 0;
        for (int j = 0; j < sub_.cols(); ++j) {
            if (p < pivot_rows_.size() && pivot_rows_[p] == j)
                ++p;
            else
                free_rows_.push_back(j);
        }
    }

    static Subquotient subspace(Matrix basis) {
        int n = basis.rows();
        return Subquotient(n, std::move(basis), Matrix::zero(n, 0));
    }
    static Subquotient quotient(int ambient_dim, Matrix img) {
        return Subquotient(ambient_dim, Matrix::identity(ambient_dim), std::move(img));
    }

    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(free_rows_.size()); }

    /// Ambient representative of the j-th basis class.
    Matrix lift(int j) const { return sub_.column(free_rows_[j]); }

    /// Quotient coordinates of an ambient vector (must lie in Z).
    Matrix coords(const Matrix& ambient_v) const {
        auto w = solve(sub_, ambient_v);
        if (!w) throw std::invalid_argument("Subquotient::coords: vector not in subspace");
        // Reduce modulo B: subtract the reducer rows scaled by the pivot entries.
        for (size_t r = 0; r < pivot_rows_.size(); ++r) {
            Rational f = w->at(pivot_rows_[r], 0);
            if (f == 0) continue;
            for (int j = 0; j < sub_.cols(); ++j)
                w->at(j, 0) -= f * reducer_.at(static_cast<int>(r), j);
        }
        Matrix out(dim(), 1);
        for (int j = 0; j < dim(); ++j) out.at(j, 0) = w->at(free_rows_[j], 0);
        return out;
    }

    /// Matrix of the map induced on subquotients by an ambient map
    /// a : Q^this.ambient -> Q^target.ambient carrying Z to Z and B to B.
    Matrix induced(const Matrix& a, const Subquotient& target) const {
        Matrix m(target.dim(), dim());
        for (int j = 0; j < dim(); ++j) {
            Matrix c = target.coords(a * lift(j));
            for (int i = 0; i < target.dim(); ++i) m.at(i, j) = c.at(i, 0);
        }
        return m;
    }

private:
    int ambient_;
    Matrix sub_;               // n x a, columns span Z
    Matrix reducer_;           // rref of B expressed in Z-coordinates (rows)
    std::vector<int> pivot_rows_;
    std::vector<int> free_rows_;  // Z-coordinates surviving into the quotient
};

}  // namespace mackeylab
