#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

#include "manin/rational.hpp"

namespace manin {

using Vec = std::vector<Rational>;

/// Dense matrix over the rationals. Everything here is exact; there is no
/// epsilon anywhere in this library.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        e_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            e_.insert(e_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("ragged row list");
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const {
        require_same_shape(o);
        Matrix r = *this;
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] += o.e_[k];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        require_same_shape(o);
        Matrix r = *this;
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] -= o.e_[k];
        return r;
    }
    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.e_) x = -x;
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rational& a = at(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
            }
        return r;
    }
    Matrix operator*(const Rational& s) const {
        Matrix r = *this;
        for (auto& x : r.e_) x *= s;
        return r;
    }

    Vec apply(const Vec& v) const {
        if (v.size() != cols_) throw std::invalid_argument("matrix apply shape mismatch");
        Vec r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Vec row(std::size_t i) const {
        Vec r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
        return r;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (x != 0) return false;
        return true;
    }
    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    /// Paste `o` into this matrix with upper-left corner at (i0, j0).
    void paste(std::size_t i0, std::size_t j0, const Matrix& o) {
        if (i0 + o.rows_ > rows_ || j0 + o.cols_ > cols_)
            throw std::invalid_argument("paste out of range");
        for (std::size_t i = 0; i < o.rows_; ++i)
            for (std::size_t j = 0; j < o.cols_; ++j) at(i0 + i, j0 + j) = o.at(i, j);
    }
    Matrix slice(std::size_t i0, std::size_t j0, std::size_t nrows, std::size_t ncols) const {
        if (i0 + nrows > rows_ || j0 + ncols > cols_)
            throw std::invalid_argument("slice out of range");
        Matrix r(nrows, ncols);
        for (std::size_t i = 0; i < nrows; ++i)
            for (std::size_t j = 0; j < ncols; ++j) r.at(i, j) = at(i0 + i, j0 + j);
        return r;
    }

    /// Reduced row echelon form: leading entries are 1, alone in their
    /// column, pivots move strictly right, zero rows at the bottom. This is
    /// the canonical form behind all subspace equality in the library.
    Matrix rref() const {
        Matrix m = *this;
        std::size_t lead = 0;
        for (std::size_t r = 0; r < m.rows_ && lead < m.cols_; ++r) {
            std::size_t i = r;
            while (i < m.rows_ && m.at(i, lead) == 0) ++i;
            if (i == m.rows_) {
                ++lead;
                --r;
                continue;
            }
            if (i != r)
                for (std::size_t j = 0; j < m.cols_; ++j) std::swap(m.at(i, j), m.at(r, j));
            Rational piv = m.at(r, lead);
            for (std::size_t j = 0; j < m.cols_; ++j) m.at(r, j) /= piv;
            for (std::size_t k = 0; k < m.rows_; ++k) {
                if (k == r) continue;
                Rational f = m.at(k, lead);
                if (f == 0) continue;
                for (std::size_t j = 0; j < m.cols_; ++j) m.at(k, j) -= f * m.at(r, j);
            }
            ++lead;
        }
        return m;
    }

    std::size_t rank() const {
        Matrix r = rref();
        std::size_t n = 0;
        for (std::size_t i = 0; i < r.rows_; ++i) {
            bool zero = true;
            for (std::size_t j = 0; j < r.cols_; ++j)
                if (r.at(i, j) != 0) { zero = false; break; }
            if (!zero) ++n;
        }
        return n;
    }

    /// Basis of { x : Ax = 0 }, one kernel vector per row, given in the
    /// standard free-variable parametrization of the RREF (so the result is
    /// deterministic).
    Matrix kernel() const {
        Matrix r = rref();
        std::vector<std::ptrdiff_t> pivot_of_col(cols_, -1);
        std::size_t nr = 0;
        for (std::size_t i = 0; i < r.rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (r.at(i, j) != 0) {
                    pivot_of_col[j] = static_cast<std::ptrdiff_t>(i);
                    nr = i + 1;
                    break;
                }
        std::vector<std::size_t> free_cols;
        for (std::size_t j = 0; j < cols_; ++j)
            if (pivot_of_col[j] < 0) free_cols.push_back(j);
        Matrix k(free_cols.size(), cols_);
        for (std::size_t v = 0; v < free_cols.size(); ++v) {
            std::size_t fc = free_cols[v];
            k.at(v, fc) = 1;
            for (std::size_t j = 0; j < cols_; ++j)
                if (pivot_of_col[j] >= 0)
                    k.at(v, j) = -r.at(static_cast<std::size_t>(pivot_of_col[j]), fc);
        }
        (void)nr;
        return k;
    }

    /// Solve Ax = b; empty optional when inconsistent. With free variables
    /// the particular solution sets them to zero.
    std::optional<Vec> solve(const Vec& b) const {
        if (b.size() != rows_) throw std::invalid_argument("solve shape mismatch");
        Matrix aug(rows_, cols_ + 1);
        aug.paste(0, 0, *this);
        for (std::size_t i = 0; i < rows_; ++i) aug.at(i, cols_) = b[i];
        Matrix r = aug.rref();
        Vec x(cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            std::size_t j = 0;
            while (j < cols_ + 1 && r.at(i, j) == 0) ++j;
            if (j == cols_ + 1) continue;
            if (j == cols_) return std::nullopt;
            x[j] = r.at(i, cols_);
        }
        return x;
    }

    std::optional<Matrix> inverse() const {
        if (rows_ != cols_) return std::nullopt;
        Matrix aug(rows_, 2 * cols_);
        aug.paste(0, 0, *this);
        aug.paste(0, cols_, identity(rows_));
        Matrix r = aug.rref();
        if (r.slice(0, 0, rows_, cols_) != identity(rows_)) return std::nullopt;
        return r.slice(0, cols_, rows_, cols_);
    }

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<Rational> e_;
};

inline Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() + b.rows(), a.cols() + b.cols());
    r.paste(0, 0, a);
    r.paste(a.rows(), a.cols(), b);
    return r;
}

inline Rational dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot shape mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec shape mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec shape mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

inline Vec vec_scale(const Rational& s, const Vec& a) {
    Vec r = a;
    for (auto& x : r) x *= s;
    return r;
}

inline Vec vec_concat(const Vec& a, const Vec& b) {
    Vec r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

inline bool is_zero_vec(const Vec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

inline Vec basis_vec(std::size_t n, std::size_t i) {
    Vec r(n);
    r[i] = 1;
    return r;
}

}  // namespace manin
