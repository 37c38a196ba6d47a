#pragma once

#include "bihom/rational.hpp"
#include "bihom/report.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bihom {

// Linear maps act on column vectors: f(e_j) = sum_i M(i, j) e_i.

inline Vector zero_vector(std::size_t n) { return Vector(n); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v[i] = 1;
    return v;
}

inline bool is_zero(std::span<const Rational> v) {
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

/// y += a * x
inline void axpy(Vector& y, const Rational& a, std::span<const Rational> x) {
    detail::require_shape(y.size() == x.size(), "axpy: length mismatch");
    if (a.is_zero())
        return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (!x[i].is_zero())
            y[i] += a * x[i];
}

inline Vector operator+(Vector a, const Vector& b) {
    axpy(a, Rational(1), b);
    return a;
}

inline Vector operator-(Vector a, const Vector& b) {
    axpy(a, Rational(-1), b);
    return a;
}

inline Vector operator*(const Rational& s, Vector v) {
    for (auto& x : v)
        x *= s;
    return v;
}

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    /// Row-major literal, e.g. Matrix{{1, 2}, {3, 4}}.
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            detail::require_shape(row.size() == cols_, "ragged matrix literal");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    static Matrix diagonal(std::span<const Rational> d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i)
            m(i, i) = d[i];
        return m;
    }

    static Matrix diagonal(std::initializer_list<Rational> d) {
        return diagonal(std::span<const Rational>(d.begin(), d.size()));
    }

    static Matrix from_columns(std::span<const Vector> columns, std::size_t rows) {
        Matrix m(rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            detail::require_shape(columns[j].size() == rows, "column length mismatch");
            for (std::size_t i = 0; i < rows; ++i)
                m(i, j) = columns[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Rational> entries() const { return data_; }

    Vector column(std::size_t j) const {
        Vector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            v[i] = (*this)(i, j);
        return v;
    }

    Vector row(std::size_t i) const { return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

    Vector apply(std::span<const Rational> v) const {
        detail::require_shape(v.size() == cols_, "matrix-vector: expected length " + std::to_string(cols_) +
                                                     ", got " + std::to_string(v.size()));
        Vector out(rows_);
        for (std::size_t j = 0; j < cols_; ++j) {
            if (v[j].is_zero())
                continue;
            for (std::size_t i = 0; i < rows_; ++i) {
                const auto& a = (*this)(i, j);
                if (!a.is_zero())
                    out[i] += a * v[j];
            }
        }
        return out;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const { return bihom::is_zero(data_); }

    Matrix& operator+=(const Matrix& o) {
        detail::require_shape(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum: shape mismatch");
        for (std::size_t i = 0; i < data_.size(); ++i)
            data_[i] += o.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        detail::require_shape(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference: shape mismatch");
        for (std::size_t i = 0; i < data_.size(); ++i)
            data_[i] -= o.data_[i];
        return *this;
    }
    Matrix& operator*=(const Rational& s) {
        for (auto& x : data_)
            x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Rational& s, Matrix m) { return m *= s; }
    friend Matrix operator-(Matrix m) { return m *= Rational(-1); }
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
    detail::require_shape(a.cols() == b.rows(), "mat_mul: " + std::to_string(a.rows()) + "x" +
                                                    std::to_string(a.cols()) + " times " +
                                                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const auto& aik = a(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero())
                    c(i, j) += aik * b(k, j);
        }
    return c;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

inline Matrix power(const Matrix& m, std::size_t k) {
    detail::require_shape(m.is_square(), "power of a non-square matrix");
    Matrix r = Matrix::identity(m.rows());
    for (std::size_t i = 0; i < k; ++i)
        r = r * m;
    return r;
}

/// (A ⊗ B)[(i,j),(k,l)] = A[i][k] * B[j][l], pair (i,j) flattened as i * rows(B) + j.
inline Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t kk = 0; kk < a.cols(); ++kk) {
            const auto& aik = a(i, kk);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.rows(); ++j)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    k(i * b.rows() + j, kk * b.cols() + l) = aik * b(j, l);
        }
    return k;
}

/// Reduced row echelon form computed by rational Gauss–Jordan elimination.
struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;
    std::size_t rank() const { return pivot_columns.size(); }
};

inline RowEchelon row_reduce(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col).is_zero())
            ++pivot;
        if (pivot == m.rows())
            continue;
        if (pivot != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(row, j), m(pivot, j));
        const Rational inv = Rational(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            if (!m(row, j).is_zero())
                m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero())
                continue;
            const Rational factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero())
                    m(i, j) -= factor * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

/// Basis of {v : m v = 0}; one vector per free column, with a 1 in that column.
inline std::vector<Vector> kernel_basis(const Matrix& m) {
    auto echelon = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : echelon.pivot_columns)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < echelon.pivot_columns.size(); ++r)
            v[echelon.pivot_columns[r]] = -echelon.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Matrix inverse(const Matrix& m) {
    detail::require_shape(m.is_square(), "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix augmented(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            augmented(i, j) = m(i, j);
        augmented(i, n + i) = 1;
    }
    auto echelon = row_reduce(std::move(augmented));
    if (echelon.rank() < n || (n > 0 && echelon.pivot_columns[n - 1] != n - 1))
        throw SingularMatrixError("matrix is singular");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = echelon.reduced(i, n + j);
    return inv;
}

inline bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

/// Some solution x of m x = rhs (free variables set to zero), or nullopt if inconsistent.
inline std::optional<Vector> solve(const Matrix& m, std::span<const Rational> rhs) {
    detail::require_shape(rhs.size() == m.rows(), "solve: right-hand side length mismatch");
    Matrix augmented(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            augmented(i, j) = m(i, j);
        augmented(i, m.cols()) = rhs[i];
    }
    auto echelon = row_reduce(std::move(augmented));
    if (!echelon.pivot_columns.empty() && echelon.pivot_columns.back() == m.cols())
        return std::nullopt;
    Vector x(m.cols());
    for (std::size_t r = 0; r < echelon.pivot_columns.size(); ++r)
        x[echelon.pivot_columns[r]] = echelon.reduced(r, m.cols());
    return x;
}

namespace detail {

/// Coordinates with respect to a fixed family of linearly independent columns.
/// Row-reduces once; each lookup is then a pivot read-off plus an exact check.
class ColumnBasis {
public:
    ColumnBasis() = default;
    ColumnBasis(std::span<const Vector> columns, std::size_t ambient) : ambient_(ambient), size_(columns.size()) {
        // Reduce [B^T] so that each basis vector gets a pivot coordinate; then the
        // coordinates of v are read off by eliminating against the reduced rows.
        Matrix bt(columns.size(), ambient);
        for (std::size_t r = 0; r < columns.size(); ++r) {
            require_shape(columns[r].size() == ambient, "basis vector length mismatch");
            for (std::size_t c = 0; c < ambient; ++c)
                bt(r, c) = columns[r][c];
        }
        // Track the row operations so coordinates map back to the original basis.
        Matrix augmented(columns.size(), ambient + columns.size());
        for (std::size_t r = 0; r < columns.size(); ++r) {
            for (std::size_t c = 0; c < ambient; ++c)
                augmented(r, c) = bt(r, c);
            augmented(r, ambient + r) = 1;
        }
        auto echelon = row_reduce(std::move(augmented));
        ensure(echelon.rank() == columns.size() &&
                   (columns.empty() || echelon.pivot_columns.back() < ambient),
               "basis columns are linearly dependent");
        reduced_ = std::move(echelon.reduced);
        pivots_ = std::move(echelon.pivot_columns);
    }

    std::size_t size() const { return size_; }

    std::optional<Vector> coordinates(std::span<const Rational> v) const {
        require_shape(v.size() == ambient_, "coordinate lookup: length mismatch");
        // v = sum_r w_r * reduced_row_r (on the first `ambient_` columns), w_r = v[pivot_r].
        Vector residual(v.begin(), v.end());
        Vector coords(size_);
        for (std::size_t r = 0; r < pivots_.size(); ++r) {
            const Rational w = residual[pivots_[r]];
            if (w.is_zero())
                continue;
            for (std::size_t c = 0; c < ambient_; ++c)
                if (!reduced_(r, c).is_zero())
                    residual[c] -= w * reduced_(r, c);
            // reduced row r = sum_k T(r, k) * original_k
            for (std::size_t k = 0; k < size_; ++k)
                if (!reduced_(r, ambient_ + k).is_zero())
                    coords[k] += w * reduced_(r, ambient_ + k);
        }
        if (!is_zero(residual))
            return std::nullopt;
        return coords;
    }

private:
    std::size_t ambient_ = 0;
    std::size_t size_ = 0;
    Matrix reduced_;
    std::vector<std::size_t> pivots_;
};

} // namespace detail

} // namespace bihom
