#pragma once

#include "bihom/matrix.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace bihom {

/// Structure constants of a bilinear map on a dim-n space:
/// e_i ∘ e_j = sum_k c[i][j][k] e_k.
class BilinearProduct {
public:
    BilinearProduct() = default;
    explicit BilinearProduct(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

    /// table[i][j] is the coordinate vector of e_i ∘ e_j.
    static BilinearProduct from_table(const std::vector<std::vector<Vector>>& table) {
        BilinearProduct p(table.size());
        for (std::size_t i = 0; i < p.dim_; ++i) {
            detail::require_shape(table[i].size() == p.dim_, "product table: row " + std::to_string(i) +
                                                                  " has wrong length");
            for (std::size_t j = 0; j < p.dim_; ++j) {
                detail::require_shape(table[i][j].size() == p.dim_, "product table: entry (" + std::to_string(i) +
                                                                         "," + std::to_string(j) +
                                                                         ") has wrong length");
                for (std::size_t k = 0; k < p.dim_; ++k)
                    p.at(i, j, k) = table[i][j][k];
            }
        }
        return p;
    }

    /// Tabulates an arbitrary bilinear map given on basis pairs.
    template <class F>
    static BilinearProduct tabulate(std::size_t dim, F&& on_basis) {
        BilinearProduct p(dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                Vector v = on_basis(i, j);
                detail::require_shape(v.size() == dim, "tabulate: value has wrong length");
                for (std::size_t k = 0; k < dim; ++k)
                    p.at(i, j, k) = std::move(v[k]);
            }
        return p;
    }

    std::size_t dim() const { return dim_; }

    Rational& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
    const Rational& at(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }

    /// Coordinates of e_i ∘ e_j.
    std::span<const Rational> operator()(std::size_t i, std::size_t j) const {
        return std::span<const Rational>(c_).subspan((i * dim_ + j) * dim_, dim_);
    }

    Vector apply(std::span<const Rational> x, std::span<const Rational> y) const {
        detail::require_shape(x.size() == dim_ && y.size() == dim_, "product applied to vectors of wrong length");
        Vector out(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero())
                continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j].is_zero())
                    continue;
                axpy(out, x[i] * y[j], (*this)(i, j));
            }
        }
        return out;
    }

    /// Matrix of y ↦ x ∘ y.
    Matrix left_matrix(std::span<const Rational> x) const {
        Matrix m(dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            auto col = apply(x, unit_vector(dim_, j));
            for (std::size_t k = 0; k < dim_; ++k)
                m(k, j) = col[k];
        }
        return m;
    }

    /// Matrix of x ↦ x ∘ y.
    Matrix right_matrix(std::span<const Rational> y) const {
        Matrix m(dim_, dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            auto col = apply(unit_vector(dim_, i), y);
            for (std::size_t k = 0; k < dim_; ++k)
                m(k, i) = col[k];
        }
        return m;
    }

    std::span<const Rational> entries() const { return c_; }
    bool is_zero() const { return bihom::is_zero(c_); }

    /// Nested table form, table[i][j] = e_i ∘ e_j.
    std::vector<std::vector<Vector>> table() const {
        std::vector<std::vector<Vector>> t(dim_, std::vector<Vector>(dim_));
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                t[i][j] = Vector((*this)(i, j).begin(), (*this)(i, j).end());
        return t;
    }

    BilinearProduct& operator+=(const BilinearProduct& o) {
        detail::require_shape(dim_ == o.dim_, "product sum: dimension mismatch");
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] += o.c_[i];
        return *this;
    }
    BilinearProduct& operator-=(const BilinearProduct& o) {
        detail::require_shape(dim_ == o.dim_, "product difference: dimension mismatch");
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] -= o.c_[i];
        return *this;
    }
    BilinearProduct& operator*=(const Rational& s) {
        for (auto& x : c_)
            x *= s;
        return *this;
    }

    friend BilinearProduct operator+(BilinearProduct a, const BilinearProduct& b) { return a += b; }
    friend BilinearProduct operator-(BilinearProduct a, const BilinearProduct& b) { return a -= b; }
    friend BilinearProduct operator*(const Rational& s, BilinearProduct p) { return p *= s; }
    friend bool operator==(const BilinearProduct&, const BilinearProduct&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Rational> c_;
};

/// Structure constants in the basis formed by the columns of P: c'(i, j) = P⁻¹(P e_i ∘ P e_j).
inline BilinearProduct change_basis(const BilinearProduct& p, const Matrix& basis, const Matrix& basis_inverse) {
    return BilinearProduct::tabulate(p.dim(), [&](std::size_t i, std::size_t j) {
        return basis_inverse.apply(p.apply(basis.column(i), basis.column(j)));
    });
}

} // namespace bihom
