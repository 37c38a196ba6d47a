#pragma once

#include "bihom/algebra.hpp"
#include "bihom/matrix.hpp"
#include "bihom/product.hpp"
#include "bihom/report.hpp"
#include "bihom/representation.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bihom {

namespace axiom {
inline constexpr std::string_view cochain_skew = "cochain skew-symmetry";
inline constexpr std::string_view cochain_phi = "cochain phi-equivariance";
inline constexpr std::string_view cochain_psi = "cochain psi-equivariance";
inline constexpr std::string_view cochain_shape = "cochain dimensions";
} // namespace axiom

/// Cochains are defined from degree 1 upward.
class DegreeError : public Error {
public:
    using Error::Error;
};

/// A multilinear map f: A^n → V stored on every basis tuple; value(t)[k] is the
/// e_k-coordinate of f(e_{t_1}, …, e_{t_n}).
class Cochain {
public:
    Cochain(std::size_t degree, std::size_t adim, std::size_t vdim) : degree_(degree), adim_(adim), vdim_(vdim) {
        if (degree == 0)
            throw DegreeError("cochains start at degree 1");
        tuples_ = 1;
        for (std::size_t s = 0; s < degree; ++s)
            tuples_ *= adim;
        data_.assign(tuples_ * vdim, Rational(0));
    }

    /// Degree-1 cochain from a vdim x adim matrix.
    static Cochain from_linear_map(const Matrix& f) {
        Cochain c(1, f.cols(), f.rows());
        for (std::size_t i = 0; i < f.cols(); ++i)
            for (std::size_t k = 0; k < f.rows(); ++k)
                c.data_[i * c.vdim_ + k] = f(k, i);
        return c;
    }

    /// Degree-2 cochain with values in A from a bilinear product on A.
    static Cochain from_product(const BilinearProduct& p) {
        Cochain c(2, p.dim(), p.dim());
        std::copy(p.entries().begin(), p.entries().end(), c.data_.begin());
        return c;
    }

    Matrix to_linear_map() const {
        detail::require_shape(degree_ == 1, "to_linear_map needs a degree-1 cochain");
        Matrix f(vdim_, adim_);
        for (std::size_t i = 0; i < adim_; ++i)
            for (std::size_t k = 0; k < vdim_; ++k)
                f(k, i) = data_[i * vdim_ + k];
        return f;
    }

    BilinearProduct to_product() const {
        detail::require_shape(degree_ == 2 && vdim_ == adim_, "to_product needs a degree-2 cochain with values in A");
        return BilinearProduct::tabulate(adim_, [&](std::size_t i, std::size_t j) {
            auto v = value(i * adim_ + j);
            return Vector(v.begin(), v.end());
        });
    }

    std::size_t degree() const { return degree_; }
    std::size_t adim() const { return adim_; }
    std::size_t vdim() const { return vdim_; }
    std::size_t tuple_count() const { return tuples_; }

    std::size_t flat_index(std::span<const std::size_t> tuple) const {
        detail::require_shape(tuple.size() == degree_, "tuple length must equal the degree");
        std::size_t flat = 0;
        for (auto t : tuple) {
            detail::require_shape(t < adim_, "basis index out of range");
            flat = flat * adim_ + t;
        }
        return flat;
    }

    std::vector<std::size_t> tuple_of(std::size_t flat) const {
        std::vector<std::size_t> t(degree_);
        for (std::size_t s = degree_; s-- > 0;) {
            t[s] = flat % adim_;
            flat /= adim_;
        }
        return t;
    }

    std::span<const Rational> value(std::size_t flat) const { return {data_.data() + flat * vdim_, vdim_}; }
    std::span<const Rational> value(std::span<const std::size_t> tuple) const { return value(flat_index(tuple)); }
    void set(std::size_t flat, std::span<const Rational> v) {
        detail::require_shape(v.size() == vdim_, "cochain value has the wrong length");
        std::copy(v.begin(), v.end(), data_.begin() + flat * vdim_);
    }

    /// f(x_1, …, x_n) for arbitrary coordinate vectors.
    Vector operator()(std::span<const Vector> args) const {
        detail::require_shape(args.size() == degree_, "cochain applied to the wrong number of arguments");
        for (const auto& a : args)
            detail::require_shape(a.size() == adim_, "cochain argument has the wrong length");
        Vector out(vdim_);
        accumulate(args, 0, 0, Rational(1), out);
        return out;
    }

    std::span<const Rational> entries() const { return data_; }
    bool is_zero() const { return bihom::is_zero(data_); }

    friend Cochain operator+(Cochain a, const Cochain& b) {
        a.require_same(b);
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            a.data_[i] += b.data_[i];
        return a;
    }
    friend Cochain operator-(Cochain a, const Cochain& b) {
        a.require_same(b);
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            a.data_[i] -= b.data_[i];
        return a;
    }
    friend Cochain operator*(const Rational& s, Cochain a) {
        for (auto& x : a.data_)
            x *= s;
        return a;
    }
    friend bool operator==(const Cochain&, const Cochain&) = default;

private:
    void require_same(const Cochain& b) const {
        detail::require_shape(degree_ == b.degree_ && adim_ == b.adim_ && vdim_ == b.vdim_,
                              "cochains of different shapes");
    }

    void accumulate(std::span<const Vector> args, std::size_t slot, std::size_t flat, const Rational& coef,
                    Vector& out) const {
        if (slot == degree_) {
            axpy(out, coef, value(flat));
            return;
        }
        for (std::size_t i = 0; i < adim_; ++i)
            if (!args[slot][i].is_zero())
                accumulate(args, slot + 1, flat * adim_ + i, coef * args[slot][i], out);
    }

    std::size_t degree_, adim_, vdim_, tuples_ = 0;
    std::vector<Rational> data_;
};

/// Skew-symmetry in the first n−1 arguments, φf = f∘α^⊗n and ψf = f∘β^⊗n.
inline AxiomReport check_cochain(const Cochain& f, const PreLieRep& r) {
    const auto& a = r.algebra();
    AxiomReport report;
    if (f.adim() != a.dim() || f.vdim() != r.vdim()) {
        report.add(std::string(axiom::cochain_shape), {f.adim(), f.vdim()}, {});
        return report;
    }
    const auto n = f.degree();
    for (std::size_t flat = 0; flat < f.tuple_count(); ++flat) {
        auto t = f.tuple_of(flat);
        for (std::size_t p = 0; p + 2 < n; ++p) {
            if (t[p] > t[p + 1])
                continue;
            auto s = t;
            std::swap(s[p], s[p + 1]);
            Vector sum(f.value(flat).begin(), f.value(flat).end());
            axpy(sum, Rational(1), f.value(s));
            report.expect_zero(axiom::cochain_skew, t, sum);
        }
        std::vector<Vector> at(n), bt(n);
        for (std::size_t s = 0; s < n; ++s) {
            at[s] = a.alpha().column(t[s]);
            bt[s] = a.beta().column(t[s]);
        }
        report.expect_zero(axiom::cochain_phi, t, r.phi().apply(f.value(flat)) - f(at));
        report.expect_zero(axiom::cochain_psi, t, r.psi().apply(f.value(flat)) - f(bt));
    }
    return report;
}

/// A basis of C^n(A;V).
class CochainSpace {
public:
    CochainSpace(std::size_t degree, std::size_t adim, std::size_t vdim, std::vector<Cochain> basis)
        : degree_(degree), adim_(adim), vdim_(vdim), basis_(std::move(basis)) {
        std::vector<Vector> columns;
        for (const auto& b : basis_)
            columns.emplace_back(b.entries().begin(), b.entries().end());
        coords_ = detail::ColumnBasis(columns, Cochain(degree, adim, vdim).entries().size());
    }

    std::size_t degree() const { return degree_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Cochain>& basis() const { return basis_; }

    /// Coordinates of f in the basis, or nullopt when f is not a cochain of this space.
    std::optional<Vector> coordinates(const Cochain& f) const {
        if (f.degree() != degree_ || f.adim() != adim_ || f.vdim() != vdim_)
            return std::nullopt;
        return coords_.coordinates(f.entries());
    }

    Cochain combination(std::span<const Rational> coeffs) const {
        detail::require_shape(coeffs.size() == basis_.size(), "coefficient count must equal the dimension");
        Cochain out(degree_, adim_, vdim_);
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (!coeffs[i].is_zero())
                out = out + coeffs[i] * basis_[i];
        return out;
    }

private:
    std::size_t degree_, adim_, vdim_;
    std::vector<Cochain> basis_;
    detail::ColumnBasis coords_;
};

struct CohomologyReport {
    std::size_t degree = 0;
    std::size_t dimZ = 0, dimB = 0, dimH = 0;
    friend bool operator==(const CohomologyReport&, const CohomologyReport&) = default;
};

namespace detail {

/// Sign of the permutation sorting `t`, or 0 if `t` has a repeated entry.
inline int permutation_sign(std::span<const std::size_t> t) {
    int sign = 1;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            if (t[i] == t[j])
                return 0;
            if (t[i] > t[j])
                sign = -sign;
        }
    return sign;
}

/// Every strictly increasing k-tuple from {0, …, n−1}.
inline std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t k, std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> t(k);
    auto rec = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
        if (pos == k) {
            out.push_back(t);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            t[pos] = i;
            self(self, pos + 1, i + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

} // namespace detail

/// The complex C^•(A;V) of one representation. Validates the algebra and the
/// representation once; cochain spaces are cached per degree.
class CochainComplex {
public:
    explicit CochainComplex(PreLieRep r) : r_(std::move(r)), bracket_(subadjacent(r_.algebra())) {
        auto report = check_prelie(r_.algebra());
        report.merge(check_prelie_rep(r_));
        if (!report.passed())
            throw PreconditionError("cochain complex needs a representation of a BiHom-pre-Lie algebra",
                                    std::move(report));
    }

    const PreLieRep& representation() const { return r_; }
    const BiHomPreLieAlgebra& algebra() const { return r_.algebra(); }

    /// Solutions of the skew-symmetry and equivariance constraints, as a kernel over
    /// the free coordinates (i_1 < … < i_{n−1}; i_n; k) of skew tensors.
    const CochainSpace& space(std::size_t n) const {
        if (n == 0)
            throw DegreeError("cochain spaces start at degree 1");
        if (auto it = spaces_.find(n); it != spaces_.end())
            return it->second;
        const auto& a = algebra();
        const auto N = a.dim(), m = r_.vdim();
        std::vector<Cochain> elementary;
        for (const auto& head : detail::increasing_tuples(n - 1, N))
            for (std::size_t last = 0; last < N; ++last)
                for (std::size_t k = 0; k < m; ++k) {
                    Cochain c(n, N, m);
                    auto perm = head;
                    do {
                        const int sign = detail::permutation_sign(perm);
                        auto t = perm;
                        t.push_back(last);
                        Vector v(m);
                        v[k] = sign;
                        c.set(c.flat_index(t), v);
                    } while (std::next_permutation(perm.begin(), perm.end()));
                    elementary.push_back(std::move(c));
                }
        const auto entries = Cochain(n, N, m).entries().size();
        Matrix constraints(2 * entries, elementary.size());
        for (std::size_t col = 0; col < elementary.size(); ++col) {
            const auto& f = elementary[col];
            for (std::size_t flat = 0; flat < f.tuple_count(); ++flat) {
                auto t = f.tuple_of(flat);
                std::vector<Vector> at(n), bt(n);
                for (std::size_t s = 0; s < n; ++s) {
                    at[s] = a.alpha().column(t[s]);
                    bt[s] = a.beta().column(t[s]);
                }
                const Vector dphi = r_.phi().apply(f.value(flat)) - f(at);
                const Vector dpsi = r_.psi().apply(f.value(flat)) - f(bt);
                for (std::size_t k = 0; k < m; ++k) {
                    constraints(flat * m + k, col) = dphi[k];
                    constraints(entries + flat * m + k, col) = dpsi[k];
                }
            }
        }
        std::vector<Cochain> basis;
        for (const auto& w : kernel_basis(constraints)) {
            Cochain c(n, N, m);
            for (std::size_t col = 0; col < w.size(); ++col)
                if (!w[col].is_zero())
                    c = c + w[col] * elementary[col];
            basis.push_back(std::move(c));
        }
        return spaces_.emplace(n, CochainSpace(n, N, m, std::move(basis))).first->second;
    }

    /// ∂ⁿf(x_1, …, x_{n+1}) =
    ///     Σ_i (−1)^{i+1} L(α^{n−1}β^{n−1}(x_i)) f(α(x_1), …, α(x_i)^, …, α(x_n), x_{n+1})
    ///   + Σ_i (−1)^{i+1} R(β^{n−1}(x_{n+1})) f(β(x_1), …, β(x_i)^, …, β(x_n), α^{n−1}(x_i))
    ///   − Σ_i (−1)^{i+1} f(αβ(x_1), …, αβ(x_i)^, …, αβ(x_n), α^{n−1}(x_i)·x_{n+1})
    ///   + Σ_{i<j} (−1)^{i+j} f([β(x_i), α(x_j)]_C, αβ(x_1), …^…^…, αβ(x_n), β(x_{n+1}))
    /// evaluated on every basis tuple; the result is asserted to lie in C^{n+1}.
    Cochain coboundary(const Cochain& f) const {
        auto report = check_cochain(f, r_);
        if (!report.passed())
            throw PreconditionError("coboundary: argument is not a cochain", std::move(report));
        const auto& a = algebra();
        const auto n = f.degree(), N = a.dim(), m = r_.vdim();
        const Matrix& alpha = a.alpha();
        const Matrix& beta = a.beta();
        const Matrix ab = alpha * beta;
        const Matrix an = power(alpha, n - 1);
        const Matrix bn = power(beta, n - 1);
        const Matrix abn = an * bn;
        Cochain out(n + 1, N, m);
        std::vector<Vector> args(n);
        for (std::size_t flat = 0; flat < out.tuple_count(); ++flat) {
            const auto x = out.tuple_of(flat);
            Vector value(m);
            auto fill = [&](const Matrix& t, std::size_t skip_i, std::size_t skip_j, std::size_t offset) {
                std::size_t pos = offset;
                for (std::size_t k = 0; k < n; ++k)
                    if (k != skip_i && k != skip_j)
                        args[pos++] = t.column(x[k]);
            };
            for (std::size_t i = 0; i < n; ++i) {
                const Rational sign = i % 2 == 0 ? 1 : -1;
                fill(alpha, i, i, 0);
                args[n - 1] = unit_vector(N, x[n]);
                axpy(value, sign, r_.left(abn.column(x[i])).apply(f(args)));

                fill(beta, i, i, 0);
                args[n - 1] = an.column(x[i]);
                axpy(value, sign, r_.right(bn.column(x[n])).apply(f(args)));

                fill(ab, i, i, 0);
                args[n - 1] = a(an.column(x[i]), unit_vector(N, x[n]));
                axpy(value, -sign, f(args));
            }
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    const Rational sign = (i + j) % 2 == 0 ? 1 : -1;
                    args[0] = bracket_(beta.column(x[i]), alpha.column(x[j]));
                    fill(ab, i, j, 1);
                    args[n - 1] = beta.column(x[n]);
                    axpy(value, sign, f(args));
                }
            out.set(flat, value);
        }
        detail::ensure(check_cochain(out, r_).passed(), "coboundary lands in the cochain space");
        return out;
    }

    /// Matrix of ∂ⁿ from the basis of C^n to the basis of C^{n+1}.
    Matrix coboundary_matrix(std::size_t n) const {
        const auto& src = space(n);
        const auto& dst = space(n + 1);
        Matrix d(dst.dim(), src.dim());
        for (std::size_t j = 0; j < src.dim(); ++j) {
            auto c = dst.coordinates(coboundary(src.basis()[j]));
            detail::ensure(c.has_value(), "coboundary expands in the basis of the next cochain space");
            for (std::size_t i = 0; i < dst.dim(); ++i)
                d(i, j) = (*c)[i];
        }
        return d;
    }

    /// dim Z^n, dim B^n and dim H^n, with B^1 = 0.
    CohomologyReport dims(std::size_t n) const {
        const std::size_t dimC = space(n).dim();
        const std::size_t dimZ = dimC - rank(coboundary_matrix(n));
        const std::size_t dimB = n == 1 ? 0 : rank(coboundary_matrix(n - 1));
        detail::ensure(dimB <= dimZ, "coboundaries are cocycles");
        return {n, dimZ, dimB, dimZ - dimB};
    }

    bool is_cocycle(const Cochain& f) const { return coboundary(f).is_zero(); }

    /// A cochain g with ∂g = f, if one exists. Degree-1 cochains have no preimage.
    std::optional<Cochain> coboundary_witness(const Cochain& f) const {
        auto report = check_cochain(f, r_);
        if (!report.passed())
            throw PreconditionError("coboundary_witness: argument is not a cochain", std::move(report));
        if (f.degree() == 1)
            return std::nullopt;
        auto target = space(f.degree()).coordinates(f);
        detail::ensure(target.has_value(), "a checked cochain lies in the cochain space");
        auto w = solve(coboundary_matrix(f.degree() - 1), *target);
        if (!w)
            return std::nullopt;
        auto g = space(f.degree() - 1).combination(*w);
        detail::ensure(coboundary(g) == f, "witness maps to the cochain");
        return g;
    }

    bool is_coboundary(const Cochain& f) const {
        if (f.degree() == 1) {
            auto report = check_cochain(f, r_);
            if (!report.passed())
                throw PreconditionError("is_coboundary: argument is not a cochain", std::move(report));
            return f.is_zero();
        }
        return coboundary_witness(f).has_value();
    }

private:
    PreLieRep r_;
    BiHomLieAlgebra bracket_;
    mutable std::map<std::size_t, CochainSpace> spaces_;
};

namespace detail {

inline CochainComplex complex_over(const BiHomPreLieAlgebra& a, const PreLieRep& r) {
    if (!(r.algebra() == a)) {
        AxiomReport report;
        report.add(std::string(axiom::same_algebra), {}, {});
        throw PreconditionError("representation is over a different algebra", std::move(report));
    }
    return CochainComplex(r);
}

} // namespace detail

inline CochainSpace cochain_space(const BiHomPreLieAlgebra& a, const PreLieRep& r, std::size_t n) {
    return detail::complex_over(a, r).space(n);
}

inline Cochain coboundary(const Cochain& f, const BiHomPreLieAlgebra& a, const PreLieRep& r) {
    return detail::complex_over(a, r).coboundary(f);
}

inline Matrix coboundary_matrix(const BiHomPreLieAlgebra& a, const PreLieRep& r, std::size_t n) {
    return detail::complex_over(a, r).coboundary_matrix(n);
}

inline CohomologyReport cohomology_dims(const BiHomPreLieAlgebra& a, const PreLieRep& r, std::size_t n) {
    return detail::complex_over(a, r).dims(n);
}

inline bool is_cocycle(const Cochain& f, const BiHomPreLieAlgebra& a, const PreLieRep& r) {
    return detail::complex_over(a, r).is_cocycle(f);
}

inline bool is_coboundary(const Cochain& f, const BiHomPreLieAlgebra& a, const PreLieRep& r) {
    return detail::complex_over(a, r).is_coboundary(f);
}

inline std::optional<Cochain> coboundary_witness(const Cochain& f, const BiHomPreLieAlgebra& a, const PreLieRep& r) {
    return detail::complex_over(a, r).coboundary_witness(f);
}

} // namespace bihom
