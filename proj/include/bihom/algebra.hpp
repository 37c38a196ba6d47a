#pragma once

#include "bihom/matrix.hpp"
#include "bihom/product.hpp"
#include "bihom/report.hpp"

#include <concepts>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

namespace bihom {

namespace axiom {
inline constexpr std::string_view twist_commutation = "alpha-beta commutation";
inline constexpr std::string_view alpha_multiplicative = "alpha multiplicative";
inline constexpr std::string_view beta_multiplicative = "beta multiplicative";
inline constexpr std::string_view left_symmetry = "BiHom-left-symmetry";
inline constexpr std::string_view skew_symmetry = "BiHom-skew-symmetry";
inline constexpr std::string_view jacobi = "BiHom-Jacobi";
inline constexpr std::string_view morphism_product = "morphism: product";
inline constexpr std::string_view morphism_alpha = "morphism: alpha";
inline constexpr std::string_view morphism_beta = "morphism: beta";
} // namespace axiom

struct PreLieTag {
    static constexpr std::string_view name = "BiHom-pre-Lie";
};
struct LieTag {
    static constexpr std::string_view name = "BiHom-Lie";
};

/// A finite-dimensional algebra with a twist pair (alpha, beta).
///
/// Construction checks shapes and regularity (both twists invertible) only;
/// the defining identities are verified separately by check_prelie /
/// check_bihom_lie so that invalid candidates can still be inspected.
template <class Tag>
class BiHomAlgebra {
public:
    BiHomAlgebra(BilinearProduct operation, Matrix alpha, Matrix beta)
        : op_(std::move(operation)), alpha_(std::move(alpha)), beta_(std::move(beta)) {
        const auto n = op_.dim();
        detail::require_shape(alpha_.rows() == n && alpha_.cols() == n,
                              "alpha must be " + std::to_string(n) + "x" + std::to_string(n));
        detail::require_shape(beta_.rows() == n && beta_.cols() == n,
                              "beta must be " + std::to_string(n) + "x" + std::to_string(n));
        try {
            alpha_inv_ = inverse(alpha_);
        } catch (const SingularMatrixError&) {
            throw RegularityError("alpha is not invertible");
        }
        try {
            beta_inv_ = inverse(beta_);
        } catch (const SingularMatrixError&) {
            throw RegularityError("beta is not invertible");
        }
    }

    std::size_t dim() const { return op_.dim(); }

    const BilinearProduct& operation() const { return op_; }
    const BilinearProduct& product() const
        requires std::same_as<Tag, PreLieTag>
    {
        return op_;
    }
    const BilinearProduct& bracket() const
        requires std::same_as<Tag, LieTag>
    {
        return op_;
    }

    const Matrix& alpha() const { return alpha_; }
    const Matrix& beta() const { return beta_; }
    const Matrix& alpha_inverse() const { return alpha_inv_; }
    const Matrix& beta_inverse() const { return beta_inv_; }

    Vector operator()(std::span<const Rational> x, std::span<const Rational> y) const { return op_.apply(x, y); }

    friend bool operator==(const BiHomAlgebra& a, const BiHomAlgebra& b) {
        return a.op_ == b.op_ && a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
    }

private:
    BilinearProduct op_;
    Matrix alpha_, beta_, alpha_inv_, beta_inv_;
};

using BiHomPreLieAlgebra = BiHomAlgebra<PreLieTag>;
using BiHomLieAlgebra = BiHomAlgebra<LieTag>;

namespace detail {

inline Vector flatten(const Matrix& m) { return Vector(m.entries().begin(), m.entries().end()); }

inline void check_commuting(AxiomReport& report, std::string_view name, const Matrix& a, const Matrix& b) {
    report.expect_zero(name, {}, flatten(a * b - b * a));
}

/// (β(x) ∘ α(y)) • β(z) − αβ(x) • (α(y) ∘ z), with • = outer and ∘ = inner.
inline Vector prelie_associator(const BilinearProduct& outer, const BilinearProduct& inner, const Matrix& alpha,
                                const Matrix& beta, std::span<const Rational> x, std::span<const Rational> y,
                                std::span<const Rational> z) {
    const Vector ay = alpha.apply(y);
    Vector out = outer.apply(inner.apply(beta.apply(x), ay), beta.apply(z));
    axpy(out, Rational(-1), outer.apply(alpha.apply(beta.apply(x)), inner.apply(ay, z)));
    return out;
}

/// Antisymmetrization in x, y of prelie_associator; zero for all x, y, z iff the identity holds.
inline Vector left_symmetry_residual(const BilinearProduct& outer, const BilinearProduct& inner, const Matrix& alpha,
                                     const Matrix& beta, std::span<const Rational> x, std::span<const Rational> y,
                                     std::span<const Rational> z) {
    return prelie_associator(outer, inner, alpha, beta, x, y, z) -
           prelie_associator(outer, inner, alpha, beta, y, x, z);
}

/// [β(x), α(y)] + [β(y), α(x)].
inline Vector skew_residual(const BilinearProduct& br, const Matrix& alpha, const Matrix& beta,
                            std::span<const Rational> x, std::span<const Rational> y) {
    return br.apply(beta.apply(x), alpha.apply(y)) + br.apply(beta.apply(y), alpha.apply(x));
}

/// Cyclic sum over (x, y, z) of [β²(x), {β(y), α(z)}] with [ ] = outer and { } = inner.
inline Vector jacobi_residual(const BilinearProduct& outer, const BilinearProduct& inner, const Matrix& alpha,
                              const Matrix& beta, std::span<const Rational> x, std::span<const Rational> y,
                              std::span<const Rational> z) {
    auto term = [&](std::span<const Rational> a, std::span<const Rational> b, std::span<const Rational> c) {
        return outer.apply(beta.apply(beta.apply(a)), inner.apply(beta.apply(b), alpha.apply(c)));
    };
    Vector out = term(x, y, z);
    axpy(out, Rational(1), term(y, z, x));
    axpy(out, Rational(1), term(z, x, y));
    return out;
}

/// t(x ∘ y) − t(x) ∘ t(y) on every basis pair.
inline void check_multiplicative(AxiomReport& report, std::string_view name, const BilinearProduct& op,
                                 const Matrix& t) {
    const auto n = op.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            report.expect_zero(name, {i, j}, t.apply(op(i, j)) - op.apply(t.column(i), t.column(j)));
}

inline void check_left_symmetry(AxiomReport& report, std::string_view name, const BilinearProduct& outer,
                                const BilinearProduct& inner, const Matrix& alpha, const Matrix& beta) {
    const auto n = outer.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                report.expect_zero(name, {i, j, k},
                                   left_symmetry_residual(outer, inner, alpha, beta, unit_vector(n, i),
                                                          unit_vector(n, j), unit_vector(n, k)));
}

inline void check_jacobi(AxiomReport& report, std::string_view name, const BilinearProduct& outer,
                         const BilinearProduct& inner, const Matrix& alpha, const Matrix& beta) {
    const auto n = outer.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                report.expect_zero(name, {i, j, k},
                                   jacobi_residual(outer, inner, alpha, beta, unit_vector(n, i), unit_vector(n, j),
                                                   unit_vector(n, k)));
}

inline void check_skew(AxiomReport& report, std::string_view name, const BilinearProduct& br, const Matrix& alpha,
                       const Matrix& beta) {
    const auto n = br.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            report.expect_zero(name, {i, j}, skew_residual(br, alpha, beta, unit_vector(n, i), unit_vector(n, j)));
}

template <class Tag>
AxiomReport check_morphism(const Matrix& f, const BiHomAlgebra<Tag>& src, const BiHomAlgebra<Tag>& dst) {
    require_shape(f.rows() == dst.dim() && f.cols() == src.dim(),
                  "morphism must be " + std::to_string(dst.dim()) + "x" + std::to_string(src.dim()));
    AxiomReport report;
    const auto n = src.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            report.expect_zero(axiom::morphism_product, {i, j},
                               f.apply(src.operation()(i, j)) - dst.operation().apply(f.column(i), f.column(j)));
    report.expect_zero(axiom::morphism_alpha, {}, flatten(f * src.alpha() - dst.alpha() * f));
    report.expect_zero(axiom::morphism_beta, {}, flatten(f * src.beta() - dst.beta() * f));
    return report;
}

} // namespace detail

/// Verifies commuting twists, multiplicativity and the BiHom-left-symmetry identity
///   (β(x)·α(y))·β(z) − αβ(x)·(α(y)·z)  symmetric in x, y
/// on all basis triples. Regularity is guaranteed by construction.
inline AxiomReport check_prelie(const BiHomPreLieAlgebra& a) {
    AxiomReport report;
    detail::check_commuting(report, axiom::twist_commutation, a.alpha(), a.beta());
    detail::check_multiplicative(report, axiom::alpha_multiplicative, a.product(), a.alpha());
    detail::check_multiplicative(report, axiom::beta_multiplicative, a.product(), a.beta());
    detail::check_left_symmetry(report, axiom::left_symmetry, a.product(), a.product(), a.alpha(), a.beta());
    return report;
}

inline AxiomReport check_bihom_lie(const BiHomLieAlgebra& g) {
    AxiomReport report;
    detail::check_commuting(report, axiom::twist_commutation, g.alpha(), g.beta());
    detail::check_multiplicative(report, axiom::alpha_multiplicative, g.bracket(), g.alpha());
    detail::check_multiplicative(report, axiom::beta_multiplicative, g.bracket(), g.beta());
    detail::check_skew(report, axiom::skew_symmetry, g.bracket(), g.alpha(), g.beta());
    detail::check_jacobi(report, axiom::jacobi, g.bracket(), g.bracket(), g.alpha(), g.beta());
    return report;
}

/// [x, y]_C = x·y − α⁻¹β(y)·αβ⁻¹(x).
inline BilinearProduct subadjacent_bracket(const BilinearProduct& product, const Matrix& alpha_inv_beta,
                                           const Matrix& alpha_beta_inv) {
    return BilinearProduct::tabulate(product.dim(), [&](std::size_t i, std::size_t j) {
        return Vector(product(i, j).begin(), product(i, j).end()) -
               product.apply(alpha_inv_beta.column(j), alpha_beta_inv.column(i));
    });
}

inline BiHomLieAlgebra subadjacent(const BiHomPreLieAlgebra& a) {
    return BiHomLieAlgebra(subadjacent_bracket(a.product(), a.alpha_inverse() * a.beta(), a.alpha() * a.beta_inverse()),
                           a.alpha(), a.beta());
}

/// f(x·y) = f(x)·'f(y), f∘α = α'∘f, f∘β = β'∘f.
inline AxiomReport is_prelie_morphism(const Matrix& f, const BiHomPreLieAlgebra& a, const BiHomPreLieAlgebra& a2) {
    return detail::check_morphism(f, a, a2);
}

inline AxiomReport is_lie_morphism(const Matrix& f, const BiHomLieAlgebra& g, const BiHomLieAlgebra& g2) {
    return detail::check_morphism(f, g, g2);
}

/// x ·_{α,β} y = α(x)·β(y).
inline BilinearProduct yau_twist(const BilinearProduct& product, const Matrix& alpha, const Matrix& beta) {
    return BilinearProduct::tabulate(product.dim(), [&](std::size_t i, std::size_t j) {
        return product.apply(alpha.column(i), beta.column(j));
    });
}

} // namespace bihom
