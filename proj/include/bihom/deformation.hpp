#pragma once

#include "bihom/algebra.hpp"
#include "bihom/matrix.hpp"
#include "bihom/product.hpp"
#include "bihom/report.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bihom {

namespace axiom {
inline constexpr std::string_view pi_alpha = "pi alpha-equivariance";
inline constexpr std::string_view pi_beta = "pi beta-equivariance";
inline constexpr std::string_view pi_skew = "pi BiHom-skew-symmetry";
inline constexpr std::string_view deformation_mixed = "deformation: mixed identity";
inline constexpr std::string_view deformation_pi = "deformation: pi left-symmetry";
inline constexpr std::string_view deformation_t0 = "deformation: t^0 coefficient";
inline constexpr std::string_view deformation_t1 = "deformation: t^1 coefficient";
inline constexpr std::string_view deformation_t2 = "deformation: t^2 coefficient";
inline constexpr std::string_view lie_deformation_t0 = "Lie deformation: t^0 coefficient";
inline constexpr std::string_view lie_deformation_t1 = "Lie deformation: t^1 coefficient";
inline constexpr std::string_view lie_deformation_t2 = "Lie deformation: t^2 coefficient";
inline constexpr std::string_view n_alpha = "N alpha = alpha N";
inline constexpr std::string_view n_beta = "N beta = beta N";
inline constexpr std::string_view equivalence_t1 = "equivalence: t^1 coefficient";
inline constexpr std::string_view equivalence_t2 = "equivalence: t^2 coefficient";
inline constexpr std::string_view equivalence_t3 = "equivalence: t^3 coefficient";
inline constexpr std::string_view nijenhuis = "Nijenhuis identity";
} // namespace axiom

namespace detail {

/// A vector-valued polynomial in t; entry k is the coefficient of t^k.
using PolyVector = std::vector<Vector>;

/// The bilinear map Σ_k t^k P_k.
class PolyProduct {
public:
    explicit PolyProduct(std::vector<const BilinearProduct*> coefficients) : c_(std::move(coefficients)) {}

    PolyVector operator()(const PolyVector& x, const PolyVector& y) const {
        const auto n = c_.front()->dim();
        PolyVector out(x.size() + y.size() + c_.size() - 2, Vector(n));
        for (std::size_t k = 0; k < c_.size(); ++k)
            for (std::size_t a = 0; a < x.size(); ++a)
                for (std::size_t b = 0; b < y.size(); ++b)
                    axpy(out[k + a + b], Rational(1), c_[k]->apply(x[a], y[b]));
        return out;
    }

private:
    std::vector<const BilinearProduct*> c_;
};

inline PolyVector constant(Vector v) { return {std::move(v)}; }

inline PolyVector poly_axpy(const PolyVector& a, const Rational& s, const PolyVector& b) {
    PolyVector out(std::max(a.size(), b.size()), Vector(a.empty() ? b.front().size() : a.front().size()));
    for (std::size_t k = 0; k < a.size(); ++k)
        axpy(out[k], Rational(1), a[k]);
    for (std::size_t k = 0; k < b.size(); ++k)
        axpy(out[k], s, b[k]);
    return out;
}

inline void report_coefficients(AxiomReport& report, const PolyVector& p, std::span<const std::string_view> names,
                                const std::vector<std::size_t>& indices) {
    for (std::size_t k = 0; k < names.size(); ++k)
        report.expect_zero(names[k], indices, k < p.size() ? p[k] : Vector(p.front().size()));
    for (std::size_t k = names.size(); k < p.size(); ++k)
        ensure(is_zero(p[k]), "identity has no higher powers of t");
}

} // namespace detail

/// The eight-term identity pairing Π and π:
///   π(β(x),α(y))·β(z) + π(β(x)·α(y),β(z)) − αβ(x)·π(α(y),z) − π(αβ(x),α(y)·z) − (x ↔ y).
inline Vector deformation_mixed_residual(const BiHomPreLieAlgebra& a, const BilinearProduct& pi, const Vector& x,
                                         const Vector& y, const Vector& z) {
    const Matrix& al = a.alpha();
    const Matrix& be = a.beta();
    auto half = [&](const Vector& u, const Vector& v) {
        const Vector bu = be.apply(u), av = al.apply(v), bz = be.apply(z), abu = al.apply(be.apply(u));
        Vector out = a(pi.apply(bu, av), bz);
        axpy(out, Rational(1), pi.apply(a(bu, av), bz));
        axpy(out, Rational(-1), a(abu, pi.apply(av, z)));
        axpy(out, Rational(-1), pi.apply(abu, a(av, z)));
        return out;
    };
    return half(x, y) - half(y, x);
}

/// Π + tπ is BiHom-pre-Lie for every t. Equivariance of π is checked first and
/// short-circuits. The mixed identity and π's own left-symmetry are checked as
/// written, and separately the identity of Π + tπ is expanded in t with each
/// coefficient required to vanish.
inline AxiomReport check_linear_deformation(const BiHomPreLieAlgebra& a, const BilinearProduct& pi) {
    detail::require_shape(pi.dim() == a.dim(), "deformation has the wrong dimension");
    AxiomReport report;
    detail::check_multiplicative(report, axiom::pi_alpha, pi, a.alpha());
    detail::check_multiplicative(report, axiom::pi_beta, pi, a.beta());
    if (!report.passed())
        return report;
    const auto n = a.dim();
    const detail::PolyProduct prod({&a.product(), &pi});
    const std::string_view names[] = {axiom::deformation_t0, axiom::deformation_t1, axiom::deformation_t2};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vector x = unit_vector(n, i), y = unit_vector(n, j), z = unit_vector(n, k);
                report.expect_zero(axiom::deformation_mixed, {i, j, k}, deformation_mixed_residual(a, pi, x, y, z));
                report.expect_zero(axiom::deformation_pi, {i, j, k},
                                   detail::left_symmetry_residual(pi, pi, a.alpha(), a.beta(), x, y, z));
                auto assoc = [&](const Vector& u, const Vector& v) {
                    const auto& al = a.alpha();
                    const auto& be = a.beta();
                    auto left = prod(prod(detail::constant(be.apply(u)), detail::constant(al.apply(v))),
                                     detail::constant(be.apply(z)));
                    auto right = prod(detail::constant(al.apply(be.apply(u))),
                                      prod(detail::constant(al.apply(v)), detail::constant(z)));
                    return detail::poly_axpy(left, Rational(-1), right);
                };
                detail::report_coefficients(report, detail::poly_axpy(assoc(x, y), Rational(-1), assoc(y, x)), names,
                                            {i, j, k});
            }
    return report;
}

/// N(x)·y + x·N(y) − N(x·y). Requires N to commute with α and β.
inline BilinearProduct deformed_product(const BiHomPreLieAlgebra& a, const Matrix& N) {
    detail::require_shape(N.rows() == a.dim() && N.cols() == a.dim(), "N must be square of the algebra's dimension");
    AxiomReport report;
    report.expect_zero(axiom::n_alpha, {}, detail::flatten(N * a.alpha() - a.alpha() * N));
    report.expect_zero(axiom::n_beta, {}, detail::flatten(N * a.beta() - a.beta() * N));
    if (!report.passed())
        throw PreconditionError("deformed_product: N does not commute with the twists", std::move(report));
    return BilinearProduct::tabulate(a.dim(), [&](std::size_t i, std::size_t j) {
        const Vector x = unit_vector(a.dim(), i), y = unit_vector(a.dim(), j);
        return a(N.column(i), y) + a(x, N.column(j)) - N.apply(a.product()(i, j));
    });
}

/// Nα = αN, Nβ = βN and N(x)·N(y) = N(x ·_N y).
inline AxiomReport check_nijenhuis_prelie(const BiHomPreLieAlgebra& a, const Matrix& N) {
    detail::require_shape(N.rows() == a.dim() && N.cols() == a.dim(), "N must be square of the algebra's dimension");
    AxiomReport report;
    report.expect_zero(axiom::n_alpha, {}, detail::flatten(N * a.alpha() - a.alpha() * N));
    report.expect_zero(axiom::n_beta, {}, detail::flatten(N * a.beta() - a.beta() * N));
    const auto n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector x = unit_vector(n, i), y = unit_vector(n, j);
            const Vector nx = N.column(i), ny = N.column(j);
            const Vector deformed = a(nx, y) + a(x, ny) - N.apply(a(x, y));
            report.expect_zero(axiom::nijenhuis, {i, j}, a(nx, ny) - N.apply(deformed));
        }
    return report;
}

/// T_t = Id + tN is a morphism (A, Π + tπ₂) → (A, Π + tπ₁) for every t: N commutes
/// with the twists and the t, t², t³ coefficients of T_t(Π²_t(x, y)) − Π¹_t(T_t x, T_t y) vanish:
///   π₂ − π₁ = N(x)·y + x·N(y) − N(x·y),
///   N(π₂(x,y)) = N(x)·N(y) + π₁(N(x),y) + π₁(x,N(y)),
///   π₁(N(x),N(y)) = 0.
/// Both π₁ and π₂ must generate linear deformations.
inline AxiomReport check_equivalence(const BiHomPreLieAlgebra& a, const BilinearProduct& pi1,
                                     const BilinearProduct& pi2, const Matrix& N) {
    detail::require_shape(N.rows() == a.dim() && N.cols() == a.dim(), "N must be square of the algebra's dimension");
    {
        auto pre = check_linear_deformation(a, pi1);
        pre.merge(check_linear_deformation(a, pi2));
        if (!pre.passed())
            throw PreconditionError("check_equivalence: both products must generate linear deformations",
                                    std::move(pre));
    }
    AxiomReport report;
    report.expect_zero(axiom::n_alpha, {}, detail::flatten(N * a.alpha() - a.alpha() * N));
    report.expect_zero(axiom::n_beta, {}, detail::flatten(N * a.beta() - a.beta() * N));
    const auto n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector x = unit_vector(n, i), y = unit_vector(n, j);
            const Vector nx = N.column(i), ny = N.column(j);
            report.expect_zero(axiom::equivalence_t1, {i, j},
                               pi2.apply(x, y) - pi1.apply(x, y) - (a(nx, y) + a(x, ny) - N.apply(a(x, y))));
            report.expect_zero(axiom::equivalence_t2, {i, j},
                               N.apply(pi2.apply(x, y)) - a(nx, ny) - pi1.apply(nx, y) - pi1.apply(x, ny));
            report.expect_zero(axiom::equivalence_t3, {i, j}, pi1.apply(nx, ny));
        }
    return report;
}

struct TrivialDeformation {
    BilinearProduct pi;
    AxiomReport report; // deformation and equivalence checks, both passing
};

/// π = ·_N for a Nijenhuis operator N; asserts that π generates a linear deformation
/// and that Id + tN trivializes it.
inline TrivialDeformation nijenhuis_trivial_deformation(const BiHomPreLieAlgebra& a, const Matrix& N) {
    auto nij = check_nijenhuis_prelie(a, N);
    if (!nij.passed())
        throw PreconditionError("nijenhuis_trivial_deformation: N is not a Nijenhuis operator", std::move(nij));
    auto pi = deformed_product(a, N);
    auto report = check_linear_deformation(a, pi);
    detail::ensure(report.passed(), "a Nijenhuis operator generates a linear deformation");
    report.merge(check_equivalence(a, BilinearProduct(a.dim()), pi, N));
    detail::ensure(report.passed(), "the deformation of a Nijenhuis operator is trivial");
    return {std::move(pi), std::move(report)};
}

/// [·,·] + tπ is BiHom-Lie for every t. Requires π twist-equivariant and BiHom-skew
/// (violations short-circuit); the Jacobi identity of the deformed bracket is expanded
/// in t and each coefficient must vanish.
inline AxiomReport check_lie_linear_deformation(const BiHomLieAlgebra& g, const BilinearProduct& pi) {
    detail::require_shape(pi.dim() == g.dim(), "deformation has the wrong dimension");
    AxiomReport report;
    detail::check_multiplicative(report, axiom::pi_alpha, pi, g.alpha());
    detail::check_multiplicative(report, axiom::pi_beta, pi, g.beta());
    detail::check_skew(report, axiom::pi_skew, pi, g.alpha(), g.beta());
    if (!report.passed())
        return report;
    const auto n = g.dim();
    const detail::PolyProduct br({&g.bracket(), &pi});
    const std::string_view names[] = {axiom::lie_deformation_t0, axiom::lie_deformation_t1,
                                      axiom::lie_deformation_t2};
    const Matrix& al = g.alpha();
    const Matrix& be = g.beta();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                auto term = [&](const Vector& x, const Vector& y, const Vector& z) {
                    return br(detail::constant(be.apply(be.apply(x))),
                              br(detail::constant(be.apply(y)), detail::constant(al.apply(z))));
                };
                const Vector x = unit_vector(n, i), y = unit_vector(n, j), z = unit_vector(n, k);
                auto sum = detail::poly_axpy(term(x, y, z), Rational(1), term(y, z, x));
                sum = detail::poly_axpy(sum, Rational(1), term(z, x, y));
                detail::report_coefficients(report, sum, names, {i, j, k});
            }
    return report;
}

/// π_C(x, y) = π(x, y) − π(α⁻¹β(y), αβ⁻¹(x)). Requires π to deform a; the result is
/// asserted to deform the sub-adjacent BiHom-Lie algebra.
inline BilinearProduct push_deformation_to_lie(const BiHomPreLieAlgebra& a, const BilinearProduct& pi) {
    auto report = check_linear_deformation(a, pi);
    if (!report.passed())
        throw PreconditionError("push_deformation_to_lie: not a linear deformation", std::move(report));
    auto pi_c = subadjacent_bracket(pi, a.alpha_inverse() * a.beta(), a.alpha() * a.beta_inverse());
    detail::ensure(check_lie_linear_deformation(subadjacent(a), pi_c).passed(),
                   "pushed deformation deforms the sub-adjacent algebra");
    return pi_c;
}

/// Nα = αN and [N(x), N(y)] = N[x, y]_N with [x, y]_N = [N(x), y] + [x, N(y)] − N[x, y].
/// Nβ = βN is reported under its own name; drop it from the report for the α-only reading.
inline AxiomReport check_nijenhuis_lie(const BiHomLieAlgebra& g, const Matrix& N) {
    detail::require_shape(N.rows() == g.dim() && N.cols() == g.dim(), "N must be square of the algebra's dimension");
    AxiomReport report;
    report.expect_zero(axiom::n_alpha, {}, detail::flatten(N * g.alpha() - g.alpha() * N));
    report.expect_zero(axiom::n_beta, {}, detail::flatten(N * g.beta() - g.beta() * N));
    const auto n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector x = unit_vector(n, i), y = unit_vector(n, j);
            const Vector nx = N.column(i), ny = N.column(j);
            const Vector deformed = g(nx, y) + g(x, ny) - N.apply(g(x, y));
            report.expect_zero(axiom::nijenhuis, {i, j}, g(nx, ny) - N.apply(deformed));
        }
    return report;
}

} // namespace bihom
