#pragma once

#include "bihom/algebra.hpp"
#include "bihom/matrix.hpp"
#include "bihom/report.hpp"
#include "bihom/representation.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

namespace bihom {

namespace axiom {
inline constexpr std::string_view o_phi_intertwining = "O-operator: T phi = alpha T";
inline constexpr std::string_view o_psi_intertwining = "O-operator: T psi = beta T";
inline constexpr std::string_view o_identity = "O-operator identity";
inline constexpr std::string_view injective = "T injective";
inline constexpr std::string_view rb_alpha = "Rota-Baxter: R alpha = alpha R";
inline constexpr std::string_view rb_beta = "Rota-Baxter: R beta = beta R";
inline constexpr std::string_view rb_identity = "Rota-Baxter identity";
} // namespace axiom

/// A linear map between coordinate spaces; target_dim x source_dim matrix.
class LinearOperator {
public:
    explicit LinearOperator(Matrix m) : m_(std::move(m)) {}
    std::size_t source_dim() const { return m_.cols(); }
    std::size_t target_dim() const { return m_.rows(); }
    const Matrix& matrix() const { return m_; }
    Vector operator()(std::span<const Rational> v) const { return m_.apply(v); }

private:
    Matrix m_;
};

/// [T(u), T(v)] = T(ρ(T(u))v − ρ(T(φ⁻¹ψ(v)))φψ⁻¹(u)) on all basis pairs, plus the
/// intertwinings Tφ = αT and Tψ = βT, which are reported under their own names.
inline AxiomReport check_o_operator(const LinearOperator& T, const LieRep& r) {
    const auto& g = r.algebra();
    const Matrix& t = T.matrix();
    detail::require_shape(t.rows() == g.dim() && t.cols() == r.vdim(),
                          "O-operator must be " + std::to_string(g.dim()) + "x" + std::to_string(r.vdim()));
    AxiomReport report;
    report.expect_zero(axiom::o_phi_intertwining, {}, detail::flatten(t * r.phi() - g.alpha() * t));
    report.expect_zero(axiom::o_psi_intertwining, {}, detail::flatten(t * r.psi() - g.beta() * t));
    const Matrix shift = r.phi_inverse() * r.psi();
    const Matrix back = r.phi() * r.psi_inverse();
    const auto m = r.vdim();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const Vector tu = t.column(i);
            const Vector inner = r.action(tu).column(j) - r.action(t.apply(shift.column(j))).apply(back.column(i));
            report.expect_zero(axiom::o_identity, {i, j}, g(tu, t.column(j)) - t.apply(inner));
        }
    return report;
}

namespace detail {

inline void require_o_operator(const LinearOperator& T, const LieRep& r, const char* who) {
    auto report = check_o_operator(T, r);
    report.merge(check_bihom_lie(r.algebra()));
    report.merge(check_lie_rep(r));
    if (!report.passed())
        throw PreconditionError(std::string(who) + ": not an O-operator on a BiHom-Lie algebra", std::move(report));
}

} // namespace detail

/// u ∗ v = ρ(T(u))v on (V, φ, ψ). Requires an O-operator on a valid representation;
/// the output is asserted to be BiHom-pre-Lie with T a morphism from its sub-adjacent algebra.
inline BiHomPreLieAlgebra induced_prelie_from_o(const LinearOperator& T, const LieRep& r) {
    detail::require_o_operator(T, r, "induced_prelie_from_o");
    const Matrix& t = T.matrix();
    auto product = BilinearProduct::tabulate(r.vdim(), [&](std::size_t i, std::size_t j) {
        return r.action(t.column(i)).column(j);
    });
    BiHomPreLieAlgebra out(std::move(product), r.phi(), r.psi());
    detail::ensure(check_prelie(out).passed(), "O-operator induced product is BiHom-pre-Lie");
    detail::ensure(is_lie_morphism(t, subadjacent(out), r.algebra()).passed(),
                   "O-operator is a morphism from the induced sub-adjacent algebra");
    return out;
}

/// The induced pre-Lie structure on T(V) ⊆ 𝔤, written in the basis T(v_1), …, T(v_m).
struct ImageAlgebra {
    BiHomPreLieAlgebra algebra;
    Matrix basis; // columns T(v_i) in ambient coordinates
};

/// T(u) ∘ T(v) = T(ρ(T(u))v), computed through the ambient algebra. Requires T injective.
inline ImageAlgebra induced_prelie_on_image(const LinearOperator& T, const LieRep& r) {
    const Matrix& t = T.matrix();
    detail::require_shape(t.rows() == r.algebra().dim() && t.cols() == r.vdim(), "O-operator has the wrong shape");
    if (rank(t) != t.cols()) {
        AxiomReport report;
        report.add(std::string(axiom::injective), {}, {});
        throw PreconditionError("induced_prelie_on_image: T is not injective", std::move(report));
    }
    detail::require_o_operator(T, r, "induced_prelie_on_image");
    const auto m = r.vdim();
    std::vector<Vector> columns;
    for (std::size_t i = 0; i < m; ++i)
        columns.push_back(t.column(i));
    detail::ColumnBasis image(columns, t.rows());
    auto coords = [&](const Vector& ambient) {
        auto c = image.coordinates(ambient);
        detail::ensure(c.has_value(), "image of an O-operator is closed");
        return *c;
    };
    auto product = BilinearProduct::tabulate(m, [&](std::size_t i, std::size_t j) {
        return coords(t.apply(r.action(columns[i]).column(j)));
    });
    Matrix alpha(m, m), beta(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        auto a = coords(r.algebra().alpha().apply(columns[i]));
        auto b = coords(r.algebra().beta().apply(columns[i]));
        for (std::size_t k = 0; k < m; ++k) {
            alpha(k, i) = a[k];
            beta(k, i) = b[k];
        }
    }
    return {BiHomPreLieAlgebra(std::move(product), std::move(alpha), std::move(beta)), t};
}

/// Rα = αR, Rβ = βR, [R(x), R(y)] = R([R(x), y] + [x, R(y)]).
inline AxiomReport check_rota_baxter(const LinearOperator& R, const BiHomLieAlgebra& g) {
    const Matrix& r = R.matrix();
    detail::require_shape(r.rows() == g.dim() && r.cols() == g.dim(),
                          "Rota-Baxter operator must be " + std::to_string(g.dim()) + "x" + std::to_string(g.dim()));
    AxiomReport report;
    report.expect_zero(axiom::rb_alpha, {}, detail::flatten(r * g.alpha() - g.alpha() * r));
    report.expect_zero(axiom::rb_beta, {}, detail::flatten(r * g.beta() - g.beta() * r));
    const auto n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector x = unit_vector(n, i), y = unit_vector(n, j);
            const Vector rx = r.column(i), ry = r.column(j);
            report.expect_zero(axiom::rb_identity, {i, j}, g(rx, ry) - r.apply(g(rx, y) + g(x, ry)));
        }
    return report;
}

/// x ∗ y = [R(x), y] with the twists of 𝔤.
inline BiHomPreLieAlgebra rb_induced_prelie(const LinearOperator& R, const BiHomLieAlgebra& g) {
    auto report = check_rota_baxter(R, g);
    report.merge(check_bihom_lie(g));
    if (!report.passed())
        throw PreconditionError("rb_induced_prelie: not a Rota-Baxter operator on a BiHom-Lie algebra",
                                std::move(report));
    auto product = BilinearProduct::tabulate(g.dim(), [&](std::size_t i, std::size_t j) {
        return g(R.matrix().column(i), unit_vector(g.dim(), j));
    });
    return BiHomPreLieAlgebra(std::move(product), g.alpha(), g.beta());
}

/// x ∘ y = T(ρ(x)T⁻¹(y)) on 𝔤 for an invertible O-operator; its sub-adjacent bracket is
/// asserted to equal the bracket of 𝔤.
inline BiHomPreLieAlgebra compatible_prelie_from_invertible_o(const LinearOperator& T, const LieRep& r) {
    const Matrix& t = T.matrix();
    detail::require_shape(t.rows() == r.algebra().dim() && t.cols() == r.vdim(), "O-operator has the wrong shape");
    const Matrix t_inv = inverse(t);
    detail::require_o_operator(T, r, "compatible_prelie_from_invertible_o");
    const auto& g = r.algebra();
    auto product = BilinearProduct::tabulate(g.dim(), [&](std::size_t i, std::size_t j) {
        return t.apply(r.action(unit_vector(g.dim(), i)).apply(t_inv.column(j)));
    });
    BiHomPreLieAlgebra out(std::move(product), g.alpha(), g.beta());
    detail::ensure(check_prelie(out).passed(), "compatible product is BiHom-pre-Lie");
    detail::ensure(subadjacent(out).bracket() == g.bracket(), "compatible product has the original commutator");
    return out;
}

} // namespace bihom
