#pragma once

#include "bihom/algebra.hpp"
#include "bihom/matrix.hpp"
#include "bihom/report.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bihom {

namespace axiom {
inline constexpr std::string_view rep_twist_commutation = "phi-psi commutation";
inline constexpr std::string_view rep1_phi_L = "rep1: phi L(x) = L(alpha x) phi";
inline constexpr std::string_view rep1_psi_L = "rep1: psi L(x) = L(beta x) psi";
inline constexpr std::string_view rep1_phi_R = "rep1: phi R(x) = R(alpha x) phi";
inline constexpr std::string_view rep1_psi_R = "rep1: psi R(x) = R(beta x) psi";
inline constexpr std::string_view rep2 = "rep2";
inline constexpr std::string_view rep3 = "rep3";
inline constexpr std::string_view lie_rep1 = "lie-rep1: rho(alpha x) phi = phi rho(x)";
inline constexpr std::string_view lie_rep2 = "lie-rep2: rho(beta x) psi = psi rho(x)";
inline constexpr std::string_view lie_rep3 = "lie-rep3";
inline constexpr std::string_view classical_input = "classical input has identity twists";
inline constexpr std::string_view same_algebra = "representations over the same algebra";
} // namespace axiom

/// Whether the carrier twists phi, psi must be invertible. Relaxed
/// representations can be checked but not fed to constructions that invert them.
enum class Regularity { required, relaxed };

namespace detail {

inline Matrix combine(std::span<const Matrix> actions, std::span<const Rational> x, std::size_t m) {
    Matrix out(m, m);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero())
            out += x[i] * actions[i];
    return out;
}

inline void validate_actions(const std::vector<Matrix>& actions, std::size_t n, std::size_t m, const char* name) {
    require_shape(actions.size() == n, std::string(name) + ": expected " + std::to_string(n) + " action matrices, got " +
                                           std::to_string(actions.size()));
    for (const auto& a : actions)
        require_shape(a.rows() == m && a.cols() == m,
                      std::string(name) + ": action matrices must be " + std::to_string(m) + "x" + std::to_string(m));
}

inline std::optional<Matrix> try_inverse(const Matrix& m) {
    try {
        return inverse(m);
    } catch (const SingularMatrixError&) {
        return std::nullopt;
    }
}

/// Holds the carrier twists and, when they exist, their inverses.
class CarrierTwists {
public:
    CarrierTwists(Matrix phi, Matrix psi, std::size_t m, Regularity regularity)
        : phi_(std::move(phi)), psi_(std::move(psi)) {
        require_shape(phi_.rows() == m && phi_.cols() == m, "phi must be " + std::to_string(m) + "x" + std::to_string(m));
        require_shape(psi_.rows() == m && psi_.cols() == m, "psi must be " + std::to_string(m) + "x" + std::to_string(m));
        phi_inv_ = try_inverse(phi_);
        psi_inv_ = try_inverse(psi_);
        if (regularity == Regularity::required) {
            if (!phi_inv_)
                throw RegularityError("phi is not invertible");
            if (!psi_inv_)
                throw RegularityError("psi is not invertible");
        }
    }

    const Matrix& phi() const { return phi_; }
    const Matrix& psi() const { return psi_; }
    bool regular() const { return phi_inv_ && psi_inv_; }
    const Matrix& phi_inverse() const {
        if (!phi_inv_)
            throw RegularityError("phi is not invertible");
        return *phi_inv_;
    }
    const Matrix& psi_inverse() const {
        if (!psi_inv_)
            throw RegularityError("psi is not invertible");
        return *psi_inv_;
    }

private:
    Matrix phi_, psi_;
    std::optional<Matrix> phi_inv_, psi_inv_;
};

} // namespace detail

/// Representation (V, L, R, phi, psi) of a BiHom-pre-Lie algebra; L[i] = L(e_i), R[i] = R(e_i).
class PreLieRep {
public:
    PreLieRep(BiHomPreLieAlgebra algebra, std::vector<Matrix> L, std::vector<Matrix> R, Matrix phi, Matrix psi,
              Regularity regularity = Regularity::required)
        : algebra_(std::move(algebra)), vdim_(phi.rows()), L_(std::move(L)), R_(std::move(R)),
          twists_(std::move(phi), std::move(psi), vdim_, regularity) {
        detail::validate_actions(L_, algebra_.dim(), vdim_, "L");
        detail::validate_actions(R_, algebra_.dim(), vdim_, "R");
    }

    const BiHomPreLieAlgebra& algebra() const { return algebra_; }
    std::size_t vdim() const { return vdim_; }
    const std::vector<Matrix>& L() const { return L_; }
    const std::vector<Matrix>& R() const { return R_; }
    Matrix left(std::span<const Rational> x) const { return detail::combine(L_, x, vdim_); }
    Matrix right(std::span<const Rational> x) const { return detail::combine(R_, x, vdim_); }

    const Matrix& phi() const { return twists_.phi(); }
    const Matrix& psi() const { return twists_.psi(); }
    bool is_regular() const { return twists_.regular(); }
    const Matrix& phi_inverse() const { return twists_.phi_inverse(); }
    const Matrix& psi_inverse() const { return twists_.psi_inverse(); }

private:
    BiHomPreLieAlgebra algebra_;
    std::size_t vdim_;
    std::vector<Matrix> L_, R_;
    detail::CarrierTwists twists_;
};

/// Representation (V, rho, phi, psi) of a BiHom-Lie algebra; rho[i] = rho(e_i).
class LieRep {
public:
    LieRep(BiHomLieAlgebra algebra, std::vector<Matrix> rho, Matrix phi, Matrix psi,
           Regularity regularity = Regularity::required)
        : algebra_(std::move(algebra)), vdim_(phi.rows()), rho_(std::move(rho)),
          twists_(std::move(phi), std::move(psi), vdim_, regularity) {
        detail::validate_actions(rho_, algebra_.dim(), vdim_, "rho");
    }

    const BiHomLieAlgebra& algebra() const { return algebra_; }
    std::size_t vdim() const { return vdim_; }
    const std::vector<Matrix>& rho() const { return rho_; }
    Matrix action(std::span<const Rational> x) const { return detail::combine(rho_, x, vdim_); }

    const Matrix& phi() const { return twists_.phi(); }
    const Matrix& psi() const { return twists_.psi(); }
    bool is_regular() const { return twists_.regular(); }
    const Matrix& phi_inverse() const { return twists_.phi_inverse(); }
    const Matrix& psi_inverse() const { return twists_.psi_inverse(); }

private:
    BiHomLieAlgebra algebra_;
    std::size_t vdim_;
    std::vector<Matrix> rho_;
    detail::CarrierTwists twists_;
};

inline AxiomReport check_prelie_rep(const PreLieRep& r) {
    const auto& a = r.algebra();
    const auto& alpha = a.alpha();
    const auto& beta = a.beta();
    const auto& phi = r.phi();
    const auto& psi = r.psi();
    const auto n = a.dim();
    AxiomReport report;
    detail::check_commuting(report, axiom::rep_twist_commutation, phi, psi);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& Li = r.L()[i];
        const auto& Ri = r.R()[i];
        report.expect_zero(axiom::rep1_phi_L, {i}, detail::flatten(phi * Li - r.left(alpha.column(i)) * phi));
        report.expect_zero(axiom::rep1_psi_L, {i}, detail::flatten(psi * Li - r.left(beta.column(i)) * psi));
        report.expect_zero(axiom::rep1_phi_R, {i}, detail::flatten(phi * Ri - r.right(alpha.column(i)) * phi));
        report.expect_zero(axiom::rep1_psi_R, {i}, detail::flatten(psi * Ri - r.right(beta.column(i)) * psi));
    }
    // L(β(x)·α(y))ψ − L(αβ(x))L(α(y)), to be symmetric in x, y
    auto rep2_term = [&](const Vector& x, const Vector& y) {
        return r.left(a(beta.apply(x), alpha.apply(y))) * psi - r.left(alpha.apply(beta.apply(x))) * r.left(alpha.apply(y));
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto x = unit_vector(n, i), y = unit_vector(n, j);
            report.expect_zero(axiom::rep2, {i, j}, detail::flatten(rep2_term(x, y) - rep2_term(y, x)));
        }
    // R(βx)L(βy)φ − L(αβy)R(x)φ = R(βx)R(αy)ψ − R(αy·x)φψ
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto x = unit_vector(n, i), y = unit_vector(n, j);
            const auto bx = beta.apply(x), ay = alpha.apply(y);
            Matrix residual = r.right(bx) * r.left(beta.apply(y)) * phi -
                              r.left(alpha.apply(beta.apply(y))) * r.R()[i] * phi - r.right(bx) * r.right(ay) * psi +
                              r.right(a(ay, x)) * phi * psi;
            report.expect_zero(axiom::rep3, {i, j}, detail::flatten(residual));
        }
    return report;
}

inline AxiomReport check_lie_rep(const LieRep& r) {
    const auto& g = r.algebra();
    const auto& alpha = g.alpha();
    const auto& beta = g.beta();
    const auto& phi = r.phi();
    const auto& psi = r.psi();
    const auto n = g.dim();
    AxiomReport report;
    detail::check_commuting(report, axiom::rep_twist_commutation, phi, psi);
    for (std::size_t i = 0; i < n; ++i) {
        report.expect_zero(axiom::lie_rep1, {i}, detail::flatten(r.action(alpha.column(i)) * phi - phi * r.rho()[i]));
        report.expect_zero(axiom::lie_rep2, {i}, detail::flatten(r.action(beta.column(i)) * psi - psi * r.rho()[i]));
    }
    // ρ([β(x), y])ψ = ρ(αβ(x))ρ(y) − ρ(β(y))ρ(α(x))
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto x = unit_vector(n, i), y = unit_vector(n, j);
            Matrix residual = r.action(g(beta.apply(x), y)) * psi -
                              r.action(alpha.apply(beta.apply(x))) * r.rho()[j] +
                              r.action(beta.apply(y)) * r.action(alpha.apply(x));
            report.expect_zero(axiom::lie_rep3, {i, j}, detail::flatten(residual));
        }
    return report;
}

/// ℓ_x(y) = x·y, r_x(y) = y·x, with phi = alpha and psi = beta.
inline PreLieRep adjoint_rep(const BiHomPreLieAlgebra& a) {
    const auto n = a.dim();
    std::vector<Matrix> L, R;
    for (std::size_t i = 0; i < n; ++i) {
        L.push_back(a.product().left_matrix(unit_vector(n, i)));
        R.push_back(a.product().right_matrix(unit_vector(n, i)));
    }
    return PreLieRep(a, std::move(L), std::move(R), a.alpha(), a.beta());
}

/// One-dimensional carrier, L = R = 0, phi = psi = 1.
inline PreLieRep trivial_rep(const BiHomPreLieAlgebra& a) {
    std::vector<Matrix> zero(a.dim(), Matrix(1, 1));
    return PreLieRep(a, zero, zero, Matrix::identity(1), Matrix::identity(1));
}

/// ad_x(y) = [x, y] with phi = alpha and psi = beta.
inline LieRep adjoint_lie_rep(const BiHomLieAlgebra& g) {
    std::vector<Matrix> rho;
    for (std::size_t i = 0; i < g.dim(); ++i)
        rho.push_back(g.bracket().left_matrix(unit_vector(g.dim(), i)));
    return LieRep(g, std::move(rho), g.alpha(), g.beta());
}

/// rho = 0 on a carrier of dimension m with identity twists.
inline LieRep zero_lie_rep(const BiHomLieAlgebra& g, std::size_t m) {
    return LieRep(g, std::vector<Matrix>(g.dim(), Matrix(m, m)), Matrix::identity(m), Matrix::identity(m));
}

namespace detail {

inline Matrix block_diagonal(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

/// Bilinear map on A ⊕ V from its three nonzero blocks: algebra part, x acting on v, y acting on u.
template <class OnVector, class OnLeftVector>
BilinearProduct semidirect_table(const BilinearProduct& base, std::size_t m, OnVector x_on_v, OnLeftVector y_on_u) {
    const auto n = base.dim();
    const auto total = n + m;
    return BilinearProduct::tabulate(total, [&](std::size_t i, std::size_t j) {
        Vector out(total);
        if (i < n && j < n) {
            for (std::size_t k = 0; k < n; ++k)
                out[k] = base.at(i, j, k);
        } else if (i < n) {
            auto v = x_on_v(i).column(j - n);
            for (std::size_t k = 0; k < m; ++k)
                out[n + k] = v[k];
        } else if (j < n) {
            auto v = y_on_u(j).column(i - n);
            for (std::size_t k = 0; k < m; ++k)
                out[n + k] = v[k];
        }
        return out;
    });
}

} // namespace detail

/// (x + u)·(y + v) = x·y + L(x)v + R(y)u on A ⊕ V (algebra basis first), twists α⊕φ, β⊕ψ.
/// No validity check on the representation.
inline BiHomPreLieAlgebra semidirect_prelie_unchecked(const PreLieRep& r) {
    const auto& a = r.algebra();
    auto product = detail::semidirect_table(
        a.product(), r.vdim(), [&](std::size_t i) -> const Matrix& { return r.L()[i]; },
        [&](std::size_t j) -> const Matrix& { return r.R()[j]; });
    return BiHomPreLieAlgebra(std::move(product), detail::block_diagonal(a.alpha(), r.phi()),
                              detail::block_diagonal(a.beta(), r.psi()));
}

inline BiHomPreLieAlgebra semidirect_prelie(const PreLieRep& r) {
    auto report = check_prelie_rep(r);
    if (!report.passed())
        throw PreconditionError("semidirect product: not a representation", std::move(report));
    return semidirect_prelie_unchecked(r);
}

/// [x + u, y + v] = [x, y] + ρ(x)v − ρ(α⁻¹β(y))φψ⁻¹u, twists α⊕φ, β⊕ψ. No validity check.
inline BiHomLieAlgebra semidirect_lie_unchecked(const LieRep& r) {
    const auto& g = r.algebra();
    const Matrix twist = r.phi() * r.psi_inverse();
    const Matrix shift = g.alpha_inverse() * g.beta();
    auto bracket = detail::semidirect_table(
        g.bracket(), r.vdim(), [&](std::size_t i) -> const Matrix& { return r.rho()[i]; },
        [&](std::size_t j) { return -(r.action(shift.column(j)) * twist); });
    return BiHomLieAlgebra(std::move(bracket), detail::block_diagonal(g.alpha(), r.phi()),
                           detail::block_diagonal(g.beta(), r.psi()));
}

inline BiHomLieAlgebra semidirect_lie(const LieRep& r) {
    auto report = check_lie_rep(r);
    if (!report.passed())
        throw PreconditionError("semidirect product: not a representation", std::move(report));
    return semidirect_lie_unchecked(r);
}

enum class InducedVariant { left_only, full };

/// Representation of the sub-adjacent algebra on V: rho = L, or rho(x) = L(x) − R(αβ⁻¹(x))φ⁻¹ψ.
inline LieRep induced_lie_rep(const PreLieRep& r, InducedVariant variant) {
    const auto& a = r.algebra();
    std::vector<Matrix> rho = r.L();
    if (variant == InducedVariant::full) {
        const Matrix shift = a.alpha() * a.beta_inverse();
        const Matrix twist = r.phi_inverse() * r.psi();
        for (std::size_t i = 0; i < a.dim(); ++i)
            rho[i] -= r.right(shift.column(i)) * twist;
    }
    return LieRep(subadjacent(a), std::move(rho), r.phi(), r.psi(),
                  r.is_regular() ? Regularity::required : Regularity::relaxed);
}

/// Twist of a representation (V, L, R) of an untwisted algebra into a representation
/// (V, L(α·)ψ, R(β·)φ, φ, ψ) of (A, α(x)·β(y), α, β). Every hypothesis is checked.
inline PreLieRep twist_rep(const PreLieRep& classical, const Matrix& alpha, const Matrix& beta, const Matrix& phi,
                           const Matrix& psi) {
    const auto& a = classical.algebra();
    const auto n = a.dim();
    const auto m = classical.vdim();
    detail::require_shape(alpha.rows() == n && alpha.cols() == n && beta.rows() == n && beta.cols() == n,
                          "twist_rep: alpha and beta must be " + std::to_string(n) + "x" + std::to_string(n));
    detail::require_shape(phi.rows() == m && phi.cols() == m && psi.rows() == m && psi.cols() == m,
                          "twist_rep: phi and psi must be " + std::to_string(m) + "x" + std::to_string(m));

    AxiomReport report;
    const auto In = Matrix::identity(n), Im = Matrix::identity(m);
    for (const Matrix* deviation : {&a.alpha(), &a.beta()})
        report.expect_zero(axiom::classical_input, {}, detail::flatten(*deviation - In));
    for (const Matrix* deviation : {&classical.phi(), &classical.psi()})
        report.expect_zero(axiom::classical_input, {}, detail::flatten(*deviation - Im));
    report.merge(check_prelie(a));
    report.merge(check_prelie_rep(classical));
    detail::check_commuting(report, axiom::twist_commutation, alpha, beta);
    detail::check_commuting(report, axiom::rep_twist_commutation, phi, psi);
    detail::check_multiplicative(report, axiom::alpha_multiplicative, a.product(), alpha);
    detail::check_multiplicative(report, axiom::beta_multiplicative, a.product(), beta);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& Li = classical.L()[i];
        const auto& Ri = classical.R()[i];
        report.expect_zero(axiom::rep1_phi_L, {i}, detail::flatten(phi * Li - classical.left(alpha.column(i)) * phi));
        report.expect_zero(axiom::rep1_psi_L, {i}, detail::flatten(psi * Li - classical.left(beta.column(i)) * psi));
        report.expect_zero(axiom::rep1_phi_R, {i}, detail::flatten(phi * Ri - classical.right(alpha.column(i)) * phi));
        report.expect_zero(axiom::rep1_psi_R, {i}, detail::flatten(psi * Ri - classical.right(beta.column(i)) * psi));
    }
    if (!report.passed())
        throw PreconditionError("twist_rep: hypotheses violated", std::move(report));

    BiHomPreLieAlgebra twisted(yau_twist(a.product(), alpha, beta), alpha, beta);
    std::vector<Matrix> L, R;
    for (std::size_t i = 0; i < n; ++i) {
        L.push_back(classical.left(alpha.column(i)) * psi);
        R.push_back(classical.right(beta.column(i)) * phi);
    }
    return PreLieRep(std::move(twisted), std::move(L), std::move(R), phi, psi);
}

/// Representation on V ⊗ W (v_i ⊗ w_j at index i·dim W + j):
///   L = L_V ⊗ ψ_W + ψ_V ⊗ (L_W − R_W(αβ⁻¹(·))φ_W⁻¹ψ_W),  R = R_V ⊗ φ_W,  twists φ_V⊗φ_W, ψ_V⊗ψ_W.
inline PreLieRep tensor_rep(const PreLieRep& rv, const PreLieRep& rw) {
    if (!(rv.algebra() == rw.algebra())) {
        AxiomReport report;
        report.add(std::string(axiom::same_algebra), {}, {});
        throw PreconditionError("tensor_rep: representations are over different algebras", std::move(report));
    }
    const auto& a = rv.algebra();
    const Matrix shift = a.alpha() * a.beta_inverse();
    const Matrix twist = rw.phi_inverse() * rw.psi();
    std::vector<Matrix> L, R;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        L.push_back(kronecker(rv.L()[i], rw.psi()) +
                    kronecker(rv.psi(), rw.L()[i] - rw.right(shift.column(i)) * twist));
        R.push_back(kronecker(rv.R()[i], rw.phi()));
    }
    return PreLieRep(a, std::move(L), std::move(R), kronecker(rv.phi(), rw.phi()), kronecker(rv.psi(), rw.psi()),
                     rv.is_regular() ? Regularity::required : Regularity::relaxed);
}

} // namespace bihom
