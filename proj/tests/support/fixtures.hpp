#pragma once

#include "bihom/bihom.hpp"

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace fixtures {

using namespace bihom;

struct Entry {
    std::size_t i, j;
    Vector value;
};

/// Product from its nonzero basis products (0-based indices).
inline BilinearProduct product(std::size_t n, std::initializer_list<Entry> entries) {
    BilinearProduct p(n);
    for (const auto& e : entries)
        for (std::size_t k = 0; k < n; ++k)
            p.at(e.i, e.j, k) = e.value[k];
    return p;
}

/// An untwisted left-symmetric algebra together with two commuting automorphisms.
struct Seed {
    std::string name;
    BilinearProduct product;
    Matrix alpha, beta;
};

inline std::vector<Seed> seeds() {
    std::vector<Seed> s;
    s.push_back({"nil2", product(2, {{0, 0, {0, 1}}}), Matrix::diagonal({2, 4}), Matrix::diagonal({3, 9})});
    s.push_back({"abelian2", BilinearProduct(2), Matrix{{1, 1}, {0, 1}}, Matrix::diagonal({2, 2})});
    s.push_back({"p0", product(2, {{0, 0, {2, 0}}, {0, 1, {0, 1}}, {1, 1, {-1, 0}}}), Matrix::diagonal({1, -1}),
                 Matrix::identity(2)});
    s.push_back({"p1", product(2, {{0, 0, {-1, 0}}, {0, 1, {0, 1}}, {1, 0, {0, -1}}}), Matrix::diagonal({1, 2}),
                 Matrix::diagonal({1, 3})});
    s.push_back({"p2", product(2, {{0, 0, {-1, 1}}, {0, 1, {0, 1}}, {1, 0, {0, -1}}}), Matrix{{1, 0}, {1, 2}},
                 Matrix{{1, 0}, {2, 3}}});
    s.push_back({"p3", product(2, {{0, 0, {-1, 0}}, {0, 1, {2, 1}}, {1, 0, {0, -1}}, {1, 1, {-1, 0}}}),
                 Matrix{{1, 1}, {0, 2}}, Matrix{{1, 2}, {0, 3}}});
    // upper triangular 2x2 matrices in the basis E11, E12, E22
    s.push_back({"ut2",
                 product(3, {{0, 0, {1, 0, 0}}, {0, 1, {0, 1, 0}}, {1, 2, {0, 1, 0}}, {2, 2, {0, 0, 1}}}),
                 Matrix::diagonal({1, 2, 1}), Matrix::diagonal({1, 3, 1})});
    // e_i ∘ e_j = j e_{i+j} truncated at 3
    s.push_back({"novikov3", product(3, {{0, 0, {0, 1, 0}}, {0, 1, {0, 0, 2}}, {1, 0, {0, 0, 1}}}),
                 Matrix::diagonal({2, 4, 8}), Matrix::diagonal({3, 9, 27})});
    return s;
}

/// (A, α(x)·β(y), α, β).
inline BiHomPreLieAlgebra twisted(const Seed& s) {
    return BiHomPreLieAlgebra(yau_twist(s.product, s.alpha, s.beta), s.alpha, s.beta);
}

inline BiHomPreLieAlgebra untwisted(const BilinearProduct& p) {
    return BiHomPreLieAlgebra(p, Matrix::identity(p.dim()), Matrix::identity(p.dim()));
}

/// e₁·e₁ = e₂ with α = diag(2,4), β = diag(3,9) (not a Yau twist).
inline BiHomPreLieAlgebra nilpotent2() {
    return BiHomPreLieAlgebra(product(2, {{0, 0, {0, 1}}}), Matrix::diagonal({2, 4}), Matrix::diagonal({3, 9}));
}

inline BiHomPreLieAlgebra nilpotent2_untwisted() { return untwisted(product(2, {{0, 0, {0, 1}}})); }

inline BiHomPreLieAlgebra abelian(std::size_t n) { return untwisted(BilinearProduct(n)); }

inline BiHomPreLieAlgebra line() { return untwisted(product(1, {{0, 0, {1}}})); }

/// Unimodular integer matrix: product of random unit lower and upper triangular factors.
inline Matrix random_unimodular(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> d(-1, 1);
    Matrix lower = Matrix::identity(n), upper = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            lower(i, j) = d(rng);
            upper(j, i) = d(rng);
        }
    return lower * upper;
}

/// The same algebra written in the basis given by the columns of P.
inline BiHomPreLieAlgebra conjugate(const BiHomPreLieAlgebra& a, const Matrix& P) {
    const Matrix Pi = inverse(P);
    return BiHomPreLieAlgebra(change_basis(a.product(), P, Pi), Pi * a.alpha() * P, Pi * a.beta() * P);
}

/// Representation over conjugate(a, P); the carrier basis is unchanged.
inline PreLieRep conjugate(const PreLieRep& r, const Matrix& P) {
    std::vector<Matrix> L, R;
    for (std::size_t i = 0; i < P.cols(); ++i) {
        L.push_back(r.left(P.column(i)));
        R.push_back(r.right(P.column(i)));
    }
    return PreLieRep(conjugate(r.algebra(), P), std::move(L), std::move(R), r.phi(), r.psi());
}

inline PreLieRep direct_sum(const PreLieRep& a, const PreLieRep& b) {
    auto block = [](const Matrix& x, const Matrix& y) {
        Matrix m(x.rows() + y.rows(), x.cols() + y.cols());
        for (std::size_t i = 0; i < x.rows(); ++i)
            for (std::size_t j = 0; j < x.cols(); ++j)
                m(i, j) = x(i, j);
        for (std::size_t i = 0; i < y.rows(); ++i)
            for (std::size_t j = 0; j < y.cols(); ++j)
                m(x.rows() + i, x.cols() + j) = y(i, j);
        return m;
    };
    std::vector<Matrix> L, R;
    for (std::size_t i = 0; i < a.algebra().dim(); ++i) {
        L.push_back(block(a.L()[i], b.L()[i]));
        R.push_back(block(a.R()[i], b.R()[i]));
    }
    return PreLieRep(a.algebra(), std::move(L), std::move(R), block(a.phi(), b.phi()), block(a.psi(), b.psi()));
}

/// One-dimensional untwisted representations L(x) = λ(x), R(x) = μ(x) with λ, μ in {−1,0,1}ⁿ.
inline std::vector<PreLieRep> classical_characters(const BiHomPreLieAlgebra& classical) {
    const auto n = classical.dim();
    std::vector<PreLieRep> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < 2 * n; ++i)
        total *= 3;
    for (std::size_t code = 1; code < total; ++code) {
        std::vector<Matrix> L, R;
        std::size_t c = code;
        for (std::size_t i = 0; i < n; ++i, c /= 3)
            L.push_back(Matrix{{Rational(static_cast<int>(c % 3) - 1)}});
        for (std::size_t i = 0; i < n; ++i, c /= 3)
            R.push_back(Matrix{{Rational(static_cast<int>(c % 3) - 1)}});
        PreLieRep r(classical, std::move(L), std::move(R), Matrix::identity(1), Matrix::identity(1));
        if (check_prelie_rep(r).passed())
            out.push_back(std::move(r));
    }
    return out;
}

inline std::optional<PreLieRep> try_twist(const PreLieRep& classical, const Seed& s, const Matrix& phi,
                                          const Matrix& psi) {
    try {
        return twist_rep(classical, s.alpha, s.beta, phi, psi);
    } catch (const PreconditionError&) {
        return std::nullopt;
    }
}

/// Representations of twisted(s) with carrier dimension at most 2.
inline std::vector<PreLieRep> small_reps(const Seed& s) {
    const auto a = twisted(s);
    const auto classical = untwisted(s.product);
    std::vector<PreLieRep> out;
    if (a.dim() <= 2)
        out.push_back(adjoint_rep(a));
    out.push_back(trivial_rep(a));
    const auto zero2 = PreLieRep(classical, std::vector<Matrix>(a.dim(), Matrix(2, 2)),
                                 std::vector<Matrix>(a.dim(), Matrix(2, 2)), Matrix::identity(2), Matrix::identity(2));
    if (auto r = try_twist(zero2, s, Matrix::diagonal({2, 3}), Matrix::diagonal({5, 7})))
        out.push_back(*r);
    const auto chars = classical_characters(classical);
    std::size_t taken = 0;
    for (const auto& ch : chars) {
        if (auto r = try_twist(ch, s, Matrix{{2}}, Matrix{{3}})) {
            out.push_back(*r);
            if (++taken == 2)
                break;
        }
    }
    if (chars.size() >= 2) {
        if (auto r = try_twist(direct_sum(chars.front(), chars.back()), s, Matrix::diagonal({1, 2}),
                               Matrix::diagonal({3, 1})))
            out.push_back(*r);
    }
    return out;
}

/// Every twisted seed, in its own basis and in `variants` random unimodular bases,
/// paired with each of its small representations.
inline std::vector<PreLieRep> rep_pool(std::size_t variants, unsigned seed = 7) {
    std::mt19937 rng(seed);
    std::vector<PreLieRep> pool;
    for (const auto& s : seeds()) {
        auto reps = small_reps(s);
        for (const auto& r : reps)
            pool.push_back(r);
        for (std::size_t v = 0; v < variants; ++v) {
            const Matrix P = random_unimodular(rng, s.product.dim());
            for (const auto& r : reps)
                pool.push_back(conjugate(r, P));
        }
    }
    return pool;
}

/// Valid representations with deliberate defects applied; some defects may
/// happen to preserve validity, so callers decide validity by checking.
inline std::vector<PreLieRep> corruptions(const PreLieRep& r) {
    std::vector<PreLieRep> out;
    const auto n = r.algebra().dim();
    const auto m = r.vdim();
    auto scaled = [&](const std::vector<Matrix>& v, const Rational& s) {
        std::vector<Matrix> w;
        for (const auto& x : v)
            w.push_back(s * x);
        return w;
    };
    out.emplace_back(r.algebra(), r.L(), scaled(r.R(), 2), r.phi(), r.psi());
    out.emplace_back(r.algebra(), scaled(r.L(), 2), r.R(), r.phi(), r.psi());
    if (n > 0) {
        auto L = r.L();
        L[0](0, m - 1) += 1;
        out.emplace_back(r.algebra(), L, r.R(), r.phi(), r.psi());
        auto R = r.R();
        R[n - 1](m - 1, 0) += 1;
        out.emplace_back(r.algebra(), r.L(), R, r.phi(), r.psi());
    }
    if (m > 1) {
        Matrix phi = r.phi();
        phi(0, 1) += 1;
        if (is_invertible(phi))
            out.emplace_back(r.algebra(), r.L(), r.R(), phi, r.psi());
    }
    return out;
}

/// Every rows x cols matrix with entries in {−1, 0, 1} satisfying `keep`, in a fixed order.
template <class Keep>
std::vector<Matrix> search_matrices(std::size_t rows, std::size_t cols, Keep keep) {
    std::vector<Matrix> found;
    std::size_t total = 1;
    for (std::size_t i = 0; i < rows * cols; ++i)
        total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
        Matrix m(rows, cols);
        std::size_t c = code;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j, c /= 3)
                m(i, j) = static_cast<int>(c % 3) - 1;
        if (keep(m))
            found.push_back(std::move(m));
    }
    return found;
}

/// ρ = L of the pre-Lie algebra, as a representation of its sub-adjacent algebra.
inline LieRep left_multiplication_rep(const BiHomPreLieAlgebra& a) {
    return induced_lie_rep(adjoint_rep(a), InducedVariant::left_only);
}

/// Invertible {−1, 0, 1} automorphisms of an untwisted product other than the identity.
inline std::vector<Matrix> automorphisms(const BilinearProduct& p) {
    const auto classical = untwisted(p);
    return search_matrices(p.dim(), p.dim(), [&](const Matrix& m) {
        return m != Matrix::identity(p.dim()) && is_invertible(m) && is_prelie_morphism(m, classical, classical).passed();
    });
}

/// Yau twists of a seed by commuting pairs of finite-order automorphisms. Such twists
/// leave many equivariant cochains, unlike the diagonal twists of seeds().
inline std::vector<BiHomPreLieAlgebra> finite_order_twists(const Seed& s, std::size_t limit) {
    std::vector<BiHomPreLieAlgebra> out;
    const auto autos = automorphisms(s.product);
    for (const auto& a : autos)
        for (const auto& b : autos) {
            if (out.size() == limit)
                return out;
            if (a * b == b * a)
                out.emplace_back(yau_twist(s.product, a, b), a, b);
        }
    return out;
}

/// Nijenhuis operators with entries in {−1, 0, 1}, at most `limit` of them, skipping scalars.
inline std::vector<Matrix> nijenhuis_operators(const BiHomPreLieAlgebra& a, std::size_t limit) {
    auto found = search_matrices(a.dim(), a.dim(), [&](const Matrix& m) {
        bool scalar = true;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                scalar = scalar && m(i, j) == (i == j ? m(0, 0) : Rational(0));
        return !scalar && m * a.alpha() == a.alpha() * m && m * a.beta() == a.beta() * m &&
               check_nijenhuis_prelie(a, m).passed();
    });
    if (found.size() > limit)
        found.resize(limit);
    return found;
}

} // namespace fixtures
