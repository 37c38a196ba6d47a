#include "bihom/cohomology.hpp"
#include "bihom/deformation.hpp"
#include "support/fixtures.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace bihom;

namespace {

std::vector<BiHomPreLieAlgebra> algebras() {
    std::vector<BiHomPreLieAlgebra> out;
    for (const auto& s : fixtures::seeds()) {
        out.push_back(fixtures::twisted(s));
        out.push_back(fixtures::untwisted(s.product));
    }
    out.push_back(fixtures::nilpotent2());
    return out;
}

/// Algebras paired with a few of their non-scalar Nijenhuis operators.
std::vector<std::pair<BiHomPreLieAlgebra, Matrix>> nijenhuis_cases() {
    std::vector<std::pair<BiHomPreLieAlgebra, Matrix>> out;
    for (const auto& a : algebras())
        for (const auto& N : fixtures::nijenhuis_operators(a, a.dim() == 3 ? 6 : 12))
            out.emplace_back(a, N);
    return out;
}

BilinearProduct random_product(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> d(-2, 2);
    return BilinearProduct::tabulate(n, [&](std::size_t, std::size_t) {
        Vector v(n);
        for (auto& x : v)
            x = d(rng);
        return v;
    });
}

BilinearProduct random_skew_product(std::mt19937& rng, std::size_t n) {
    auto p = random_product(rng, n);
    return BilinearProduct::tabulate(n, [&](std::size_t i, std::size_t j) {
        return Vector(p(i, j).begin(), p(i, j).end()) - Vector(p(j, i).begin(), p(j, i).end());
    });
}

/// Π + tπ at a fixed t, for the sampling oracle.
BiHomPreLieAlgebra at_t(const BiHomPreLieAlgebra& a, const BilinearProduct& pi, int t) {
    return BiHomPreLieAlgebra(a.product() + Rational(t) * pi, a.alpha(), a.beta());
}

Matrix scalar(std::size_t n, const Rational& s) { return s * Matrix::identity(n); }

} // namespace

TEST(LinearDeformation, ZeroAndSelf) {
    for (const auto& a : algebras()) {
        EXPECT_TRUE(check_linear_deformation(a, BilinearProduct(a.dim())).passed());
        EXPECT_TRUE(check_linear_deformation(a, a.product()).passed());
    }
}

TEST(LinearDeformation, NonEquivariantShortCircuits) {
    auto a = fixtures::nilpotent2();
    auto pi = fixtures::product(2, {{0, 0, {1, 0}}});
    auto report = check_linear_deformation(a, pi);
    EXPECT_TRUE(report.has(axiom::pi_alpha));
    EXPECT_TRUE(report.has(axiom::pi_beta));
    for (const auto& name : report.failed_axioms())
        EXPECT_TRUE(name == axiom::pi_alpha || name == axiom::pi_beta) << name;
}

TEST(LinearDeformation, AgreesWithSamplingOracle) {
    // the identity of Π + tπ has degree 2 in t, so vanishing at t = 1, 2, 3 (t = 0 is
    // the algebra itself) is equivalent to vanishing for every t
    std::mt19937 rng(41);
    std::size_t passing = 0, failing = 0;
    for (const auto& s : fixtures::seeds()) {
        auto a = fixtures::untwisted(s.product);
        std::vector<BilinearProduct> candidates{a.product(), BilinearProduct(a.dim())};
        for (int k = 0; k < 6; ++k)
            candidates.push_back(random_product(rng, a.dim()));
        for (const auto& N : fixtures::nijenhuis_operators(a, 3))
            candidates.push_back(deformed_product(a, N));
        for (const auto& pi : candidates) {
            bool sampled = true;
            for (int t = 1; t <= 3; ++t)
                sampled = sampled && check_prelie(at_t(a, pi, t)).passed();
            auto report = check_linear_deformation(a, pi);
            EXPECT_EQ(report.passed(), sampled);
            // the literal identities and the t-coefficients agree pair by pair
            EXPECT_EQ(report.count(axiom::deformation_mixed), report.count(axiom::deformation_t1));
            EXPECT_EQ(report.count(axiom::deformation_pi), report.count(axiom::deformation_t2));
            EXPECT_EQ(report.count(axiom::deformation_t0), 0u);
            (sampled ? passing : failing)++;
        }
    }
    EXPECT_GE(passing, 10u);
    EXPECT_GE(failing, 10u);
}

TEST(LinearDeformation, MixedIdentityIsTheNegatedCoboundary) {
    std::mt19937 rng(42);
    for (const auto& a : algebras()) {
        CochainComplex c(adjoint_rep(a));
        std::vector<BilinearProduct> candidates{a.product()};
        for (const auto& b : c.space(2).basis())
            candidates.push_back(b.to_product());
        if (a.alpha() == Matrix::identity(a.dim()) && a.beta() == Matrix::identity(a.dim()))
            candidates.push_back(random_product(rng, a.dim()));
        const auto n = a.dim();
        for (const auto& pi : candidates) {
            auto d = c.coboundary(Cochain::from_product(pi));
            for (std::size_t flat = 0; flat < d.tuple_count(); ++flat) {
                auto t = d.tuple_of(flat);
                Vector expected = Rational(-1) * deformation_mixed_residual(a, pi, unit_vector(n, t[0]),
                                                                            unit_vector(n, t[1]), unit_vector(n, t[2]));
                EXPECT_EQ(Vector(d.value(flat).begin(), d.value(flat).end()), expected);
            }
            EXPECT_EQ(check_linear_deformation(a, pi).has(axiom::deformation_mixed),
                      !c.is_cocycle(Cochain::from_product(pi)));
        }
    }
}

TEST(LinearDeformation, NijenhuisCoboundaryDeforms) {
    for (const auto& [a, N] : nijenhuis_cases()) {
        auto pi = coboundary(Cochain::from_linear_map(N), a, adjoint_rep(a)).to_product();
        EXPECT_EQ(pi, deformed_product(a, N));
        EXPECT_TRUE(check_linear_deformation(a, pi).passed());
    }
}

TEST(Equivalence, Trivial) {
    for (const auto& a : algebras()) {
        const auto n = a.dim();
        EXPECT_TRUE(check_equivalence(a, a.product(), a.product(), Matrix(n, n)).passed());
        EXPECT_TRUE(check_equivalence(a, BilinearProduct(n), BilinearProduct(n), Matrix(n, n)).passed());
    }
    for (const auto& [a, N] : nijenhuis_cases())
        EXPECT_TRUE(check_equivalence(a, BilinearProduct(a.dim()), deformed_product(a, N), N).passed());
}

TEST(Equivalence, OffendingPairsReported) {
    auto a = fixtures::untwisted(fixtures::seeds()[3].product);
    auto report = check_equivalence(a, a.product(), a.product(), Matrix::identity(2));
    ASSERT_TRUE(report.has(axiom::equivalence_t3));
    for (const auto& v : report.violations()) {
        if (v.axiom == axiom::equivalence_t3) {
            ASSERT_EQ(v.indices.size(), 2u);
            auto p = a.product()(v.indices[0], v.indices[1]);
            EXPECT_EQ(v.residual, Vector(p.begin(), p.end()));
        }
    }
    // every basis pair with a nonzero product appears
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            nonzero += !is_zero(a.product()(i, j));
    EXPECT_EQ(report.count(axiom::equivalence_t3), nonzero);
    EXPECT_TRUE(check_equivalence(a, a.product(), a.product(), Matrix{{0, 1}, {0, 0}}).has(axiom::equivalence_t1));
}

TEST(Equivalence, RejectsNonDeformations) {
    std::mt19937 rng(43);
    auto a = fixtures::untwisted(fixtures::seeds()[4].product);
    BilinearProduct bad = random_product(rng, 2);
    while (check_linear_deformation(a, bad).passed())
        bad = random_product(rng, 2);
    EXPECT_THROW(check_equivalence(a, bad, a.product(), Matrix(2, 2)), PreconditionError);
}

TEST(Equivalence, DifferenceIsACoboundary) {
    for (const auto& [a, N] : nijenhuis_cases()) {
        const auto pi = deformed_product(a, N);
        ASSERT_TRUE(check_equivalence(a, BilinearProduct(a.dim()), pi, N).passed());
        CochainComplex c(adjoint_rep(a));
        auto diff = Cochain::from_product(pi) - Cochain(2, a.dim(), a.dim());
        auto w = c.coboundary_witness(diff);
        ASSERT_TRUE(w.has_value());
        EXPECT_EQ(c.coboundary(*w), diff);
        EXPECT_TRUE(c.is_coboundary(diff));
        EXPECT_EQ(c.coboundary(Cochain::from_linear_map(N)), diff);
    }
}

TEST(Nijenhuis, Scalars) {
    for (const auto& a : algebras())
        for (const Rational& s : {Rational(-2), Rational(0), Rational::parse("1/3"), Rational(5)}) {
            EXPECT_TRUE(check_nijenhuis_prelie(a, scalar(a.dim(), s)).passed());
            EXPECT_TRUE(check_nijenhuis_lie(subadjacent(a), scalar(a.dim(), s)).passed());
        }
}

TEST(Nijenhuis, NilpotentFixture) {
    auto a = fixtures::nilpotent2();
    const Matrix shift{{0, 0}, {1, 0}}; // e1 ↦ e2, e2 ↦ 0
    EXPECT_TRUE(check_nijenhuis_prelie(fixtures::nilpotent2_untwisted(), shift).passed());
    // shift does not commute with α = diag(2,4)
    EXPECT_TRUE(check_nijenhuis_prelie(a, shift).has(axiom::n_alpha));
    // e1 ↦ e1, e2 ↦ 0: N(e1)·N(e1) = e2, but e1 ·_N e1 = 2e2 and N(2e2) = 0
    auto report = check_nijenhuis_prelie(a, Matrix::diagonal({1, 0}));
    ASSERT_EQ(report.violations().size(), 1u);
    EXPECT_EQ(report.violations()[0].axiom, axiom::nijenhuis);
    EXPECT_EQ(report.violations()[0].indices, (std::vector<std::size_t>{0, 0}));
    EXPECT_EQ(report.violations()[0].residual, (Vector{0, 1}));
}

TEST(Nijenhuis, RandomOperatorsFail) {
    std::mt19937 rng(44);
    std::uniform_int_distribution<int> d(-3, 3);
    auto random = [&](std::size_t n) {
        Matrix N(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                N(i, j) = d(rng);
        return N;
    };
    auto a = fixtures::untwisted(fixtures::seeds()[5].product);
    int fails = 0;
    for (int k = 0; k < 20; ++k)
        fails += !check_nijenhuis_prelie(a, random(2)).passed();
    EXPECT_GE(fails, 18);
    // on a 2-dimensional Lie algebra every N is Nijenhuis (Cayley-Hamilton), so use dimension 3
    auto g = subadjacent(fixtures::untwisted(fixtures::seeds()[6].product));
    int lie_fails = 0;
    for (int k = 0; k < 20; ++k)
        lie_fails += !check_nijenhuis_lie(g, random(3)).passed();
    EXPECT_GE(lie_fails, 18);
    auto g2 = subadjacent(a);
    for (int k = 0; k < 5; ++k)
        EXPECT_TRUE(check_nijenhuis_lie(g2, random(2)).passed());
}

TEST(DeformedProduct, Examples) {
    for (const auto& a : algebras()) {
        EXPECT_TRUE(deformed_product(a, Matrix(a.dim(), a.dim())).is_zero());
        EXPECT_EQ(deformed_product(a, Matrix::identity(a.dim())), a.product());
    }
    EXPECT_TRUE(deformed_product(fixtures::nilpotent2_untwisted(), Matrix{{0, 0}, {1, 0}}).is_zero());
    EXPECT_THROW(deformed_product(fixtures::nilpotent2(), Matrix{{0, 0}, {1, 0}}), PreconditionError);
}

TEST(DeformedProduct, NijenhuisGivesPrelieAndMorphism) {
    std::size_t count = 0;
    for (const auto& [a, N] : nijenhuis_cases()) {
        BiHomPreLieAlgebra deformed(deformed_product(a, N), a.alpha(), a.beta());
        EXPECT_TRUE(check_prelie(deformed).passed());
        EXPECT_TRUE(is_prelie_morphism(N, deformed, a).passed());
        ++count;
    }
    EXPECT_GE(count, 40u);
}

TEST(TrivialDeformation, Scalars) {
    for (const auto& a : algebras())
        for (int l : {-1, 2, 3}) {
            auto d = nijenhuis_trivial_deformation(a, scalar(a.dim(), l));
            EXPECT_EQ(d.pi, Rational(l) * a.product());
            EXPECT_TRUE(d.report.passed());
        }
}

TEST(TrivialDeformation, SearchedOperators) {
    for (const auto& [a, N] : nijenhuis_cases()) {
        auto d = nijenhuis_trivial_deformation(a, N);
        EXPECT_TRUE(d.report.passed());
        EXPECT_EQ(d.pi, deformed_product(a, N));
    }
    auto nil = fixtures::nilpotent2_untwisted();
    EXPECT_TRUE(nijenhuis_trivial_deformation(nil, Matrix{{0, 0}, {1, 0}}).pi.is_zero());
    EXPECT_THROW(nijenhuis_trivial_deformation(fixtures::nilpotent2(), Matrix::diagonal({1, 0})), PreconditionError);
}

TEST(NijenhuisLie, DescendsToSubadjacent) {
    for (const auto& [a, N] : nijenhuis_cases())
        EXPECT_TRUE(check_nijenhuis_lie(subadjacent(a), N).passed());
}

TEST(NijenhuisLie, BetaCommutationReportedSeparately) {
    BiHomLieAlgebra g(BilinearProduct(2), Matrix::identity(2), Matrix::diagonal({1, 2}));
    auto report = check_nijenhuis_lie(g, Matrix{{0, 1}, {0, 0}});
    EXPECT_EQ(report.failed_axioms(), std::vector<std::string>{std::string(axiom::n_beta)});
}

TEST(LieDeformation, ZeroAndSelf) {
    for (const auto& a : algebras()) {
        auto g = subadjacent(a);
        EXPECT_TRUE(check_lie_linear_deformation(g, BilinearProduct(g.dim())).passed());
        EXPECT_TRUE(check_lie_linear_deformation(g, g.bracket()).passed());
    }
}

TEST(LieDeformation, PreconditionsShortCircuit) {
    auto g = subadjacent(fixtures::untwisted(fixtures::seeds()[3].product));
    auto report = check_lie_linear_deformation(g, fixtures::product(2, {{0, 0, {1, 0}}}));
    EXPECT_EQ(report.failed_axioms(), std::vector<std::string>{std::string(axiom::pi_skew)});
}

TEST(LieDeformation, AgreesWithSamplingOracle) {
    std::mt19937 rng(45);
    std::size_t passing = 0, failing = 0;
    for (const auto& s : fixtures::seeds()) {
        auto g = subadjacent(fixtures::untwisted(s.product));
        for (int k = 0; k < 8; ++k) {
            auto pi = random_skew_product(rng, g.dim());
            bool sampled = true;
            for (int t = 1; t <= 3; ++t)
                sampled = sampled &&
                          check_bihom_lie(BiHomLieAlgebra(g.bracket() + Rational(t) * pi, g.alpha(), g.beta())).passed();
            EXPECT_EQ(check_lie_linear_deformation(g, pi).passed(), sampled);
            (sampled ? passing : failing)++;
        }
    }
    EXPECT_GE(passing, 5u);
    EXPECT_GE(failing, 5u);
}

TEST(PushToLie, Examples) {
    for (const auto& a : algebras()) {
        EXPECT_TRUE(push_deformation_to_lie(a, BilinearProduct(a.dim())).is_zero());
        EXPECT_EQ(push_deformation_to_lie(a, a.product()), subadjacent(a).bracket());
    }
    std::mt19937 rng(46);
    auto a = fixtures::untwisted(fixtures::seeds()[4].product);
    BilinearProduct bad = random_product(rng, 2);
    while (check_linear_deformation(a, bad).passed())
        bad = random_product(rng, 2);
    EXPECT_THROW(push_deformation_to_lie(a, bad), PreconditionError);
}

TEST(PushToLie, NijenhuisDeformationsDescend) {
    for (const auto& [a, N] : nijenhuis_cases()) {
        auto pi_c = push_deformation_to_lie(a, deformed_product(a, N));
        EXPECT_TRUE(check_lie_linear_deformation(subadjacent(a), pi_c).passed());
    }
}
