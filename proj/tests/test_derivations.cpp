#include "oracle.hpp"

#include "dcat/builtins.hpp"
#include "dcat/derivations.hpp"

#include <doctest.h>

#include <random>

using namespace dcat;

namespace {
BasisVector g(std::size_t k) { return BasisVector::gen(k); }
BasisVector mon(std::vector<BasisVector> f) { return BasisVector::mon(std::move(f)); }
BasisVector pair(const BasisVector& a, const BasisVector& b) { return BasisVector::tensor({a, b}); }

void all_pass(const std::vector<LawResult>& rs) {
    for (const auto& r : rs) {
        CAPTURE(r.name);
        CHECK(r.verdict.equal);
    }
}
}  // namespace

TEST_CASE("induced monoid examples") {
    const LawContext cx;
    const SpaceExpr X = builtin::x_space();
    const SAlgebra free = builtin::polynomials();
    auto [m, u] = induced_monoid(free);
    CHECK(check_equal(m, MorExpr::mult(X), cx.opts).equal);
    CHECK(check_equal(u, MorExpr::unit(X), cx.opts).equal);

    const SAlgebra dual = builtin::dual_numbers(cx);
    CHECK(apply_basis(dual.mult(), pair(g(2), g(2))).is_zero());
    CHECK(apply_basis(dual.mult(), pair(g(1), g(2))) == Element::basis(dual.carrier(), g(2)));

    // On ℚ the induced multiplication is scalar multiplication.
    const SAlgebra q = builtin::rationals(cx);
    CHECK(apply_basis(q.mult(), pair(g(1), g(1))) == Element::basis(q.carrier(), g(1)));
    CHECK(check_equal(q.unit(), linear_map_from_matrix(SpaceExpr::unit(), q.carrier(), {{1}}), 0).equal);

    for (const auto& a : builtin::algebras(cx)) all_pass(a.a.monoid_laws(cx));
}

TEST_CASE("table algebras: structure map folds the table") {
    const LawContext cx;
    const SAlgebra sq = builtin::square_zero(cx);
    const auto Z = sq.carrier();
    // ν on a monomial is the product of its factors.
    CHECK(apply_basis(sq.nu(), mon({})) == Element::basis(Z, g(1)));
    CHECK(apply_basis(sq.nu(), mon({g(1), g(2)})) == Element::basis(Z, g(2)));
    CHECK(apply_basis(sq.nu(), mon({g(2), g(3)})).is_zero());

    // Bad tables are rejected with the failing property named.
    const auto Y = SpaceExpr::base("Y", 2);
    using T = builtin::Table;
    const T noncomm{{builtin::row({1, 0}), builtin::row({0, 1})}, {builtin::row({1, 0}), builtin::row({0, 0})}};
    CHECK_THROWS_WITH_AS(SAlgebra::from_table(Y, noncomm, builtin::row({1, 0}), cx), doctest::Contains("table.comm"),
                         law_violation);
    const T dual{{builtin::row({1, 0}), builtin::row({0, 1})}, {builtin::row({0, 1}), builtin::row({0, 0})}};
    CHECK_THROWS_WITH_AS(SAlgebra::from_table(Y, dual, builtin::row({0, 1}), cx), doctest::Contains("table.unit"),
                         law_violation);
    CHECK_THROWS_AS(SAlgebra::from_table(Y, dual, builtin::row({1}), cx), rejected_input);
}

TEST_CASE("S-derivation examples") {
    const LawContext cx;
    for (const auto& nd : builtin::derivations(cx)) {
        CAPTURE(nd.name);
        CHECK(is_s_derivation(nd.d, cx).equal);
        all_pass(nd.d.plain_laws(cx));
        all_pass(nd.d.module().laws(nd.d.algebra(), cx));
        all_pass(nd.d.algebra().laws(cx));
    }
}

TEST_CASE("property: the formal derivative matches the differentiation oracle") {
    const LawContext cx;
    const Derivation fd = builtin::formal_derivative(cx);
    const SpaceExpr X = builtin::x_space();
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = oracle::random_poly(1, 6, rng);
        CHECK(apply(fd.D(), oracle::to_element(p, X)) == oracle::to_element(oracle::partial(p, 0), X));
    }
}

TEST_CASE("non-derivations are rejected") {
    const LawContext cx;
    const SAlgebra dual = builtin::dual_numbers(cx);
    const AModule self = builtin::regular_module(dual, cx);
    // The identity fails the constant rule.
    CHECK_THROWS_WITH_AS(Derivation::make(dual, self, one(dual.carrier()), cx), doctest::Contains("derivation.constant"),
                         law_violation);
    // a + bε ↦ aε sends 1 to ε.
    const MorExpr shift = linear_map_from_matrix(dual.carrier(), dual.carrier(), {{0, 0}, {1, 0}});
    CHECK_THROWS_AS(Derivation::make(dual, self, shift, cx), law_violation);
    // Wrong types are rejected before any law runs.
    CHECK_THROWS_AS(Derivation::make(dual, self, one(builtin::x_space()), cx), rejected_input);
}

TEST_CASE("every S-derivation is a plain derivation (implication over samples)") {
    const LawContext cx;
    for (const auto& nd : builtin::derivations(cx)) {
        if (!is_s_derivation(nd.d, cx).equal) continue;
        all_pass(nd.d.plain_laws(cx));
    }
}

TEST_CASE("algebra/derivation dictionary") {
    const LawContext cx;
    for (const auto& nd : builtin::derivations(cx)) {
        CAPTURE(nd.name);
        const SbarAlgebra a = derivation_to_algebra(nd.d, cx);
        all_pass(a.laws(cx));
        all_pass(a.auxiliary_laws(cx));
        CHECK(roundtrip_alpha(nd.d, cx).equal);
        CHECK(roundtrip_nu(a, cx).equal);
        // The dictionary keeps the derivation map.
        CHECK(check_equal(algebra_to_derivation(a, cx).D(), nd.d.D(), cx.opts).equal);
    }
}

TEST_CASE("free S̄-algebras give S-derivations") {
    LawContext cx;
    cx.opts.bound = 2;
    for (const auto& na : builtin::arrows()) {
        CAPTURE(na.name);
        const SbarAlgebra a = free_sbar_algebra(na.obj, cx);
        all_pass(a.laws(cx));
        const Derivation d = algebra_to_derivation(a, cx);
        CHECK(is_s_derivation(d, cx).equal);
        CHECK(check_equal(d.D(), sbar_obj(na.obj).phi(), cx.opts).equal);
    }
}

TEST_CASE("an S̄-algebra whose ν1 skips the multiplication is rejected") {
    LawContext mutated;
    mutated.opts.bound = 2;
    mutated.mutation = Mutation::mubar_mskip;
    const ArrowObj id1(one(SpaceExpr::base("V", 1)));
    const SbarAlgebra bad = free_sbar_algebra(id1, mutated);
    LawContext cx;
    cx.opts.bound = 2;
    try {
        (void)algebra_to_derivation(bad, cx);
        FAIL("expected rejection");
    } catch (const law_violation& e) {
        CHECK(e.diagram().rfind("sbar_alg.", 0) == 0);
        CHECK(e.verdict().witness.has_value());
    }
}

TEST_CASE("dictionary agrees on morphism squares") {
    const LawContext cx;
    const auto samples = builtin::derivation_morphisms(cx);
    std::size_t positive = 0;
    for (const auto& m : samples) {
        CAPTURE(m.name);
        const bool as_derivations = is_derivation_morphism(m.source, m.target, m.f, m.g, cx).equal;
        const bool as_algebras = is_sbar_algebra_morphism(derivation_to_algebra(m.source, cx),
                                                          derivation_to_algebra(m.target, cx), m.f, m.g, cx)
                                     .equal;
        CHECK(as_derivations == as_algebras);
        CHECK(as_derivations == m.expected);
        positive += m.expected;
    }
    CHECK(positive >= 3);
}

TEST_CASE("monoid/derivation dictionary") {
    const LawContext cx;
    for (const auto& nd : builtin::derivations(cx)) {
        CAPTURE(nd.name);
        const ArrowMonoid mon = derivation_to_monoid(nd.d, cx);
        all_pass(mon.laws(cx));
        const Derivation back = monoid_to_derivation(mon, cx);
        CHECK(check_equal(back.D(), nd.d.D(), cx.opts).equal);
        CHECK(check_equal(back.algebra().nu(), nd.d.algebra().nu(), cx.opts).equal);
        CHECK(check_equal(back.module().alpha(), nd.d.module().alpha(), cx.opts).equal);
    }
}

TEST_CASE("a monoid with m2 different from m1 ∘ σ is rejected citing the redundancy check") {
    LawContext mutated;
    mutated.mutation = Mutation::m2_twist;
    const LawContext cx;
    const ArrowMonoid bad = derivation_to_monoid(builtin::formal_derivative(cx), mutated);
    CHECK_THROWS_WITH_AS(monoid_to_derivation(bad, cx), doctest::Contains("arrow_monoid.m2_redundant"), law_violation);
}
