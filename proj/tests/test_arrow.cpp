#include "dcat/arrow_laws.hpp"
#include "dcat/builtins.hpp"

#include <doctest.h>

using namespace dcat;

namespace {
const SpaceExpr V1 = SpaceExpr::base("V", 1);
BasisVector g(std::size_t k) { return BasisVector::gen(k); }
BasisVector mon(std::vector<BasisVector> f) { return BasisVector::mon(std::move(f)); }
Element el(const SpaceExpr& s, const BasisVector& b) { return Element::basis(s, b); }

LawContext bound2() {
    LawContext cx;
    cx.opts.bound = 2;
    cx.opts.deep_bound = 2;
    return cx;
}
}  // namespace

TEST_CASE("lifted functor and monad on examples") {
    const LawContext cx = bound2();
    const ArrowObj id1(one(V1));
    const auto S1 = S(V1);
    const auto x = el(S1, mon({g(1)}));

    CHECK(apply_basis(sbar_obj(id1).phi(), mon({g(1), g(1)})) == Rational(2) * elem_tensor(x, el(V1, g(1))));

    const ArrowObj zero(MorExpr::zero(V1, V1));
    for (const auto& b : enumerate_basis(S1, 3)) CHECK(apply_basis(sbar_obj(zero).phi(), b).is_zero());

    const ArrowMor sid = sbar_mor(arrow_id(id1), cx);
    CHECK(check_arrow_equal(sid, arrow_id(sbar_obj(id1)), cx.opts).equal);

    const ArrowMor eta = etabar(id1, cx);
    CHECK(apply_basis(eta.f0(), g(1)) == x);
    CHECK(apply_basis(eta.f1(), g(1)) == elem_tensor(el(S1, mon({})), el(V1, g(1))));

    // μ̄ second component: ({{x}} ⊗ {x} ⊗ e1) ↦ x² ⊗ e1
    const ArrowMor mu = mubar(id1, cx);
    const BasisVector in = BasisVector::tensor({mon({mon({g(1)})}), mon({g(1)}), g(1)});
    CHECK(apply_basis(mu.f1(), in) == elem_tensor(el(S1, mon({g(1), g(1)})), el(V1, g(1))));
}

TEST_CASE("box product on examples") {
    const LawContext cx = bound2();
    const ArrowObj id1(one(V1));
    const ArrowObj box = boxtimes_obj(id1, id1);
    const auto VV = SpaceExpr::tensor(V1, V1);
    const BasisVector ee = BasisVector::tensor({g(1), g(1)});
    Element expect(box.a1());
    expect.add_term(BasisVector::sum(1, ee), Rational(1));
    expect.add_term(BasisVector::sum(2, ee), Rational(1));
    CHECK(apply_basis(box.phi(), ee) == expect);
    CHECK(box.a0() == VV);

    // Unit object: 0 ⊠ q normalizes to q.
    const ArrowObj u = boxtimes_obj(box_unit(), id1);
    CHECK(u.a0() == id1.a0());
    CHECK(u.a1() == id1.a1());

    const ArrowMor s = boxtimes_sigma(id1, ArrowObj(MorExpr::zero(V1, V1)), cx);
    const ArrowMor ss = arrow_compose(boxtimes_sigma(ArrowObj(MorExpr::zero(V1, V1)), id1, cx), s);
    CHECK(check_arrow_equal(ss, arrow_id(s.src()), cx.opts).equal);
}

TEST_CASE("lifted modality components on examples") {
    const LawContext cx = bound2();
    const SpaceExpr V2 = SpaceExpr::base("V", 2);
    const ArrowObj id1(one(V1));
    const auto S1 = S(V1);

    const ArrowMor u = ubar(id1, cx);
    CHECK(u.f1().dom() == SpaceExpr::zero());

    const ArrowMor d = dbar(id1, cx);
    CHECK(apply_basis(d.f0(), mon({g(1), g(1)})) ==
          Rational(2) * elem_tensor(el(S1, mon({g(1)})), el(V1, g(1))));

    // m̄ lower component on the first summand: {x} ⊗ {y} ⊗ a ↦ xy ⊗ a
    const ArrowObj id2(one(V2));
    const ArrowMor m = mbar(id2, cx);
    const auto S2 = S(V2);
    const BasisVector in = BasisVector::sum(1, BasisVector::tensor({mon({g(1)}), mon({g(2)}), g(1)}));
    CHECK(apply_basis(m.f1(), in) == elem_tensor(el(S2, mon({g(1), g(2)})), el(V2, g(1))));
}

TEST_CASE("lifted Seely maps") {
    const LawContext cx = bound2();
    const ArrowObj id1(one(V1));
    CHECK(arrow_laws::seely_iso_l(id1, id1, cx).equal);
    CHECK(arrow_laws::seely_iso_r(id1, id1, cx).equal);

    // χ̄₀ coincides with ū at the zero endomorphism.
    const ArrowMor c0 = arrow_seely0(cx);
    const ArrowMor u0 = ubar(zero_endo(), cx);
    CHECK(check_arrow_equal(c0, u0, cx.opts).equal);

    // A mixed monomial splits and merges back.
    const SpaceExpr A = SpaceExpr::base("A", 1), B = SpaceExpr::base("B", 2);
    const auto AB = SpaceExpr::sum(A, B);
    const BasisVector mixed = mon({BasisVector::sum(1, g(1)), BasisVector::sum(2, g(2)), BasisVector::sum(2, g(1))});
    const Element back = apply(MorExpr::chi(A, B), apply_basis(MorExpr::chi_inv(A, B), mixed));
    CHECK(back == el(S(AB), mixed));
}

TEST_CASE("arrow law suite passes on the sample arrows at bound 2") {
    const LawContext cx = bound2();
    std::vector<ArrowObj> samples;
    for (const auto& a : builtin::arrows()) samples.push_back(a.obj);
    REQUIRE(samples.size() >= 4);
    for (const auto& r : arrow_law_suite(samples, cx)) {
        CAPTURE(r.name);
        CHECK(r.verdict.equal);
    }
}

TEST_CASE("arrow mutations are caught") {
    LawContext cx = bound2();
    const auto arrows = builtin::arrows();
    const ArrowObj swap = arrows[2].obj;

    cx.mutation = Mutation::dbar_twist;
    const Verdict d5 = arrow_laws::d5(swap, cx);
    CHECK_FALSE(d5.equal);
    CHECK(d5.witness.has_value());
    CHECK(arrow_laws::d1(swap, cx).equal);

    cx.mutation = Mutation::mubar_mskip;
    CHECK_FALSE(arrow_laws::monad_assoc(swap, cx).equal);

    cx.mutation = Mutation::chi_inv_split;
    CHECK_FALSE(arrow_laws::seely_iso_l(swap, swap, cx).equal);
}

TEST_CASE("validated arrow maps reject broken squares") {
    const ArrowObj id1(one(V1));
    const ArrowObj zero(MorExpr::zero(V1, V1));
    CHECK_THROWS_AS(ArrowMor::make(one(V1), one(V1), id1, zero, CheckOptions{}), law_violation);
    CHECK_NOTHROW(ArrowMor::make(one(V1), MorExpr::zero(V1, V1), id1, zero, CheckOptions{}));
}
