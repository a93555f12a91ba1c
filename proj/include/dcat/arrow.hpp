#pragma once

/** @file arrow.hpp
 *  The arrow category: objects are maps φ: A0 → A1, morphisms are commuting squares.
 *
 *  Provides the lifted monad S̄ with η̄ and μ̄, the box product ⊠ with its
 *  unit 0: I → 𝟘, symmetry and associator, the lifted multiplication,
 *  unit and deriving map, and the lifted Seely maps.
 *
 *  Arrow maps are validated at construction when LawContext::mutation is
 *  `none`; mutation runs skip validation so defects surface as law failures.
 */

#include "dcat/check.hpp"
#include "dcat/laws.hpp"
#include "dcat/morphism.hpp"
#include "dcat/sym.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dcat {

class ArrowObj {
public:
    explicit ArrowObj(MorExpr phi) : phi_(std::move(phi)) {}
    [[nodiscard]] const MorExpr& phi() const { return phi_; }
    [[nodiscard]] const SpaceExpr& a0() const { return phi_.dom(); }
    [[nodiscard]] const SpaceExpr& a1() const { return phi_.cod(); }
    [[nodiscard]] bool same_spaces(const ArrowObj& o) const { return a0() == o.a0() && a1() == o.a1(); }

private:
    MorExpr phi_;
};

class ArrowMor {
public:
    /// Checks endpoints and the square dst.φ ∘ f0 = f1 ∘ src.φ.
    static ArrowMor make(MorExpr f0, MorExpr f1, ArrowObj src, ArrowObj dst, const CheckOptions& opts) {
        ArrowMor m = unchecked(std::move(f0), std::move(f1), std::move(src), std::move(dst));
        require("arrow square", m.square(opts));
        return m;
    }
    /// Endpoint checks only.  Used when the square is known to hold or is deliberately broken.
    static ArrowMor unchecked(MorExpr f0, MorExpr f1, ArrowObj src, ArrowObj dst) {
        if (!(f0.dom() == src.a0()) || !(f0.cod() == dst.a0()) || !(f1.dom() == src.a1()) || !(f1.cod() == dst.a1()))
            throw rejected_input("arrow map components " + f0.signature() + " / " + f1.signature() +
                                 " do not match objects " + src.phi().signature() + " and " + dst.phi().signature());
        return ArrowMor(std::move(f0), std::move(f1), std::move(src), std::move(dst));
    }
    static ArrowMor make(MorExpr f0, MorExpr f1, ArrowObj src, ArrowObj dst, const LawContext& cx) {
        if (cx.mutation != Mutation::none) return unchecked(std::move(f0), std::move(f1), std::move(src), std::move(dst));
        return make(std::move(f0), std::move(f1), std::move(src), std::move(dst), cx.opts);
    }

    [[nodiscard]] const MorExpr& f0() const { return f0_; }
    [[nodiscard]] const MorExpr& f1() const { return f1_; }
    [[nodiscard]] const ArrowObj& src() const { return src_; }
    [[nodiscard]] const ArrowObj& dst() const { return dst_; }

    [[nodiscard]] Verdict square(const CheckOptions& opts) const {
        return check_equal(compose(dst_.phi(), f0_), compose(f1_, src_.phi()), opts);
    }

private:
    ArrowMor(MorExpr f0, MorExpr f1, ArrowObj src, ArrowObj dst)
        : f0_(std::move(f0)), f1_(std::move(f1)), src_(std::move(src)), dst_(std::move(dst)) {}

    MorExpr f0_, f1_;
    ArrowObj src_, dst_;
};

/// Componentwise comparison of two parallel arrow maps.
inline Verdict check_arrow_equal(const ArrowMor& l, const ArrowMor& r, const CheckOptions& opts) {
    return both(check_equal(l.f0(), r.f0(), opts), check_equal(l.f1(), r.f1(), opts));
}

inline ArrowMor arrow_id(const ArrowObj& o) { return ArrowMor::unchecked(one(o.a0()), one(o.a1()), o, o); }

/// g ∘ f
inline ArrowMor arrow_compose(const ArrowMor& g, const ArrowMor& f) {
    if (!f.dst().same_spaces(g.src()))
        throw rejected_input("arrow compose: " + f.dst().phi().signature() + " vs " + g.src().phi().signature());
    return ArrowMor::unchecked(compose(g.f0(), f.f0()), compose(g.f1(), f.f1()), f.src(), g.dst());
}
inline ArrowMor arrow_chain(const std::vector<ArrowMor>& fs) {
    ArrowMor r = fs.back();
    for (std::size_t i = fs.size() - 1; i-- > 0;) r = arrow_compose(fs[i], r);
    return r;
}
inline ArrowMor arrow_add(const ArrowMor& f, const ArrowMor& g) {
    return ArrowMor::unchecked(f.f0() + g.f0(), f.f1() + g.f1(), f.src(), f.dst());
}
inline ArrowMor arrow_zero(const ArrowObj& src, const ArrowObj& dst) {
    return ArrowMor::unchecked(MorExpr::zero(src.a0(), dst.a0()), MorExpr::zero(src.a1(), dst.a1()), src, dst);
}

// --- lifted monad ------------------------------------------------------------

/// S̄(φ) = (1 ⊗ φ) ∘ d : S(A0) → S(A0) ⊗ A1
inline ArrowObj sbar_obj(const ArrowObj& o) {
    return ArrowObj(compose(tens(one(S(o.a0())), o.phi()), MorExpr::deriv(o.a0())));
}

inline ArrowMor sbar_mor(const ArrowMor& m, const LawContext& cx) {
    const MorExpr sf = MorExpr::symf(m.f0());
    return ArrowMor::make(sf, tens(sf, m.f1()), sbar_obj(m.src()), sbar_obj(m.dst()), cx);
}

/// η̄ = (η, u ⊗ 1): P → S̄P
inline ArrowMor etabar(const ArrowObj& o, const LawContext& cx) {
    return ArrowMor::make(MorExpr::eta(o.a0()), tens(MorExpr::unit(o.a0()), one(o.a1())), o, sbar_obj(o), cx);
}

/// μ̄ = (μ, (m ⊗ 1) ∘ (μ ⊗ 1 ⊗ 1)): S̄S̄P → S̄P
inline ArrowMor mubar(const ArrowObj& o, const LawContext& cx) {
    const SpaceExpr& A0 = o.a0();
    const SpaceExpr& A1 = o.a1();
    MorExpr f1 = cx.mutation == Mutation::mubar_mskip
                     ? tens(MorExpr::mu(A0), augmentation(A0), one(A1))
                     : compose(tens(MorExpr::mult(A0), one(A1)), tens(MorExpr::mu(A0), one(S(A0)), one(A1)));
    return ArrowMor::make(MorExpr::mu(A0), f1, sbar_obj(sbar_obj(o)), sbar_obj(o), cx);
}

// --- box product -------------------------------------------------------------

/// Monoidal unit 0: I → 𝟘.
inline ArrowObj box_unit() { return ArrowObj(MorExpr::zero(SpaceExpr::unit(), SpaceExpr::zero())); }

/// φ ⊠ ψ = [1 ⊗ ψ ; φ ⊗ 1] : A0⊗B0 → (A0⊗B1) ⊕ (A1⊗B0)
inline ArrowObj boxtimes_obj(const ArrowObj& p, const ArrowObj& q) {
    return ArrowObj(MorExpr::matrix({{tens(one(p.a0()), q.phi())}, {tens(p.phi(), one(q.a0()))}}));
}

/// f ⊠ g = (f0 ⊗ g0, diag(f0 ⊗ g1, f1 ⊗ g0))
inline ArrowMor boxtimes_mor(const ArrowMor& f, const ArrowMor& g, const LawContext& cx) {
    const auto& p = f.src();
    const auto& q = g.src();
    const auto& p2 = f.dst();
    const auto& q2 = g.dst();
    MorExpr f1 = MorExpr::matrix({
        {tens(f.f0(), g.f1()), MorExpr::zero(SpaceExpr::tensor(p.a1(), q.a0()), SpaceExpr::tensor(p2.a0(), q2.a1()))},
        {MorExpr::zero(SpaceExpr::tensor(p.a0(), q.a1()), SpaceExpr::tensor(p2.a1(), q2.a0())), tens(f.f1(), g.f0())},
    });
    return ArrowMor::make(tens(f.f0(), g.f0()), f1, boxtimes_obj(p, q), boxtimes_obj(p2, q2), cx);
}

/// σ^⊠ : P ⊠ Q → Q ⊠ P
inline ArrowMor boxtimes_sigma(const ArrowObj& p, const ArrowObj& q, const LawContext& cx) {
    MorExpr f1 = MorExpr::matrix({
        {MorExpr::zero(SpaceExpr::tensor(p.a0(), q.a1()), SpaceExpr::tensor(q.a0(), p.a1())),
         MorExpr::sigma(p.a1(), q.a0())},
        {MorExpr::sigma(p.a0(), q.a1()),
         MorExpr::zero(SpaceExpr::tensor(p.a1(), q.a0()), SpaceExpr::tensor(q.a1(), p.a0()))},
    });
    return ArrowMor::make(MorExpr::sigma(p.a0(), q.a0()), f1, boxtimes_obj(p, q), boxtimes_obj(q, p), cx);
}

namespace detail {

/// Maps cod((P⊠Q)⊠R) onto the distributed sum (A0B0C1) ⊕ (A0B1C0) ⊕ (A1B0C0).
inline MorExpr box_left_spread(const ArrowObj& p, const ArrowObj& q, const ArrowObj& r) {
    const SpaceExpr first = SpaceExpr::tensor({p.a0(), q.a0(), r.a1()});
    const SpaceExpr second = SpaceExpr::tensor(boxtimes_obj(p, q).a1(), r.a0());
    return MorExpr::sum(one(first), MorExpr::distribute(second));
}
/// Maps cod(P⊠(Q⊠R)) onto the same distributed sum.
inline MorExpr box_right_spread(const ArrowObj& p, const ArrowObj& q, const ArrowObj& r) {
    const SpaceExpr first = SpaceExpr::tensor(p.a0(), boxtimes_obj(q, r).a1());
    const SpaceExpr second = SpaceExpr::tensor({p.a1(), q.a0(), r.a0()});
    return MorExpr::sum(MorExpr::distribute(first), one(second));
}
inline MorExpr box_left_gather(const ArrowObj& p, const ArrowObj& q, const ArrowObj& r) {
    const SpaceExpr first = SpaceExpr::tensor({p.a0(), q.a0(), r.a1()});
    const SpaceExpr second = SpaceExpr::tensor(boxtimes_obj(p, q).a1(), r.a0());
    return MorExpr::sum(one(first), MorExpr::undistribute(second));
}
inline MorExpr box_right_gather(const ArrowObj& p, const ArrowObj& q, const ArrowObj& r) {
    const SpaceExpr first = SpaceExpr::tensor(p.a0(), boxtimes_obj(q, r).a1());
    const SpaceExpr second = SpaceExpr::tensor({p.a1(), q.a0(), r.a0()});
    return MorExpr::sum(MorExpr::undistribute(first), one(second));
}

}  // namespace detail

/// Associator (P⊠Q)⊠R → P⊠(Q⊠R): identity on A0⊗B0⊗C0, regrouping on the codomain.
inline ArrowMor box_assoc(const ArrowObj& p, const ArrowObj& q, const ArrowObj& r, const LawContext& cx) {
    MorExpr f1 = compose(detail::box_right_gather(p, q, r), detail::box_left_spread(p, q, r));
    return ArrowMor::make(one(SpaceExpr::tensor({p.a0(), q.a0(), r.a0()})), f1,
                          boxtimes_obj(boxtimes_obj(p, q), r), boxtimes_obj(p, boxtimes_obj(q, r)), cx);
}
inline ArrowMor box_assoc_inv(const ArrowObj& p, const ArrowObj& q, const ArrowObj& r, const LawContext& cx) {
    MorExpr f1 = compose(detail::box_left_gather(p, q, r), detail::box_right_spread(p, q, r));
    return ArrowMor::make(one(SpaceExpr::tensor({p.a0(), q.a0(), r.a0()})), f1,
                          boxtimes_obj(p, boxtimes_obj(q, r)), boxtimes_obj(boxtimes_obj(p, q), r), cx);
}

// --- lifted algebra modality ---------------------------------------------------

/// m̄ = (m, [m ⊗ 1, (m ⊗ 1) ∘ (1 ⊗ σ)]): S̄P ⊠ S̄P → S̄P
inline ArrowMor mbar(const ArrowObj& o, const LawContext& cx) {
    const auto SA = S(o.a0());
    const auto& A1 = o.a1();
    const MorExpr m1 = tens(MorExpr::mult(o.a0()), one(A1));
    const ArrowObj P = sbar_obj(o);
    return ArrowMor::make(MorExpr::mult(o.a0()), MorExpr::matrix({{m1, compose(m1, tens(one(SA), MorExpr::sigma(A1, SA)))}}),
                          boxtimes_obj(P, P), P, cx);
}

/// ū = (u, 0): (0: I → 𝟘) → S̄P
inline ArrowMor ubar(const ArrowObj& o, const LawContext& cx) {
    const ArrowObj P = sbar_obj(o);
    return ArrowMor::make(MorExpr::unit(o.a0()), MorExpr::zero(SpaceExpr::zero(), P.a1()), box_unit(), P, cx);
}

/// d̄ = (d, [1 ; (1 ⊗ σ) ∘ (d ⊗ 1)]): S̄P → S̄P ⊠ P
inline ArrowMor dbar(const ArrowObj& o, const LawContext& cx) {
    const auto& A0 = o.a0();
    const auto& A1 = o.a1();
    const auto SA = S(A0);
    MorExpr lower = tens(MorExpr::deriv(A0), one(A1));
    if (!(cx.mutation == Mutation::dbar_twist && A0 == A1)) lower = compose(tens(one(SA), MorExpr::sigma(A0, A1)), lower);
    const ArrowObj P = sbar_obj(o);
    return ArrowMor::make(MorExpr::deriv(A0), MorExpr::matrix({{one(SpaceExpr::tensor(SA, A1))}, {lower}}), P,
                          boxtimes_obj(P, o), cx);
}

// --- biproducts and Seely maps -------------------------------------------------

/// Pointwise biproduct φ ⊕ ψ.
inline ArrowObj arrow_sum(const ArrowObj& p, const ArrowObj& q) { return ArrowObj(MorExpr::sum(p.phi(), q.phi())); }

inline ArrowMor arrow_inj(std::size_t i, const ArrowObj& p, const ArrowObj& q, const LawContext& cx) {
    const std::vector<SpaceExpr> d0{p.a0(), q.a0()}, d1{p.a1(), q.a1()};
    return ArrowMor::make(MorExpr::inj(i, d0), MorExpr::inj(i, d1), i == 0 ? p : q, arrow_sum(p, q), cx);
}
inline ArrowMor arrow_proj(std::size_t i, const ArrowObj& p, const ArrowObj& q, const LawContext& cx) {
    const std::vector<SpaceExpr> d0{p.a0(), q.a0()}, d1{p.a1(), q.a1()};
    return ArrowMor::make(MorExpr::proj(i, d0), MorExpr::proj(i, d1), arrow_sum(p, q), i == 0 ? p : q, cx);
}

/// χ̄ : S̄P ⊠ S̄Q → S̄(P ⊕ Q); the summand injections into A1 ⊕ B1 are written out.
inline ArrowMor arrow_seely(const ArrowObj& p, const ArrowObj& q, const LawContext& cx) {
    const auto &A0 = p.a0(), &A1 = p.a1(), &B0 = q.a0(), &B1 = q.a1();
    const std::vector<SpaceExpr> ones{A1, B1};
    const auto SAB = S(SpaceExpr::sum(A0, B0));
    const MorExpr chi = MorExpr::chi(A0, B0);
    MorExpr left = compose(tens(one(SAB), MorExpr::inj(1, ones)), tens(chi, one(B1)));
    MorExpr right = chain({tens(one(SAB), MorExpr::inj(0, ones)), tens(chi, one(A1)),
                           tens(one(S(A0)), MorExpr::sigma(A1, S(B0)))});
    return ArrowMor::make(chi, MorExpr::matrix({{left, right}}), boxtimes_obj(sbar_obj(p), sbar_obj(q)),
                          sbar_obj(arrow_sum(p, q)), cx);
}

/// χ̄⁻¹ : S̄(P ⊕ Q) → S̄P ⊠ S̄Q
inline ArrowMor arrow_seely_inv(const ArrowObj& p, const ArrowObj& q, const LawContext& cx) {
    const auto &A0 = p.a0(), &A1 = p.a1(), &B0 = q.a0(), &B1 = q.a1();
    const auto SAB = S(SpaceExpr::sum(A0, B0));
    const MorExpr ci = chi_inverse(A0, B0, cx.mutation);
    const SpaceExpr top = SpaceExpr::tensor({S(A0), S(B0), B1});
    const SpaceExpr bottom = SpaceExpr::tensor({S(A0), A1, S(B0)});
    MorExpr block = MorExpr::matrix({
        {MorExpr::zero(SpaceExpr::tensor(SAB, A1), top), tens(ci, one(B1))},
        {compose(tens(one(S(A0)), MorExpr::sigma(S(B0), A1)), tens(ci, one(A1))),
         MorExpr::zero(SpaceExpr::tensor(SAB, B1), bottom)},
    });
    MorExpr f1 = compose(block, MorExpr::distribute(SpaceExpr::tensor(SAB, SpaceExpr::sum(A1, B1))));
    return ArrowMor::make(ci, f1, sbar_obj(arrow_sum(p, q)), boxtimes_obj(sbar_obj(p), sbar_obj(q)), cx);
}

/// The zero endomorphism 𝟘 → 𝟘.
inline ArrowObj zero_endo() { return ArrowObj(MorExpr::zero(SpaceExpr::zero(), SpaceExpr::zero())); }

/// χ̄₀ = (χ₀, 0): (0: I → 𝟘) → S̄(0: 𝟘 → 𝟘)
inline ArrowMor arrow_seely0(const LawContext& cx) {
    const ArrowObj Z = sbar_obj(zero_endo());
    return ArrowMor::make(MorExpr::chi0(), MorExpr::zero(SpaceExpr::zero(), Z.a1()), box_unit(), Z, cx);
}
inline ArrowMor arrow_seely0_inv(const LawContext& cx) {
    const ArrowObj Z = sbar_obj(zero_endo());
    return ArrowMor::make(MorExpr::chi0_inv(), MorExpr::zero(Z.a1(), SpaceExpr::zero()), Z, box_unit(), cx);
}

}  // namespace dcat
