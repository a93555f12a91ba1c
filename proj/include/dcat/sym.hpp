#pragma once

/** @file sym.hpp
 *  The symmetric-algebra modality: shorthand constructors and the base law suite.
 *
 *  S(A) is the polynomial algebra on a basis of A.  Every law is a pair of
 *  parallel composites checked with check_equal.
 */

#include "dcat/check.hpp"
#include "dcat/laws.hpp"
#include "dcat/morphism.hpp"

#include <random>
#include <string>
#include <vector>

namespace dcat {

inline SpaceExpr S(const SpaceExpr& a) { return SpaceExpr::sym(a); }
inline MorExpr one(const SpaceExpr& a) { return MorExpr::id(a); }
inline MorExpr tens(const MorExpr& f, const MorExpr& g) { return MorExpr::tensor(f, g); }
inline MorExpr tens(const MorExpr& f, const MorExpr& g, const MorExpr& h) { return tens(tens(f, g), h); }

/// Augmentation S(A) → I, sending every non-constant monomial to zero.
inline MorExpr augmentation(const SpaceExpr& a) {
    return compose(MorExpr::chi0_inv(), MorExpr::symf(MorExpr::zero(a, SpaceExpr::zero())));
}

/// The Seely map as the composite m ∘ (S(inj0) ⊗ S(inj1)).
inline MorExpr chi_composite(const SpaceExpr& a, const SpaceExpr& b) {
    const std::vector<SpaceExpr> ab{a, b};
    return compose(MorExpr::mult(SpaceExpr::sum(ab)),
                   tens(MorExpr::symf(MorExpr::inj(0, ab)), MorExpr::symf(MorExpr::inj(1, ab))));
}

inline MorExpr chi_inverse(const SpaceExpr& a, const SpaceExpr& b, Mutation mut = Mutation::none) {
    return mut == Mutation::chi_inv_split ? MorExpr::chi_inv_split(a, b) : MorExpr::chi_inv(a, b);
}

namespace laws {

using M = MorExpr;

inline Verdict d1(const SpaceExpr& A, const LawContext& cx) {
    return check_equal(compose(M::deriv(A), M::unit(A)), M::zero(SpaceExpr::unit(), SpaceExpr::tensor(S(A), A)), cx.opts);
}

inline Verdict d2(const SpaceExpr& A, const LawContext& cx) {
    const auto SA = S(A);
    MorExpr lhs = compose(M::deriv(A), M::mult(A));
    MorExpr straight = tens(one(SA), M::deriv(A));
    MorExpr twisted = chain({tens(one(SA), M::sigma(A, SA)), tens(M::deriv(A), one(SA))});
    MorExpr inner = cx.mutation == Mutation::leibniz_drop ? straight : straight + twisted;
    return check_equal(lhs, compose(tens(M::mult(A), one(A)), inner), cx.opts);
}

inline Verdict d3(const SpaceExpr& A, const LawContext& cx) {
    return check_equal(compose(M::deriv(A), M::eta(A)), tens(M::unit(A), one(A)), cx.opts);
}

inline Verdict d4(const SpaceExpr& A, const LawContext& cx) {
    MorExpr lhs = compose(M::deriv(A), M::mu(A));
    MorExpr rhs = chain({tens(M::mult(A), one(A)), tens(M::mu(A), M::deriv(A)), M::deriv(S(A))});
    return check_equal(lhs, rhs, cx.opts);
}

inline Verdict d5(const SpaceExpr& A, const LawContext& cx) {
    MorExpr dd = compose(tens(M::deriv(A), one(A)), M::deriv(A));
    return check_equal(compose(tens(one(S(A)), M::sigma(A, A)), dd), dd, cx.opts);
}

inline Verdict monad_unit_left(const SpaceExpr& A, const LawContext& cx) {
    return check_equal(compose(M::mu(A), M::eta(S(A))), one(S(A)), cx.opts);
}
inline Verdict monad_unit_right(const SpaceExpr& A, const LawContext& cx) {
    return check_equal(compose(M::mu(A), M::symf(M::eta(A))), one(S(A)), cx.opts);
}
inline Verdict monad_assoc(const SpaceExpr& A, const LawContext& cx) {
    return check_equal(compose(M::mu(A), M::symf(M::mu(A))), compose(M::mu(A), M::mu(S(A))), cx.opts);
}

inline Verdict monoid_assoc(const SpaceExpr& A, const LawContext& cx) {
    const auto SA = S(A);
    return check_equal(compose(M::mult(A), tens(one(SA), M::mult(A))), compose(M::mult(A), tens(M::mult(A), one(SA))),
                       cx.opts);
}
inline Verdict monoid_unit_left(const SpaceExpr& A, const LawContext& cx) {
    return check_equal(compose(M::mult(A), tens(M::unit(A), one(S(A)))), one(S(A)), cx.opts);
}
inline Verdict monoid_unit_right(const SpaceExpr& A, const LawContext& cx) {
    return check_equal(compose(M::mult(A), tens(one(S(A)), M::unit(A))), one(S(A)), cx.opts);
}
inline Verdict monoid_comm(const SpaceExpr& A, const LawContext& cx) {
    return check_equal(compose(M::mult(A), M::sigma(S(A), S(A))), M::mult(A), cx.opts);
}

inline Verdict mu_mult(const SpaceExpr& A, const LawContext& cx) {
    return check_equal(compose(M::mu(A), M::mult(S(A))), compose(M::mult(A), tens(M::mu(A), M::mu(A))), cx.opts);
}
inline Verdict mu_unit(const SpaceExpr& A, const LawContext& cx) {
    return check_equal(compose(M::mu(A), M::unit(S(A))), M::unit(A), cx.opts);
}

// Naturality against f: A → B.
inline Verdict nat_eta(const MorExpr& f, const LawContext& cx) {
    return check_equal(compose(M::symf(f), M::eta(f.dom())), compose(M::eta(f.cod()), f), cx.opts);
}
inline Verdict nat_mu(const MorExpr& f, const LawContext& cx) {
    return check_equal(compose(M::mu(f.cod()), M::symf(M::symf(f))), compose(M::symf(f), M::mu(f.dom())), cx.opts);
}
inline Verdict nat_m(const MorExpr& f, const LawContext& cx) {
    return check_equal(compose(M::mult(f.cod()), tens(M::symf(f), M::symf(f))), compose(M::symf(f), M::mult(f.dom())),
                       cx.opts);
}
inline Verdict nat_u(const MorExpr& f, const LawContext& cx) {
    return check_equal(compose(M::symf(f), M::unit(f.dom())), M::unit(f.cod()), cx.opts);
}
inline Verdict nat_d(const MorExpr& f, const LawContext& cx) {
    return check_equal(compose(M::deriv(f.cod()), M::symf(f)), compose(tens(M::symf(f), f), M::deriv(f.dom())),
                       cx.opts);
}

inline Verdict functor_id(const SpaceExpr& A, const LawContext& cx) {
    return check_equal(M::symf(one(A)), one(S(A)), cx.opts);
}
/// S(g ∘ f) = S(g) ∘ S(f)
inline Verdict functor_comp(const MorExpr& g, const MorExpr& f, const LawContext& cx) {
    return check_equal(M::symf(compose(g, f)), compose(M::symf(g), M::symf(f)), cx.opts);
}

// Seely maps on a pair of spaces.
inline Verdict seely_def(const SpaceExpr& A, const SpaceExpr& B, const LawContext& cx) {
    return check_equal(M::chi(A, B), chi_composite(A, B), cx.opts);
}
inline Verdict seely_iso_l(const SpaceExpr& A, const SpaceExpr& B, const LawContext& cx) {
    return check_equal(compose(chi_inverse(A, B, cx.mutation), M::chi(A, B)), one(SpaceExpr::tensor(S(A), S(B))), cx.opts);
}
inline Verdict seely_iso_r(const SpaceExpr& A, const SpaceExpr& B, const LawContext& cx) {
    return check_equal(compose(M::chi(A, B), chi_inverse(A, B, cx.mutation)), one(S(SpaceExpr::sum(A, B))), cx.opts);
}
inline Verdict seely0_def(const LawContext& cx) {
    return check_equal(M::chi0(), M::unit(SpaceExpr::zero()), cx.opts);
}
inline Verdict seely0_iso(const LawContext& cx) {
    return both(check_equal(compose(M::chi0_inv(), M::chi0()), one(SpaceExpr::unit()), cx.opts),
                check_equal(compose(M::chi0(), M::chi0_inv()), one(S(SpaceExpr::zero())), cx.opts), "χ₀⁻¹∘χ₀",
                "χ₀∘χ₀⁻¹");
}

}  // namespace laws

/// Every base-category law instantiated at A.  Naturality uses random maps A → A and A → W[2].
inline std::vector<LawResult> base_law_suite(const SpaceExpr& A, const LawContext& cx) {
    std::mt19937_64 rng(cx.seed);
    const auto W = SpaceExpr::base("W", 2);
    const MorExpr f = random_linear(A, A, rng);
    const MorExpr g = random_linear(A, W, rng);
    auto nat = [&](auto law) { return both(law(f, cx), law(g, cx), "endomorphism", "map to W[2]"); };
    return {
        {"D1", laws::d1(A, cx)},
        {"D2", laws::d2(A, cx)},
        {"D3", laws::d3(A, cx)},
        {"D4", laws::d4(A, cx)},
        {"D5", laws::d5(A, cx)},
        {"monad.unit.left", laws::monad_unit_left(A, cx)},
        {"monad.unit.right", laws::monad_unit_right(A, cx)},
        {"monad.assoc", laws::monad_assoc(A, cx)},
        {"monoid.assoc", laws::monoid_assoc(A, cx)},
        {"monoid.unit.left", laws::monoid_unit_left(A, cx)},
        {"monoid.unit.right", laws::monoid_unit_right(A, cx)},
        {"monoid.comm", laws::monoid_comm(A, cx)},
        {"mu.monoid_morphism.mult", laws::mu_mult(A, cx)},
        {"mu.monoid_morphism.unit", laws::mu_unit(A, cx)},
        {"nat.eta", nat(laws::nat_eta)},
        {"nat.mu", nat(laws::nat_mu)},
        {"nat.m", nat(laws::nat_m)},
        {"nat.u", nat(laws::nat_u)},
        {"nat.d", nat(laws::nat_d)},
    };
}

inline std::vector<LawResult> base_law_suite(const SpaceExpr& A, std::size_t weight_bound) {
    LawContext cx;
    cx.opts.bound = weight_bound;
    cx.opts.deep_bound = std::min<std::size_t>(weight_bound, 2);
    return base_law_suite(A, cx);
}

}  // namespace dcat
