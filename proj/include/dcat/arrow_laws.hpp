#pragma once

/** @file arrow_laws.hpp
 *  Law suite of the arrow category.  Each law is a pair of component
 *  diagrams; it passes iff both components pass.
 *
 *  Where the base axioms rely on strict associativity of ⊗, the arrow
 *  versions insert the ⊠ associator explicitly.
 */

#include "dcat/arrow.hpp"
#include "dcat/check.hpp"
#include "dcat/laws.hpp"

#include <string>
#include <vector>

namespace dcat {

namespace arrow_laws {

/// Maps id_{A0} → P and P → id_{A1} whose composite is (φ, φ).
inline std::pair<ArrowMor, ArrowMor> canonical_maps(const ArrowObj& p, const LawContext& cx) {
    ArrowObj ia0(one(p.a0())), ia1(one(p.a1()));
    return {ArrowMor::make(one(p.a0()), p.phi(), ia0, p, cx), ArrowMor::make(p.phi(), one(p.a1()), p, ia1, cx)};
}

inline Verdict sbar_functor_id(const ArrowObj& p, const LawContext& cx) {
    return check_arrow_equal(sbar_mor(arrow_id(p), cx), arrow_id(sbar_obj(p)), cx.opts);
}

inline Verdict sbar_functor_comp(const ArrowObj& p, const LawContext& cx) {
    auto [f, g] = canonical_maps(p, cx);
    return check_arrow_equal(sbar_mor(arrow_compose(g, f), cx), arrow_compose(sbar_mor(g, cx), sbar_mor(f, cx)), cx.opts);
}

inline Verdict sbar_square(const ArrowObj& p, const LawContext& cx) {
    auto [f, g] = canonical_maps(p, cx);
    return both(sbar_mor(f, cx).square(cx.opts), sbar_mor(g, cx).square(cx.opts), "S̄(1, φ)", "S̄(φ, 1)");
}

inline Verdict etabar_square(const ArrowObj& p, const LawContext& cx) { return etabar(p, cx).square(cx.opts); }
inline Verdict mubar_square(const ArrowObj& p, const LawContext& cx) { return mubar(p, cx).square(cx.opts); }

inline Verdict monad_unit_left(const ArrowObj& p, const LawContext& cx) {
    return check_arrow_equal(arrow_compose(mubar(p, cx), etabar(sbar_obj(p), cx)), arrow_id(sbar_obj(p)), cx.opts);
}
inline Verdict monad_unit_right(const ArrowObj& p, const LawContext& cx) {
    return check_arrow_equal(arrow_compose(mubar(p, cx), sbar_mor(etabar(p, cx), cx)), arrow_id(sbar_obj(p)), cx.opts);
}
inline Verdict monad_assoc(const ArrowObj& p, const LawContext& cx) {
    return check_arrow_equal(arrow_compose(mubar(p, cx), sbar_mor(mubar(p, cx), cx)),
                             arrow_compose(mubar(p, cx), mubar(sbar_obj(p), cx)), cx.opts);
}

// --- ⊠ ---------------------------------------------------------------------------

/// Unit laws: (0: I→𝟘) ⊠ P and P ⊠ (0: I→𝟘) normalize to P.
inline Verdict box_unit_law(const ArrowObj& p, const LawContext& cx) {
    const ArrowObj l = boxtimes_obj(box_unit(), p);
    const ArrowObj r = boxtimes_obj(p, box_unit());
    if (!l.same_spaces(p) || !r.same_spaces(p))
        throw rejected_input("box unit does not normalize away for " + p.phi().signature());
    return both(check_equal(l.phi(), p.phi(), cx.opts), check_equal(r.phi(), p.phi(), cx.opts), "left unit",
                "right unit");
}

/// The associator and its inverse are arrow maps and mutually inverse.
inline Verdict box_assoc_law(const ArrowObj& p, const ArrowObj& q, const ArrowObj& r, const LawContext& cx) {
    const ArrowMor a = box_assoc(p, q, r, cx);
    const ArrowMor ai = box_assoc_inv(p, q, r, cx);
    return both(both(a.square(cx.opts), ai.square(cx.opts), "associator square", "inverse square"),
                both(check_arrow_equal(arrow_compose(ai, a), arrow_id(a.src()), cx.opts),
                     check_arrow_equal(arrow_compose(a, ai), arrow_id(ai.src()), cx.opts), "a⁻¹∘a", "a∘a⁻¹"),
                "squares", "inverses");
}

inline Verdict box_sym_involution(const ArrowObj& p, const ArrowObj& q, const LawContext& cx) {
    return check_arrow_equal(arrow_compose(boxtimes_sigma(q, p, cx), boxtimes_sigma(p, q, cx)),
                             arrow_id(boxtimes_obj(p, q)), cx.opts);
}

inline Verdict box_sym_square(const ArrowObj& p, const ArrowObj& q, const LawContext& cx) {
    return boxtimes_sigma(p, q, cx).square(cx.opts);
}

/// σ^⊠ ∘ (f ⊠ g) = (g ⊠ f) ∘ σ^⊠ and (f'∘f) ⊠ (g'∘g) = (f'⊠g') ∘ (f⊠g), for the canonical maps of p and q.
inline Verdict box_natural(const ArrowObj& p, const ArrowObj& q, const LawContext& cx) {
    auto [f, f2] = canonical_maps(p, cx);
    auto [g, g2] = canonical_maps(q, cx);
    Verdict nat = check_arrow_equal(arrow_compose(boxtimes_sigma(p, q, cx), boxtimes_mor(f, g, cx)),
                                    arrow_compose(boxtimes_mor(g, f, cx), boxtimes_sigma(f.src(), g.src(), cx)), cx.opts);
    Verdict bif = check_arrow_equal(boxtimes_mor(arrow_compose(f2, f), arrow_compose(g2, g), cx),
                                    arrow_compose(boxtimes_mor(f2, g2, cx), boxtimes_mor(f, g, cx)), cx.opts);
    return both(nat, bif, "symmetry naturality", "bifunctoriality");
}

// --- lifted algebra modality -------------------------------------------------

inline Verdict mbar_square(const ArrowObj& p, const LawContext& cx) {
    return both(mbar(p, cx).square(cx.opts), ubar(p, cx).square(cx.opts), "m̄", "ū");
}

inline Verdict monoid_assoc(const ArrowObj& p, const LawContext& cx) {
    const ArrowObj P = sbar_obj(p);
    const ArrowMor m = mbar(p, cx);
    const ArrowMor lhs = arrow_compose(m, boxtimes_mor(m, arrow_id(P), cx));
    const ArrowMor rhs = arrow_chain({m, boxtimes_mor(arrow_id(P), m, cx), box_assoc(P, P, P, cx)});
    return check_arrow_equal(lhs, rhs, cx.opts);
}
inline Verdict monoid_unit_left(const ArrowObj& p, const LawContext& cx) {
    const ArrowObj P = sbar_obj(p);
    return check_arrow_equal(arrow_compose(mbar(p, cx), boxtimes_mor(ubar(p, cx), arrow_id(P), cx)), arrow_id(P),
                             cx.opts);
}
inline Verdict monoid_unit_right(const ArrowObj& p, const LawContext& cx) {
    const ArrowObj P = sbar_obj(p);
    return check_arrow_equal(arrow_compose(mbar(p, cx), boxtimes_mor(arrow_id(P), ubar(p, cx), cx)), arrow_id(P),
                             cx.opts);
}
inline Verdict monoid_comm(const ArrowObj& p, const LawContext& cx) {
    const ArrowObj P = sbar_obj(p);
    return check_arrow_equal(arrow_compose(mbar(p, cx), boxtimes_sigma(P, P, cx)), mbar(p, cx), cx.opts);
}
inline Verdict mu_monoid_morphism(const ArrowObj& p, const LawContext& cx) {
    const ArrowMor mu = mubar(p, cx);
    Verdict mult = check_arrow_equal(arrow_compose(mu, mbar(sbar_obj(p), cx)),
                                     arrow_compose(mbar(p, cx), boxtimes_mor(mu, mu, cx)), cx.opts);
    Verdict unit = check_arrow_equal(arrow_compose(mu, ubar(sbar_obj(p), cx)), ubar(p, cx), cx.opts);
    return both(mult, unit, "multiplication", "unit");
}

// --- deriving map d̄ ----------------------------------------------------------

inline Verdict dbar_square(const ArrowObj& p, const LawContext& cx) { return dbar(p, cx).square(cx.opts); }

inline Verdict d1(const ArrowObj& p, const LawContext& cx) {
    const ArrowMor lhs = arrow_compose(dbar(p, cx), ubar(p, cx));
    return check_arrow_equal(lhs, arrow_zero(lhs.src(), lhs.dst()), cx.opts);
}

inline Verdict d2(const ArrowObj& p, const LawContext& cx) {
    const ArrowObj Q = sbar_obj(p);
    const ArrowMor d = dbar(p, cx);
    const ArrowMor lhs = arrow_compose(d, mbar(p, cx));
    const ArrowMor straight = boxtimes_mor(arrow_id(Q), d, cx);
    const ArrowMor twisted = arrow_chain(
        {boxtimes_mor(arrow_id(Q), boxtimes_sigma(p, Q, cx), cx), box_assoc(Q, p, Q, cx), boxtimes_mor(d, arrow_id(Q), cx)});
    const ArrowMor inner = cx.mutation == Mutation::leibniz_drop ? straight : arrow_add(straight, twisted);
    const ArrowMor rhs =
        arrow_chain({boxtimes_mor(mbar(p, cx), arrow_id(p), cx), box_assoc_inv(Q, Q, p, cx), inner});
    return check_arrow_equal(lhs, rhs, cx.opts);
}

inline Verdict d3(const ArrowObj& p, const LawContext& cx) {
    return check_arrow_equal(arrow_compose(dbar(p, cx), etabar(p, cx)), boxtimes_mor(ubar(p, cx), arrow_id(p), cx),
                             cx.opts);
}

inline Verdict d4(const ArrowObj& p, const LawContext& cx) {
    const ArrowObj Q = sbar_obj(p);
    const ArrowMor lhs = arrow_compose(dbar(p, cx), mubar(p, cx));
    const ArrowMor rhs = arrow_chain({boxtimes_mor(mbar(p, cx), arrow_id(p), cx), box_assoc_inv(Q, Q, p, cx),
                                      boxtimes_mor(mubar(p, cx), dbar(p, cx), cx), dbar(Q, cx)});
    return check_arrow_equal(lhs, rhs, cx.opts);
}

inline Verdict d5(const ArrowObj& p, const LawContext& cx) {
    const ArrowObj Q = sbar_obj(p);
    const ArrowMor dd = arrow_chain({box_assoc(Q, p, p, cx), boxtimes_mor(dbar(p, cx), arrow_id(p), cx), dbar(p, cx)});
    const ArrowMor lhs = arrow_compose(boxtimes_mor(arrow_id(Q), boxtimes_sigma(p, p, cx), cx), dd);
    return check_arrow_equal(lhs, dd, cx.opts);
}

// --- biproducts and Seely --------------------------------------------------------

inline Verdict biproduct(const ArrowObj& p, const ArrowObj& q, const LawContext& cx) {
    Verdict v;
    v.weight_bound = cx.opts.bound;
    const ArrowObj pq = arrow_sum(p, q);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            const ArrowMor c = arrow_compose(arrow_proj(i, p, q, cx), arrow_inj(j, p, q, cx));
            const ArrowMor e = i == j ? arrow_id(c.dst()) : arrow_zero(c.src(), c.dst());
            v = both(v, check_arrow_equal(c, e, cx.opts), "", "proj" + std::to_string(i) + "∘inj" + std::to_string(j));
        }
    const ArrowMor total = arrow_add(arrow_compose(arrow_inj(0, p, q, cx), arrow_proj(0, p, q, cx)),
                                     arrow_compose(arrow_inj(1, p, q, cx), arrow_proj(1, p, q, cx)));
    return both(v, check_arrow_equal(total, arrow_id(pq), cx.opts), "", "Σ inj∘proj");
}

inline Verdict seely_square(const ArrowObj& p, const ArrowObj& q, const LawContext& cx) {
    return both(arrow_seely(p, q, cx).square(cx.opts), arrow_seely_inv(p, q, cx).square(cx.opts), "χ̄", "χ̄⁻¹");
}
inline Verdict seely_iso_l(const ArrowObj& p, const ArrowObj& q, const LawContext& cx) {
    const ArrowMor c = arrow_seely(p, q, cx);
    return check_arrow_equal(arrow_compose(arrow_seely_inv(p, q, cx), c), arrow_id(c.src()), cx.opts);
}
inline Verdict seely_iso_r(const ArrowObj& p, const ArrowObj& q, const LawContext& cx) {
    const ArrowMor c = arrow_seely_inv(p, q, cx);
    return check_arrow_equal(arrow_compose(arrow_seely(p, q, cx), c), arrow_id(c.src()), cx.opts);
}
/// χ̄₀ coincides with ū at the zero endomorphism and is invertible.
inline Verdict seely0(const LawContext& cx) {
    const ArrowMor c = arrow_seely0(cx);
    const ArrowMor ci = arrow_seely0_inv(cx);
    Verdict is_ubar = check_arrow_equal(c, ubar(zero_endo(), cx), cx.opts);
    Verdict iso = both(check_arrow_equal(arrow_compose(ci, c), arrow_id(c.src()), cx.opts),
                       check_arrow_equal(arrow_compose(c, ci), arrow_id(ci.src()), cx.opts), "χ̄₀⁻¹∘χ̄₀", "χ̄₀∘χ̄₀⁻¹");
    return both(is_ubar, iso, "χ̄₀ = ū", "inverse");
}

}  // namespace arrow_laws

/// Unary arrow laws on every sample, plus binary laws on consecutive sample pairs.
inline std::vector<LawResult> arrow_law_suite(const std::vector<ArrowObj>& samples, const LawContext& cx) {
    using namespace arrow_laws;
    std::vector<LawResult> out;
    for (const auto& p : samples) {
        out.push_back({"arrow.sbar.functor.id", sbar_functor_id(p, cx)});
        out.push_back({"arrow.sbar.functor.comp", sbar_functor_comp(p, cx)});
        out.push_back({"arrow.sbar.square", sbar_square(p, cx)});
        out.push_back({"arrow.etabar.square", etabar_square(p, cx)});
        out.push_back({"arrow.mubar.square", mubar_square(p, cx)});
        out.push_back({"arrow.monad.unit.left", monad_unit_left(p, cx)});
        out.push_back({"arrow.monad.unit.right", monad_unit_right(p, cx)});
        out.push_back({"arrow.monad.assoc", monad_assoc(p, cx)});
        out.push_back({"arrow.boxtimes.unit", box_unit_law(p, cx)});
        out.push_back({"arrow.mbar.square", mbar_square(p, cx)});
        out.push_back({"arrow.monoid.assoc", monoid_assoc(p, cx)});
        out.push_back({"arrow.monoid.unit.left", monoid_unit_left(p, cx)});
        out.push_back({"arrow.monoid.unit.right", monoid_unit_right(p, cx)});
        out.push_back({"arrow.monoid.comm", monoid_comm(p, cx)});
        out.push_back({"arrow.mu.monoid_morphism", mu_monoid_morphism(p, cx)});
        out.push_back({"arrow.dbar.square", dbar_square(p, cx)});
        out.push_back({"arrow.D1", d1(p, cx)});
        out.push_back({"arrow.D2", d2(p, cx)});
        out.push_back({"arrow.D3", d3(p, cx)});
        out.push_back({"arrow.D4", d4(p, cx)});
        out.push_back({"arrow.D5", d5(p, cx)});
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& p = samples[i];
        const auto& q = samples[(i + 1) % samples.size()];
        const auto& r = samples[(i + 2) % samples.size()];
        out.push_back({"arrow.boxtimes.assoc", box_assoc_law(p, q, r, cx)});
        out.push_back({"arrow.boxtimes.sym.involution", box_sym_involution(p, q, cx)});
        out.push_back({"arrow.boxtimes.sym.square", box_sym_square(p, q, cx)});
        out.push_back({"arrow.boxtimes.natural", box_natural(p, q, cx)});
        out.push_back({"arrow.biproduct", biproduct(p, q, cx)});
        out.push_back({"arrow.seely.square", seely_square(p, q, cx)});
        out.push_back({"arrow.seely.iso.l", seely_iso_l(p, q, cx)});
        out.push_back({"arrow.seely.iso.r", seely_iso_r(p, q, cx)});
    }
    out.push_back({"arrow.seely0", seely0(cx)});
    return out;
}

}  // namespace dcat
