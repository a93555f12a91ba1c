#pragma once

/** @file derivations.hpp
 *  S-algebras, modules, derivations and S-derivations, and the two
 *  dictionaries: S̄-algebras ↔ S-derivations, commutative ⊠-monoids ↔ derivations.
 *
 *  Typed wrappers validate their defining diagrams on construction when the
 *  context carries no mutation; a failing diagram raises law_violation
 *  naming it.
 */

#include "dcat/arrow.hpp"
#include "dcat/check.hpp"
#include "dcat/laws.hpp"
#include "dcat/morphism.hpp"
#include "dcat/sym.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace dcat {

namespace detail {
inline void validate(const LawContext& cx, const std::vector<LawResult>& results) {
    if (cx.mutation != Mutation::none) return;
    for (const auto& r : results) require(r.name, r.verdict);
}
}  // namespace detail

// --- S-algebras ------------------------------------------------------------------

class SAlgebra {
public:
    /// Checks ν ∘ η = 1 and ν ∘ μ = ν ∘ S(ν).
    static SAlgebra make(SpaceExpr carrier, MorExpr nu, const LawContext& cx) {
        SAlgebra a(std::move(carrier), std::move(nu));
        detail::validate(cx, a.laws(cx));
        return a;
    }

    /// Skips the law checks; used where the laws themselves are under test.
    static SAlgebra unchecked(SpaceExpr carrier, MorExpr nu) { return SAlgebra(std::move(carrier), std::move(nu)); }

    /// The free algebra (S(V), μ_V).
    static SAlgebra free(const SpaceExpr& v) { return SAlgebra(S(v), MorExpr::mu(v)); }

    /// Algebra presented by structure constants: table[i][j] is the coordinate vector of e_i·e_j.
    static SAlgebra from_table(const SpaceExpr& carrier, const std::vector<std::vector<std::vector<Rational>>>& table,
                               const std::vector<Rational>& unit, const LawContext& cx) {
        if (!carrier.sym_free()) throw rejected_input("table algebra on Sym carrier " + carrier.str());
        const auto basis = enumerate_basis(carrier, 0);
        const std::size_t n = basis.size();
        auto vec = [&](const std::vector<Rational>& coords) {
            if (coords.size() != n) throw rejected_input("table entry of length " + std::to_string(coords.size()) +
                                                         " for rank " + std::to_string(n));
            Element e(carrier);
            for (std::size_t k = 0; k < n; ++k) e.add_term(basis[k], coords[k]);
            return e;
        };
        if (table.size() != n) throw rejected_input("multiplication table has wrong number of rows");
        const SpaceExpr aa = SpaceExpr::tensor(carrier, carrier);
        MorExpr::Images mult;
        for (std::size_t i = 0; i < n; ++i) {
            if (table[i].size() != n) throw rejected_input("multiplication table has wrong number of columns");
            for (std::size_t j = 0; j < n; ++j)
                mult.emplace(join_tensor({carrier, carrier}, {basis[i], basis[j]}), vec(table[i][j]));
        }
        MorExpr m = MorExpr::linear(aa, carrier, std::move(mult));
        MorExpr u = MorExpr::linear(SpaceExpr::unit(), carrier, {{BasisVector::unit(), vec(unit)}});
        const CheckOptions flat{0, 0};
        if (cx.mutation == Mutation::none) {
            require("table.comm", check_equal(compose(m, MorExpr::sigma(carrier, carrier)), m, flat));
            require("table.assoc", check_equal(compose(m, tens(one(carrier), m)), compose(m, tens(m, one(carrier))), flat));
            require("table.unit", both(check_equal(compose(m, tens(u, one(carrier))), one(carrier), flat),
                                       check_equal(compose(m, tens(one(carrier), u)), one(carrier), flat)));
        }
        return make(carrier, MorExpr::fold(m, u), cx);
    }

    [[nodiscard]] const SpaceExpr& carrier() const { return carrier_; }
    [[nodiscard]] const MorExpr& nu() const { return nu_; }

    /// m^ν = ν ∘ m ∘ (η ⊗ η)
    [[nodiscard]] MorExpr mult() const {
        return chain({nu_, MorExpr::mult(carrier_), tens(MorExpr::eta(carrier_), MorExpr::eta(carrier_))});
    }
    /// u^ν = ν ∘ u
    [[nodiscard]] MorExpr unit() const { return compose(nu_, MorExpr::unit(carrier_)); }

    [[nodiscard]] std::vector<LawResult> laws(const LawContext& cx) const {
        const auto& A = carrier_;
        return {
            {"salg.unit", check_equal(compose(nu_, MorExpr::eta(A)), one(A), cx.opts)},
            {"salg.assoc", check_equal(compose(nu_, MorExpr::mu(A)), compose(nu_, MorExpr::symf(nu_)), cx.opts)},
        };
    }

    /// Commutative monoid laws of (m^ν, u^ν).
    [[nodiscard]] std::vector<LawResult> monoid_laws(const LawContext& cx) const {
        const auto& A = carrier_;
        const MorExpr m = mult(), u = unit();
        return {
            {"salg.monoid.assoc", check_equal(compose(m, tens(one(A), m)), compose(m, tens(m, one(A))), cx.opts)},
            {"salg.monoid.unit", both(check_equal(compose(m, tens(u, one(A))), one(A), cx.opts),
                                      check_equal(compose(m, tens(one(A), u)), one(A), cx.opts), "left", "right")},
            {"salg.monoid.comm", check_equal(compose(m, MorExpr::sigma(A, A)), m, cx.opts)},
        };
    }

private:
    SAlgebra(SpaceExpr c, MorExpr nu) : carrier_(std::move(c)), nu_(std::move(nu)) {
        if (!(nu_.dom() == S(carrier_)) || !(nu_.cod() == carrier_))
            throw rejected_input("S-algebra structure map has type " + nu_.signature() + " for carrier " + carrier_.str());
    }

    SpaceExpr carrier_;
    MorExpr nu_;
};

/// (m^ν, u^ν)
inline std::pair<MorExpr, MorExpr> induced_monoid(const SAlgebra& a) { return {a.mult(), a.unit()}; }

// --- modules and derivations -------------------------------------------------------

class AModule {
public:
    /// Checks α ∘ (u^ν ⊗ 1) = 1 and α ∘ (m^ν ⊗ 1) = α ∘ (1 ⊗ α).
    static AModule make(const SAlgebra& alg, SpaceExpr carrier, MorExpr alpha, const LawContext& cx) {
        AModule m(alg, std::move(carrier), std::move(alpha));
        detail::validate(cx, m.laws(alg, cx));
        return m;
    }

    [[nodiscard]] const SpaceExpr& carrier() const { return carrier_; }
    [[nodiscard]] const MorExpr& alpha() const { return alpha_; }

    [[nodiscard]] std::vector<LawResult> laws(const SAlgebra& alg, const LawContext& cx) const {
        const auto& A = alg.carrier();
        const auto& M = carrier_;
        return {
            {"module.unit", check_equal(compose(alpha_, tens(alg.unit(), one(M))), one(M), cx.opts)},
            {"module.assoc", check_equal(compose(alpha_, tens(alg.mult(), one(M))),
                                         compose(alpha_, tens(one(A), alpha_)), cx.opts)},
        };
    }

private:
    AModule(const SAlgebra& alg, SpaceExpr c, MorExpr alpha) : carrier_(std::move(c)), alpha_(std::move(alpha)) {
        if (!(alpha_.dom() == SpaceExpr::tensor(alg.carrier(), carrier_)) || !(alpha_.cod() == carrier_))
            throw rejected_input("module action has type " + alpha_.signature());
    }

    SpaceExpr carrier_;
    MorExpr alpha_;
};

class Derivation {
public:
    /// Checks the constant and Leibniz rules; also the chain rule when `s_derivation` is claimed.
    static Derivation make(SAlgebra alg, AModule mod, MorExpr D, const LawContext& cx, bool s_derivation = false) {
        Derivation d(std::move(alg), std::move(mod), std::move(D));
        detail::validate(cx, d.plain_laws(cx));
        if (s_derivation) detail::validate(cx, {{"sderivation.chain", d.chain_rule(cx)}});
        return d;
    }

    [[nodiscard]] const SAlgebra& algebra() const { return alg_; }
    [[nodiscard]] const AModule& module() const { return mod_; }
    [[nodiscard]] const MorExpr& D() const { return D_; }

    /// D ∘ u^ν = 0 and D ∘ m^ν = α ∘ ((1 ⊗ D) + σ ∘ (D ⊗ 1)).
    [[nodiscard]] std::vector<LawResult> plain_laws(const LawContext& cx) const {
        const auto& A = alg_.carrier();
        const auto& M = mod_.carrier();
        const MorExpr& a = mod_.alpha();
        MorExpr leib = tens(one(A), D_) + compose(MorExpr::sigma(M, A), tens(D_, one(A)));
        return {
            {"derivation.constant", check_equal(compose(D_, alg_.unit()), MorExpr::zero(SpaceExpr::unit(), M), cx.opts)},
            {"derivation.leibniz", check_equal(compose(D_, alg_.mult()), compose(a, leib), cx.opts)},
        };
    }

    /// D ∘ ν = α ∘ (ν ⊗ D) ∘ d
    [[nodiscard]] Verdict chain_rule(const LawContext& cx) const {
        const auto& A = alg_.carrier();
        return check_equal(compose(D_, alg_.nu()), chain({mod_.alpha(), tens(alg_.nu(), D_), MorExpr::deriv(A)}),
                           cx.opts);
    }

private:
    Derivation(SAlgebra alg, AModule mod, MorExpr D) : alg_(std::move(alg)), mod_(std::move(mod)), D_(std::move(D)) {
        if (!(D_.dom() == alg_.carrier()) || !(D_.cod() == mod_.carrier()))
            throw rejected_input("derivation map has type " + D_.signature());
    }

    SAlgebra alg_;
    AModule mod_;
    MorExpr D_;
};

inline Verdict is_s_derivation(const Derivation& d, const LawContext& cx) { return d.chain_rule(cx); }

// --- S̄-algebras -------------------------------------------------------------------

/// An object φ: A0 → A1 with ν0: S(A0) → A0 and ν1: S(A0) ⊗ A1 → A1.
struct SbarAlgebra {
    ArrowObj obj;
    MorExpr nu0, nu1;

    [[nodiscard]] std::vector<LawResult> laws(const LawContext& cx) const {
        const auto& A0 = obj.a0();
        const auto& A1 = obj.a1();
        const auto& phi = obj.phi();
        return {
            {"sbar_alg.square",
             check_equal(compose(phi, nu0), chain({nu1, tens(one(S(A0)), phi), MorExpr::deriv(A0)}), cx.opts)},
            {"sbar_alg.unit0", check_equal(compose(nu0, MorExpr::eta(A0)), one(A0), cx.opts)},
            {"sbar_alg.unit1", check_equal(compose(nu1, tens(MorExpr::unit(A0), one(A1))), one(A1), cx.opts)},
            {"sbar_alg.assoc0", check_equal(compose(nu0, MorExpr::mu(A0)), compose(nu0, MorExpr::symf(nu0)), cx.opts)},
            {"sbar_alg.assoc1",
             check_equal(chain({nu1, tens(MorExpr::mult(A0), one(A1)), tens(MorExpr::mu(A0), one(S(A0)), one(A1))}),
                         compose(nu1, tens(MorExpr::symf(nu0), nu1)), cx.opts)},
        };
    }

    /// ν1 ∘ (η ⊗ 1) ∘ (ν0 ⊗ 1) = ν1 and ν1 ∘ (1 ⊗ ν1) = ν1 ∘ (m ⊗ 1).
    [[nodiscard]] std::vector<LawResult> auxiliary_laws(const LawContext& cx) const {
        const auto& A0 = obj.a0();
        const auto& A1 = obj.a1();
        return {
            {"sbar_alg.aux.eta",
             check_equal(chain({nu1, tens(MorExpr::eta(A0), one(A1)), tens(nu0, one(A1))}), nu1, cx.opts)},
            {"sbar_alg.aux.mult", check_equal(compose(nu1, tens(one(S(A0)), nu1)),
                                              compose(nu1, tens(MorExpr::mult(A0), one(A1))), cx.opts)},
        };
    }
};

/// The free S̄-algebra (S̄P, μ̄).
inline SbarAlgebra free_sbar_algebra(const ArrowObj& p, const LawContext& cx) {
    const ArrowMor mu = mubar(p, cx);
    return {sbar_obj(p), mu.f0(), mu.f1()};
}

/// α_{ν1} = ν1 ∘ (η ⊗ 1)
inline MorExpr action_of(const SbarAlgebra& a) {
    return compose(a.nu1, tens(MorExpr::eta(a.obj.a0()), one(a.obj.a1())));
}

/// ν_α = α ∘ (ν ⊗ 1)
inline MorExpr lifted_action_of(const Derivation& d) {
    return compose(d.module().alpha(), tens(d.algebra().nu(), one(d.module().carrier())));
}

/// S̄-algebra → S-derivation φ: (A0, ν0) → (A1, α_{ν1}).
inline Derivation algebra_to_derivation(const SbarAlgebra& a, const LawContext& cx) {
    detail::validate(cx, a.laws(cx));
    SAlgebra alg = SAlgebra::make(a.obj.a0(), a.nu0, cx);
    AModule mod = AModule::make(alg, a.obj.a1(), action_of(a), cx);
    return Derivation::make(alg, mod, a.obj.phi(), cx, true);
}

/// S-derivation → S̄-algebra ((D: A → M), (ν, ν_α)).
inline SbarAlgebra derivation_to_algebra(const Derivation& d, const LawContext& cx) {
    detail::validate(cx, {{"sderivation.chain", is_s_derivation(d, cx)}});
    SbarAlgebra a{ArrowObj(d.D()), d.algebra().nu(), lifted_action_of(d)};
    detail::validate(cx, a.laws(cx));
    return a;
}

/// α_{ν_α} = α
inline Verdict roundtrip_alpha(const Derivation& d, const LawContext& cx) {
    const SbarAlgebra a = derivation_to_algebra(d, cx);
    return check_equal(action_of(a), d.module().alpha(), cx.opts);
}

/// ν_{α_{ν1}} = ν1
inline Verdict roundtrip_nu(const SbarAlgebra& a, const LawContext& cx) {
    const Derivation d = algebra_to_derivation(a, cx);
    return check_equal(lifted_action_of(d), a.nu1, cx.opts);
}

/// Squares for (f0, f1) to be a map of S̄-algebras a → b.
inline Verdict is_sbar_algebra_morphism(const SbarAlgebra& a, const SbarAlgebra& b, const MorExpr& f0, const MorExpr& f1,
                                        const LawContext& cx) {
    Verdict sq = check_equal(compose(b.obj.phi(), f0), compose(f1, a.obj.phi()), cx.opts);
    Verdict v0 = check_equal(compose(b.nu0, MorExpr::symf(f0)), compose(f0, a.nu0), cx.opts);
    Verdict v1 = check_equal(compose(b.nu1, tens(MorExpr::symf(f0), f1)), compose(f1, a.nu1), cx.opts);
    return both(sq, both(v0, v1, "ν0 square", "ν1 square"), "arrow square", "");
}

/// Squares for (f, g) to be a map of S-derivations d → e.
inline Verdict is_derivation_morphism(const Derivation& d, const Derivation& e, const MorExpr& f, const MorExpr& g,
                                      const LawContext& cx) {
    Verdict alg = check_equal(compose(e.algebra().nu(), MorExpr::symf(f)), compose(f, d.algebra().nu()), cx.opts);
    Verdict mod = check_equal(compose(e.module().alpha(), tens(f, g)), compose(g, d.module().alpha()), cx.opts);
    Verdict der = check_equal(compose(e.D(), f), compose(g, d.D()), cx.opts);
    return both(alg, both(mod, der, "action square", "derivation square"), "algebra square", "");
}

// --- commutative ⊠-monoids --------------------------------------------------------------

/// (φ, (m0, [m1 m2]), (u0, 0)) with φ: A0 → A1.
struct ArrowMonoid {
    ArrowObj obj;
    MorExpr m0, m1, m2, u0;

    [[nodiscard]] std::vector<LawResult> laws(const LawContext& cx) const {
        using M = MorExpr;
        const auto& A0 = obj.a0();
        const auto& A1 = obj.a1();
        const auto t = [](std::vector<SpaceExpr> v) { return SpaceExpr::tensor(v); };
        const MorExpr act = M::matrix({{m1, m2}});
        const SpaceExpr A0A1 = t({A0, A1}), A1A0 = t({A1, A0});
        const SpaceExpr s001 = t({A0, A0, A1}), s010 = t({A0, A1, A0}), s100 = t({A1, A0, A0});

        MorExpr top = M::matrix({{tens(one(A0), m1), tens(one(A0), m2), M::zero(s100, A0A1)},
                                 {M::zero(s001, A1A0), M::zero(s010, A1A0), tens(one(A1), m0)}});
        MorExpr left = M::matrix({{tens(m0, one(A1)), M::zero(s010, A0A1), M::zero(s100, A0A1)},
                                  {M::zero(s001, A1A0), tens(m1, one(A0)), tens(m2, one(A0))}});
        MorExpr unit_r = M::matrix({{M::zero(A1, A0A1)}, {tens(one(A1), u0)}});
        MorExpr unit_l = M::matrix({{tens(u0, one(A1))}, {M::zero(A1, A1A0)}});
        MorExpr swap = M::matrix({{M::zero(A0A1, A0A1), M::sigma(A1, A0)}, {M::sigma(A0, A1), M::zero(A1A0, A1A0)}});

        ArrowObj unit_obj = box_unit();
        ArrowMor mult_map = ArrowMor::unchecked(m0, act, boxtimes_obj(obj, obj), obj);
        ArrowMor unit_map = ArrowMor::unchecked(u0, M::zero(SpaceExpr::zero(), A1), unit_obj, obj);
        return {
            {"arrow_monoid.assoc0", check_equal(compose(m0, tens(one(A0), m0)), compose(m0, tens(m0, one(A0))), cx.opts)},
            {"arrow_monoid.assoc1", check_equal(compose(act, top), compose(act, left), cx.opts)},
            {"arrow_monoid.unit0", both(check_equal(compose(m0, tens(one(A0), u0)), one(A0), cx.opts),
                                        check_equal(compose(m0, tens(u0, one(A0))), one(A0), cx.opts), "right", "left")},
            {"arrow_monoid.unit1", both(check_equal(compose(act, unit_r), one(A1), cx.opts),
                                        check_equal(compose(act, unit_l), one(A1), cx.opts), "right", "left")},
            {"arrow_monoid.comm0", check_equal(compose(m0, M::sigma(A0, A0)), m0, cx.opts)},
            {"arrow_monoid.comm1", check_equal(compose(act, swap), act, cx.opts)},
            {"arrow_monoid.maps", both(mult_map.square(cx.opts), unit_map.square(cx.opts), "multiplication", "unit")},
            {"arrow_monoid.m2_redundant", check_equal(m2, compose(m1, M::sigma(A1, A0)), cx.opts)},
        };
    }
};

/// (D, (m^ν, [α, α ∘ σ]), (u^ν, 0))
inline ArrowMonoid derivation_to_monoid(const Derivation& d, const LawContext& cx) {
    const auto& A = d.algebra().carrier();
    const auto& M = d.module().carrier();
    const MorExpr& a = d.module().alpha();
    MorExpr m2 = compose(a, MorExpr::sigma(M, A));
    if (cx.mutation == Mutation::m2_twist) m2 = MorExpr::scale(Rational(2), m2);
    ArrowMonoid mon{ArrowObj(d.D()), d.algebra().mult(), a, m2, d.algebra().unit()};
    detail::validate(cx, mon.laws(cx));
    return mon;
}

/// Derivation D = φ over (A0, fold(m0, u0)) into (A1, m1).
/// The redundancy m2 = m1 ∘ σ is checked first, so a bad m2 is reported under its own name.
inline Derivation monoid_to_derivation(const ArrowMonoid& mon, const LawContext& cx) {
    std::vector<LawResult> laws = mon.laws(cx);
    std::stable_partition(laws.begin(), laws.end(), [](const LawResult& r) { return r.name == "arrow_monoid.m2_redundant"; });
    detail::validate(cx, laws);
    SAlgebra alg = SAlgebra::make(mon.obj.a0(), MorExpr::fold(mon.m0, mon.u0), cx);
    AModule mod = AModule::make(alg, mon.obj.a1(), mon.m1, cx);
    return Derivation::make(alg, mod, mon.obj.phi(), cx);
}

}  // namespace dcat
