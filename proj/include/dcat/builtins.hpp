#pragma once

/** @file builtins.hpp
 *  Shipped sample instances: algebras, derivations, derivation morphisms,
 *  sample arrows and Kleisli maps.
 */

#include "dcat/derivations.hpp"
#include "dcat/tangent.hpp"

#include <string>
#include <vector>

namespace dcat::builtin {

inline SpaceExpr x_space() { return SpaceExpr::base("x", 1); }

using Table = std::vector<std::vector<std::vector<Rational>>>;
inline std::vector<Rational> row(std::initializer_list<long long> xs) {
    std::vector<Rational> r;
    for (long long x : xs) r.emplace_back(x);
    return r;
}

/// ℚ itself: e·e = e.
inline SAlgebra rationals(const LawContext& cx) {
    return SAlgebra::from_table(SpaceExpr::base("Q", 1), Table{{row({1})}}, row({1}), cx);
}

/// ℚ[ε]/(ε²) on basis (1, ε).
inline SAlgebra dual_numbers(const LawContext& cx) {
    return SAlgebra::from_table(SpaceExpr::base("D", 2),
                                Table{{row({1, 0}), row({0, 1})}, {row({0, 1}), row({0, 0})}}, row({1, 0}), cx);
}

/// ℚ ⊕ ℚ² with all products of the last two basis vectors zero.
inline SAlgebra square_zero(const LawContext& cx) {
    const auto z = row({0, 0, 0});
    return SAlgebra::from_table(SpaceExpr::base("Z", 3),
                                Table{{row({1, 0, 0}), row({0, 1, 0}), row({0, 0, 1})},
                                      {row({0, 1, 0}), z, z},
                                      {row({0, 0, 1}), z, z}},
                                row({1, 0, 0}), cx);
}

/// ℚ[x] as the free algebra (S(x), μ).
inline SAlgebra polynomials() { return SAlgebra::free(x_space()); }

/// The algebra viewed as a module over itself.
inline AModule regular_module(const SAlgebra& a, const LawContext& cx) {
    return AModule::make(a, a.carrier(), a.mult(), cx);
}

/// x ↦ 1 on the generator of ℚ[x].
inline MorExpr generator_to_one() {
    return MorExpr::linear(x_space(), SpaceExpr::unit(),
                           {{BasisVector::gen(1), Element::basis(SpaceExpr::unit(), BasisVector::unit())}});
}

/// d/dx on ℚ[x]: (1 ⊗ ℓ) ∘ d.
inline Derivation formal_derivative(const LawContext& cx) {
    SAlgebra a = polynomials();
    AModule m = regular_module(a, cx);
    return Derivation::make(a, m, compose(tens(one(S(x_space())), generator_to_one()), MorExpr::deriv(x_space())), cx,
                            true);
}

/// d_V: (S(V), μ) → (S(V) ⊗ V, m ⊗ 1).
inline Derivation deriving_map(const SpaceExpr& v, const LawContext& cx) {
    SAlgebra a = SAlgebra::free(v);
    AModule m = AModule::make(a, SpaceExpr::tensor(S(v), v), tens(MorExpr::mult(v), one(v)), cx);
    return Derivation::make(a, m, MorExpr::deriv(v), cx, true);
}

/// p ↦ p'(0), into I with the evaluation-at-zero action.
inline Derivation derivative_at_zero(const LawContext& cx) {
    SAlgebra a = polynomials();
    AModule m = AModule::make(a, SpaceExpr::unit(), augmentation(x_space()), cx);
    return Derivation::make(a, m, compose(tens(augmentation(x_space()), generator_to_one()), MorExpr::deriv(x_space())),
                            cx, true);
}

/// a + bε ↦ bε on the dual numbers.
inline Derivation dual_epsilon(const LawContext& cx) {
    SAlgebra a = dual_numbers(cx);
    AModule m = regular_module(a, cx);
    MorExpr D = linear_map_from_matrix(a.carrier(), a.carrier(), {row({0, 0}), row({0, 1})});
    return Derivation::make(a, m, D, cx, true);
}

inline Derivation zero_on_rationals(const LawContext& cx) {
    SAlgebra a = rationals(cx);
    AModule m = regular_module(a, cx);
    return Derivation::make(a, m, MorExpr::zero(a.carrier(), a.carrier()), cx, true);
}

/// Swaps the two nilpotent basis vectors of the square-zero algebra.
inline Derivation square_zero_swap(const LawContext& cx) {
    SAlgebra a = square_zero(cx);
    AModule m = regular_module(a, cx);
    MorExpr D = linear_map_from_matrix(a.carrier(), a.carrier(), {row({0, 0, 0}), row({0, 0, 1}), row({0, 1, 0})});
    return Derivation::make(a, m, D, cx, true);
}

struct NamedDerivation {
    std::string name;
    Derivation d;
};

inline std::vector<NamedDerivation> derivations(const LawContext& cx) {
    return {
        {"formal-derivative", formal_derivative(cx)},
        {"deriving-map", deriving_map(x_space(), cx)},
        {"derivative-at-zero", derivative_at_zero(cx)},
        {"dual-epsilon", dual_epsilon(cx)},
        {"zero-on-Q", zero_on_rationals(cx)},
        {"square-zero-swap", square_zero_swap(cx)},
    };
}

struct NamedAlgebra {
    std::string name;
    SAlgebra a;
};

inline std::vector<NamedAlgebra> algebras(const LawContext& cx) {
    return {{"Q", rationals(cx)}, {"dual", dual_numbers(cx)}, {"square-zero", square_zero(cx)}};
}

/// A candidate derivation morphism (f, g): source → target; `expected` says whether the squares commute.
struct DerivationMorphism {
    std::string name;
    Derivation source, target;
    MorExpr f, g;
    bool expected;
};

inline std::vector<DerivationMorphism> derivation_morphisms(const LawContext& cx) {
    const SpaceExpr X = x_space();
    const SpaceExpr SX = S(X);
    const Derivation fd = formal_derivative(cx);
    const Derivation at0 = derivative_at_zero(cx);
    const Derivation eps = dual_epsilon(cx);
    const SpaceExpr Dn = eps.algebra().carrier();
    const MorExpr doubling = MorExpr::symf(MorExpr::scale(Rational(2), one(X)));
    const MorExpr x_to_eps = MorExpr::linear(X, Dn, {{BasisVector::gen(1), Element::basis(Dn, BasisVector::gen(2))}});
    const MorExpr one_to_eps =
        MorExpr::linear(SpaceExpr::unit(), Dn, {{BasisVector::unit(), Element::basis(Dn, BasisVector::gen(2))}});
    return {
        {"identity", fd, fd, one(SX), one(SX), true},
        {"rescale", fd, fd, doubling, MorExpr::scale(Rational(2), doubling), true},
        {"evaluate-at-zero", fd, at0, one(SX), augmentation(X), true},
        {"x-to-epsilon", fd, eps, compose(eps.algebra().nu(), MorExpr::symf(x_to_eps)),
         compose(one_to_eps, augmentation(X)), true},
        {"double-module-only", fd, fd, one(SX), MorExpr::scale(Rational(2), one(SX)), false},
    };
}

// --- arrows -------------------------------------------------------------------

struct NamedArrow {
    std::string name;
    ArrowObj obj;
};

inline std::vector<NamedArrow> arrows() {
    const auto V1 = SpaceExpr::base("V", 1), V2 = SpaceExpr::base("V", 2), W3 = SpaceExpr::base("W", 3);
    return {
        {"identity", ArrowObj(one(V1))},
        {"zero", ArrowObj(MorExpr::zero(SpaceExpr::unit(), SpaceExpr::zero()))},
        {"swap", ArrowObj(linear_map_from_matrix(V2, V2, {row({0, 1}), row({1, 0})}))},
        {"rank-changing", ArrowObj(linear_map_from_matrix(V2, W3, {row({1, 0}), row({2, -1}), row({0, 3})}))},
    };
}

// --- Kleisli maps -------------------------------------------------------------

struct NamedKleisli {
    std::string name;
    KleisliMap f;
};

/// x ↦ xᵏ on the rank-1 base space.
inline KleisliMap power_map(std::size_t k) {
    const SpaceExpr X = x_space();
    return KleisliMap(X, X, {{BasisVector::gen(1), polynomial(X, {{Rational(1), {k}}})}});
}

inline std::vector<NamedKleisli> kleisli_maps() {
    const SpaceExpr X = x_space();
    const SpaceExpr XY = SpaceExpr::base("xy", 2);
    return {
        {"x^2", power_map(2)},
        {"x^3", power_map(3)},
        {"xy", KleisliMap(X, XY, {{BasisVector::gen(1), polynomial(XY, {{Rational(1), {1, 1}}})}})},
    };
}

}  // namespace dcat::builtin
