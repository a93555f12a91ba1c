#pragma once

/** @file tangent.hpp
 *  Tangent bundles of S-algebras and S-derivations (dual numbers), and the
 *  Kleisli differential combinator D[f] = χ ∘ (1 ⊗ η) ∘ d ∘ f.
 */

#include "dcat/derivations.hpp"

#include <map>
#include <utility>
#include <vector>

namespace dcat {

struct TangentData {
    SAlgebra base;
    SAlgebra tangent;
};

/// ν♭: S(A⊕A) → A⊕A with rows ν ∘ S(p0) and m^ν ∘ (ν ⊗ 1) ∘ (S(p0) ⊗ p1) ∘ d.
inline MorExpr tangent_structure(const SAlgebra& alg) {
    const SpaceExpr& A = alg.carrier();
    const std::vector<SpaceExpr> AA{A, A};
    const MorExpr p0 = MorExpr::proj(0, AA), p1 = MorExpr::proj(1, AA);
    const SpaceExpr TA = SpaceExpr::sum(AA);
    MorExpr first = compose(alg.nu(), MorExpr::symf(p0));
    MorExpr second = chain({alg.mult(), tens(alg.nu(), one(A)), tens(MorExpr::symf(p0), p1), MorExpr::deriv(TA)});
    return MorExpr::matrix({{first}, {second}});
}

inline TangentData tangent_algebra(const SAlgebra& alg, const LawContext& cx) {
    return {alg, SAlgebra::make(SpaceExpr::sum(alg.carrier(), alg.carrier()), tangent_structure(alg), cx)};
}

/// α♭ = [[α,0,0,0],[0,α,α,0]] ∘ distribute, on summands (A₁M₁, A₁M₂, A₂M₁, A₂M₂).
inline MorExpr tangent_action(const SpaceExpr& A, const SpaceExpr& M, const MorExpr& alpha) {
    const MorExpr z = MorExpr::zero(SpaceExpr::tensor(A, M), M);
    MorExpr block = MorExpr::matrix({{alpha, z, z, z}, {z, alpha, alpha, z}});
    return compose(block, MorExpr::distribute(std::vector<std::vector<SpaceExpr>>{{A, A}, {M, M}}));
}

/// T(D) = D ⊕ D from (A⊕A, ν♭) to (M⊕M, α♭).
inline Derivation tangent_derivation(const Derivation& d, const LawContext& cx) {
    detail::validate(cx, {{"sderivation.chain", is_s_derivation(d, cx)}});
    const SpaceExpr& A = d.algebra().carrier();
    const SpaceExpr& M = d.module().carrier();
    SAlgebra talg = tangent_algebra(d.algebra(), cx).tangent;
    AModule tmod = AModule::make(talg, SpaceExpr::sum(M, M), tangent_action(A, M, d.module().alpha()), cx);
    return Derivation::make(talg, tmod, MorExpr::sum(d.D(), d.D()), cx, true);
}

// --- Kleisli maps ---------------------------------------------------------------

/// A linear map A → S(B) stored by the images of the basis of A.
class KleisliMap {
public:
    KleisliMap(SpaceExpr dom, SpaceExpr cod, MorExpr::Images images)
        : dom_(std::move(dom)), cod_(std::move(cod)), images_(std::move(images)) {
        // Validation happens in MorExpr::linear.
        (void)as_morphism();
    }

    [[nodiscard]] const SpaceExpr& dom() const { return dom_; }
    [[nodiscard]] const SpaceExpr& cod() const { return cod_; }
    [[nodiscard]] const MorExpr::Images& images() const { return images_; }
    [[nodiscard]] MorExpr as_morphism() const { return MorExpr::linear(dom_, SpaceExpr::sym(cod_), images_); }

    [[nodiscard]] Element image(const BasisVector& b) const {
        auto it = images_.find(b);
        return it == images_.end() ? Element(SpaceExpr::sym(cod_)) : it->second;
    }

private:
    SpaceExpr dom_, cod_;
    MorExpr::Images images_;
};

/// One term of a polynomial over generators of a base space: coefficient and exponent per generator.
struct PolyTerm {
    Rational coeff;
    std::vector<std::size_t> exponents;
};

/// The element Σ c·x^e of S(B) for B a base space.
inline Element polynomial(const SpaceExpr& B, const std::vector<PolyTerm>& terms) {
    if (B.kind() != SpaceKind::base) throw rejected_input("polynomials need a base space, got " + B.str());
    Element out(SpaceExpr::sym(B));
    for (const auto& t : terms) {
        if (t.exponents.size() != B.rank())
            throw rejected_input("polynomial term has " + std::to_string(t.exponents.size()) + " exponents for " + B.str());
        std::vector<BasisVector> factors;
        for (std::size_t k = 0; k < t.exponents.size(); ++k)
            factors.insert(factors.end(), t.exponents[k], BasisVector::gen(k + 1));
        out.add_term(BasisVector::mon(std::move(factors)), t.coeff);
    }
    return out;
}

/// χ_{B,B} ∘ (1 ⊗ η) ∘ d_B
inline MorExpr kleisli_diff_operator(const SpaceExpr& B) {
    return chain({MorExpr::chi(B, B), tens(one(S(B)), MorExpr::eta(B)), MorExpr::deriv(B)});
}

/// D[f]: A → S(B⊕B)
inline KleisliMap kleisli_diff(const KleisliMap& f) {
    const MorExpr op = kleisli_diff_operator(f.cod());
    MorExpr::Images out;
    for (const auto& [b, e] : f.images()) out.emplace(b, apply(op, e));
    return KleisliMap(f.dom(), SpaceExpr::sum(f.cod(), f.cod()), std::move(out));
}

}  // namespace dcat
