#include "oracle.hpp"

#include "dcat/check.hpp"
#include "dcat/morphism.hpp"

#include <doctest.h>

#include <random>

using namespace dcat;

namespace {
const SpaceExpr V1 = SpaceExpr::base("V", 1);
const SpaceExpr V2 = SpaceExpr::base("V", 2);
const SpaceExpr W3 = SpaceExpr::base("W", 3);

Element gen(const SpaceExpr& s, std::size_t k) { return Element::basis(s, BasisVector::gen(k)); }

/// Column j of the matrix of a Sym-free linear map.
oracle::Matrix matrix_of(const MorExpr& f) {
    auto db = enumerate_basis(f.dom(), 0);
    auto cb = enumerate_basis(f.cod(), 0);
    oracle::Matrix m(cb.size(), std::vector<Rational>(db.size()));
    for (std::size_t j = 0; j < db.size(); ++j) {
        Element col = apply_basis(f, db[j]);
        for (std::size_t i = 0; i < cb.size(); ++i) m[i][j] = col.coeff(cb[i]);
    }
    return m;
}
}  // namespace

TEST_CASE("structural maps on generators") {
    CHECK(apply(MorExpr::id(V2), gen(V2, 1)) == gen(V2, 1));

    const SpaceExpr A = SpaceExpr::base("A", 1), B = SpaceExpr::base("B", 1);
    const Element ab = elem_tensor(gen(A, 1), gen(B, 1));
    CHECK(apply(MorExpr::sigma(A, B), ab) == elem_tensor(gen(B, 1), gen(A, 1)));

    const MorExpr inj = MorExpr::matrix({{MorExpr::id(V1)}, {MorExpr::zero(V1, V1)}});
    CHECK(apply(inj, gen(V1, 1)) == Element::basis(SpaceExpr::sum(V1, V1), BasisVector::sum(1, BasisVector::gen(1))));
    CHECK(check_equal(inj, MorExpr::inj(0, {V1, V1}), 0).equal);
}

TEST_CASE("matrices of rationals") {
    CHECK(check_equal(linear_map_from_matrix(V2, V2, {{1, 0}, {0, 1}}), MorExpr::id(V2), 0).equal);

    const MorExpr p = MorExpr::matrix({{MorExpr::id(V1), MorExpr::zero(V1, V1)}});
    CHECK(check_equal(p, MorExpr::proj(0, {V1, V1}), 0).equal);

    const MorExpr swap = linear_map_from_matrix(V2, V2, {{0, 1}, {1, 0}});
    CHECK(apply(swap, gen(V2, 1)) == gen(V2, 2));
    CHECK(apply(swap, gen(V2, 2)) == gen(V2, 1));

    CHECK_THROWS_AS(linear_map_from_matrix(V2, V2, {{1, 0}}), rejected_input);
}

TEST_CASE("type errors are rejected") {
    CHECK_THROWS_AS(compose(MorExpr::id(V1), MorExpr::id(V2)), rejected_input);
    CHECK_THROWS_AS(MorExpr::id(V1) + MorExpr::id(V2), rejected_input);
    CHECK_THROWS_AS(check_equal(MorExpr::id(V1), MorExpr::id(V2), 1), rejected_input);
    CHECK_THROWS_AS(apply(MorExpr::id(V1), gen(V2, 1)), rejected_input);
    CHECK_THROWS_AS(MorExpr::matrix({{MorExpr::id(V1)}, {MorExpr::id(V2)}}), rejected_input);
}

TEST_CASE("property: composition and tensor agree with matrix algebra") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        const auto a = oracle::random_matrix(3, 2, rng);
        const auto b = oracle::random_matrix(2, 3, rng);
        const MorExpr f = linear_map_from_matrix(V2, W3, a);
        const MorExpr g = linear_map_from_matrix(W3, V2, b);
        CHECK(matrix_of(compose(g, f)) == oracle::matmul(b, a));
        CHECK(matrix_of(f + f) == oracle::matmul({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}, a));

        // (f ⊗ g)(x ⊗ y) = f(x) ⊗ g(y) on every basis pair.
        const MorExpr fg = MorExpr::tensor(f, g);
        for (const auto& x : enumerate_basis(V2, 0))
            for (const auto& y : enumerate_basis(W3, 0))
                CHECK(apply(fg, elem_tensor(Element::basis(V2, x), Element::basis(W3, y))) ==
                      elem_tensor(apply_basis(f, x), apply_basis(g, y)));

        // Interchange: (g1 ∘ f1) ⊗ (g2 ∘ f2) = (g1 ⊗ g2) ∘ (f1 ⊗ f2).
        CHECK(check_equal(MorExpr::tensor(compose(g, f), compose(f, g)),
                          compose(MorExpr::tensor(g, f), MorExpr::tensor(f, g)), 0)
                  .equal);
    }
}

TEST_CASE("property: biproduct identities") {
    const std::vector<SpaceExpr> parts{V1, V2, W3};
    const SpaceExpr s = SpaceExpr::sum(parts);
    MorExpr total = MorExpr::zero(s, s);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = 0; j < parts.size(); ++j) {
            const MorExpr pi = compose(MorExpr::proj(i, parts), MorExpr::inj(j, parts));
            CHECK(check_equal(pi, i == j ? MorExpr::id(parts[i]) : MorExpr::zero(parts[j], parts[i]), 0).equal);
        }
        total = total + compose(MorExpr::inj(i, parts), MorExpr::proj(i, parts));
    }
    CHECK(check_equal(total, MorExpr::id(s), 0).equal);
}

TEST_CASE("distribution maps are mutually inverse") {
    const SpaceExpr t = SpaceExpr::tensor(SpaceExpr::sum(V1, V2), SpaceExpr::sum(W3, V1));
    const MorExpr d = MorExpr::distribute(t);
    CHECK(d.cod().parts().size() == 4);
    CHECK(check_equal(compose(MorExpr::undistribute(t), d), MorExpr::id(t), 0).equal);
    CHECK(check_equal(compose(d, MorExpr::undistribute(t)), MorExpr::id(d.cod()), 0).equal);

    // Grouped form keeps a nested sum as one summand.
    const SpaceExpr A = SpaceExpr::sum(V1, V2);
    const MorExpr g = MorExpr::distribute(std::vector<std::vector<SpaceExpr>>{{A, A}, {W3, W3}});
    CHECK(g.cod().parts().size() == 4);
    CHECK(check_equal(compose(MorExpr::undistribute(std::vector<std::vector<SpaceExpr>>{{A, A}, {W3, W3}}), g),
                      MorExpr::id(g.dom()), 0)
              .equal);
}

TEST_CASE("check_equal reports the first witness and both values") {
    const MorExpr f = linear_map_from_matrix(V2, V2, {{1, 0}, {0, 1}});
    const MorExpr g = linear_map_from_matrix(V2, V2, {{1, 0}, {0, 2}});
    const Verdict v = check_equal(f, g, 0);
    REQUIRE_FALSE(v.equal);
    CHECK(*v.witness == BasisVector::gen(2));
    CHECK(v.lhs_value == gen(V2, 2));
    CHECK(v.rhs_value == Rational(2) * gen(V2, 2));
    CHECK(v.tested_count == 2);
}
