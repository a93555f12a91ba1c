#include "oracle.hpp"

#include "dcat/builtins.hpp"
#include "dcat/serialize.hpp"

#include <doctest.h>

#include <random>

using namespace dcat;
using io::json;

namespace {
SpaceExpr random_space(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 5 : 2);
    std::uniform_int_distribution<std::size_t> rank(1, 3);
    switch (pick(rng)) {
    case 0: return SpaceExpr::unit();
    case 1: return SpaceExpr::base("V", rank(rng));
    case 2: return SpaceExpr::base("W", rank(rng));
    case 3: return SpaceExpr::sym(random_space(rng, depth - 1));
    case 4: return SpaceExpr::tensor(random_space(rng, depth - 1), random_space(rng, depth - 1));
    default: return SpaceExpr::sum(random_space(rng, depth - 1), random_space(rng, depth - 1));
    }
}

Element random_element(const SpaceExpr& s, std::mt19937_64& rng) {
    const auto basis = enumerate_basis(s, 2);
    Element e(s);
    if (basis.empty()) return e;
    std::uniform_int_distribution<std::size_t> which(0, basis.size() - 1);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    for (int t = 0; t < 4; ++t) e.add_term(basis[which(rng)], Rational(num(rng), den(rng)));
    return e;
}

std::vector<MorExpr> morphism_catalogue() {
    const LawContext cx;
    const SpaceExpr V = SpaceExpr::base("V", 2), W = SpaceExpr::base("W", 1);
    std::vector<MorExpr> out{
        one(V),
        MorExpr::zero(V, W),
        MorExpr::scale(Rational(-3, 4), one(V)),
        MorExpr::sigma(V, W),
        MorExpr::chi(V, W),
        MorExpr::chi_inv(V, W),
        MorExpr::chi0(),
        MorExpr::chi0_inv(),
        MorExpr::inj(1, {V, W}),
        MorExpr::proj(0, {V, W}),
        MorExpr::eta(V),
        MorExpr::mu(V),
        MorExpr::mult(V),
        MorExpr::unit(V),
        MorExpr::deriv(V),
        MorExpr::symf(linear_map_from_matrix(V, W, {{1, 2}})),
        MorExpr::sum(one(V), one(W)),
        MorExpr::add(one(V), MorExpr::scale(Rational(2), one(V))),
        tens(one(V), MorExpr::eta(W)),
        compose(MorExpr::mult(V), tens(MorExpr::eta(V), MorExpr::eta(V))),
        MorExpr::matrix({{one(V), MorExpr::zero(W, V)}}),
        MorExpr::distribute(std::vector<std::vector<SpaceExpr>>{{V, W}, {W, V}}),
        MorExpr::undistribute(std::vector<std::vector<SpaceExpr>>{{V, W}, {W}}),
        builtin::dual_numbers(cx).nu(),
    };
    for (const auto& na : builtin::arrows()) out.push_back(na.obj.phi());
    return out;
}
}  // namespace

TEST_CASE("rationals encode as strings and decode from strings or integers") {
    CHECK(io::to_json(Rational(-3, 6)) == json("-1/2"));
    CHECK(io::rational_from_json(json("7/14")) == Rational(1, 2));
    CHECK(io::rational_from_json(json(5)) == Rational(5));
    CHECK_THROWS_AS(io::rational_from_json(json("1/0")), rejected_input);
    CHECK_THROWS_AS(io::rational_from_json(json("one")), rejected_input);
    CHECK_THROWS_AS(io::rational_from_json(json(0.5)), rejected_input);
}

TEST_CASE("property: spaces, basis vectors and elements round-trip") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        const SpaceExpr s = random_space(rng, 3);
        CAPTURE(s.str());
        CHECK(io::space_from_json(io::to_json(s)) == s);
        // Through text too.
        CHECK(io::space_from_json(json::parse(io::to_json(s).dump())) == s);
        for (const auto& b : enumerate_basis(s, 2)) CHECK(io::basis_from_json(io::to_json(b)) == b);
        const Element e = random_element(s, rng);
        CHECK(io::element_from_json(json::parse(io::to_json(e).dump())) == e);
    }
}

TEST_CASE("spaces may be referenced by name") {
    const io::SpaceNames names{{"P", SpaceExpr::base("P", 2)}};
    const json doc = json::parse(R"({"kind":"tensor","parts":["P",{"kind":"sym","inner":"P"}]})");
    CHECK(io::space_from_json(doc, names) == SpaceExpr::tensor(SpaceExpr::base("P", 2), S(SpaceExpr::base("P", 2))));
    CHECK_THROWS_AS(io::space_from_json(json("Q"), names), rejected_input);
}

TEST_CASE("morphisms round-trip structurally and semantically") {
    for (const auto& m : morphism_catalogue()) {
        CAPTURE(m.signature());
        const json j = io::to_json(m);
        const MorExpr back = io::morphism_from_json(json::parse(j.dump()));
        CHECK(io::to_json(back) == j);
        CHECK(back.dom() == m.dom());
        CHECK(back.cod() == m.cod());
        CHECK(check_equal(back, m, 2).equal);
    }
}

TEST_CASE("linear maps may be given as a rational matrix") {
    const json doc = json::parse(R"({"kind":"linear","dom":{"kind":"base","name":"V","rank":2},
        "cod":{"kind":"base","name":"V","rank":2},"matrix":[["0","1/2"],[1,0]]})");
    const MorExpr m = io::morphism_from_json(doc);
    const SpaceExpr V = SpaceExpr::base("V", 2);
    CHECK(check_equal(m, linear_map_from_matrix(V, V, {{0, Rational(1, 2)}, {1, 0}}), 0).equal);
}

TEST_CASE("verdicts carry witness details only on failure") {
    const SpaceExpr V = SpaceExpr::base("V", 1);
    const json ok = io::to_json(check_equal(one(V), one(V), 1));
    CHECK(ok["equal"] == true);
    CHECK_FALSE(ok.contains("witness"));
    CHECK(ok["tested_count"] == 1);

    const Verdict v = check_equal(one(V), MorExpr::scale(Rational(2), one(V)), 1);
    const json bad = io::to_json(v);
    CHECK(bad["equal"] == false);
    CHECK(io::basis_from_json(bad["witness"]) == *v.witness);
    CHECK(io::element_from_json(bad["lhs"]) == v.lhs_value);
    CHECK(io::element_from_json(bad["rhs"]) == v.rhs_value);
    CHECK(bad["lhs_text"] == v.lhs_value.str());
}

TEST_CASE("malformed documents are rejected") {
    const char* bad_spaces[] = {
        R"({"kind":"base","name":"V"})",         R"({"kind":"base","name":"V","rank":-1})",
        R"({"kind":"sym"})",                     R"({"kind":"tensor","parts":7})",
        R"({"kind":"klein"})",                   R"([1,2])",
        R"({"kind":"base","name":3,"rank":1})",
    };
    for (const char* s : bad_spaces) {
        CAPTURE(s);
        CHECK_THROWS_AS(io::space_from_json(json::parse(s)), rejected_input);
    }
    const char* bad_morphisms[] = {
        R"({"kind":"compose","args":[{"kind":"id","space":{"kind":"unit"}}]})",
        R"({"kind":"compose","args":[{"kind":"id","space":{"kind":"base","name":"V","rank":1}},
                                     {"kind":"id","space":{"kind":"base","name":"V","rank":2}}]})",
        R"({"kind":"linear","dom":{"kind":"unit"},"cod":{"kind":"unit"},"matrix":[[1,2]]})",
        R"({"kind":"sigma","spaces":[{"kind":"unit"}]})",
        R"({"kind":"teleport"})",
        R"({"args":[]})",
    };
    for (const char* s : bad_morphisms) {
        CAPTURE(s);
        CHECK_THROWS_AS(io::morphism_from_json(json::parse(s)), rejected_input);
    }
    CHECK_THROWS_AS(io::element_from_json(json::parse(R"({"space":{"kind":"unit"},"terms":[{"basis":{"tag":"gen","index":1},"coeff":"1"}]})")),
                    rejected_input);
}
