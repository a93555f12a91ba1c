#pragma once

/** @file serialize.hpp
 *  JSON encodings of spaces, basis vectors, elements, morphisms and verdicts.
 *
 *  Every sum type is a tagged object: spaces and morphisms carry "kind",
 *  basis vectors carry "tag".  Rationals are strings "p/q" or "p".  Decoders
 *  throw rejected_input on malformed documents.
 */

#include "dcat/check.hpp"
#include "dcat/morphism.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace dcat::io {

using nlohmann::json;

/// Named spaces a document may refer to by string.
using SpaceNames = std::map<std::string, SpaceExpr>;

namespace detail {
[[noreturn]] inline void bad(const std::string& what) { throw rejected_input("schema: " + what); }

inline const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

inline std::size_t natural(const json& j, const char* what) {
    if (!j.is_number_unsigned()) bad(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

inline std::string text(const json& j, const char* what) {
    if (!j.is_string()) bad(std::string(what) + " must be a string");
    return j.get<std::string>();
}
}  // namespace detail

// --- rationals --------------------------------------------------------------------

inline json to_json(const Rational& q) { return q.str(); }

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) detail::bad("rational must be a string \"p/q\" or an integer");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument&) {
        detail::bad("malformed rational \"" + j.get<std::string>() + "\"");
    }
}

inline std::vector<std::vector<Rational>> rational_matrix_from_json(const json& j) {
    if (!j.is_array()) detail::bad("matrix must be an array of rows");
    std::vector<std::vector<Rational>> out;
    for (const auto& r : j) {
        if (!r.is_array()) detail::bad("matrix row must be an array");
        auto& row = out.emplace_back();
        for (const auto& x : r) row.push_back(rational_from_json(x));
    }
    return out;
}

inline std::vector<Rational> rational_vector_from_json(const json& j) {
    if (!j.is_array()) detail::bad("vector must be an array");
    std::vector<Rational> out;
    for (const auto& x : j) out.push_back(rational_from_json(x));
    return out;
}

// --- spaces ----------------------------------------------------------------------

inline json to_json(const SpaceExpr& s) {
    switch (s.kind()) {
    case SpaceKind::unit: return {{"kind", "unit"}};
    case SpaceKind::zero: return {{"kind", "zero"}};
    case SpaceKind::base: return {{"kind", "base"}, {"name", s.name()}, {"rank", s.rank()}};
    case SpaceKind::sym: return {{"kind", "sym"}, {"inner", to_json(s.inner())}};
    case SpaceKind::tensor:
    case SpaceKind::sum: {
        json parts = json::array();
        for (const auto& p : s.parts()) parts.push_back(to_json(p));
        return {{"kind", s.kind() == SpaceKind::tensor ? "tensor" : "sum"}, {"parts", parts}};
    }
    }
    return {};
}

/// A space document, or a string naming an entry of `names`.
inline SpaceExpr space_from_json(const json& j, const SpaceNames& names = {}) {
    if (j.is_string()) {
        auto it = names.find(j.get<std::string>());
        if (it == names.end()) detail::bad("unknown space \"" + j.get<std::string>() + "\"");
        return it->second;
    }
    const std::string kind = detail::text(detail::field(j, "kind"), "space kind");
    if (kind == "unit") return SpaceExpr::unit();
    if (kind == "zero") return SpaceExpr::zero();
    if (kind == "base")
        return SpaceExpr::base(detail::text(detail::field(j, "name"), "space name"),
                               detail::natural(detail::field(j, "rank"), "rank"));
    if (kind == "sym") return SpaceExpr::sym(space_from_json(detail::field(j, "inner"), names));
    if (kind == "tensor" || kind == "sum") {
        const json& ps = detail::field(j, "parts");
        if (!ps.is_array()) detail::bad("parts must be an array");
        std::vector<SpaceExpr> parts;
        for (const auto& p : ps) parts.push_back(space_from_json(p, names));
        return kind == "tensor" ? SpaceExpr::tensor(parts) : SpaceExpr::sum(parts);
    }
    detail::bad("unknown space kind \"" + kind + "\"");
}

// --- basis vectors and elements ----------------------------------------------------

inline json to_json(const BasisVector& b) {
    auto list = [](const std::vector<BasisVector>& ks) {
        json a = json::array();
        for (const auto& k : ks) a.push_back(to_json(k));
        return a;
    };
    switch (b.tag()) {
    case BasisTag::unit: return {{"tag", "unit"}};
    case BasisTag::gen: return {{"tag", "gen"}, {"index", b.index()}};
    case BasisTag::tensor: return {{"tag", "tensor"}, {"parts", list(b.kids())}};
    case BasisTag::sum: return {{"tag", "sum"}, {"branch", b.index()}, {"inner", to_json(b.summand())}};
    case BasisTag::mon: return {{"tag", "mon"}, {"factors", list(b.kids())}};
    }
    return {};
}

inline BasisVector basis_from_json(const json& j) {
    const std::string tag = detail::text(detail::field(j, "tag"), "basis tag");
    auto list = [](const json& a) {
        if (!a.is_array()) detail::bad("basis children must be an array");
        std::vector<BasisVector> ks;
        for (const auto& k : a) ks.push_back(basis_from_json(k));
        return ks;
    };
    if (tag == "unit") return BasisVector::unit();
    if (tag == "gen") return BasisVector::gen(detail::natural(detail::field(j, "index"), "index"));
    if (tag == "tensor") return BasisVector::tensor(list(detail::field(j, "parts")));
    if (tag == "sum")
        return BasisVector::sum(detail::natural(detail::field(j, "branch"), "branch"),
                                basis_from_json(detail::field(j, "inner")));
    if (tag == "mon") return BasisVector::mon(list(detail::field(j, "factors")));
    detail::bad("unknown basis tag \"" + tag + "\"");
}

inline json to_json(const Element& e) {
    json terms = json::array();
    for (const auto& [b, c] : e.terms()) terms.push_back({{"basis", to_json(b)}, {"coeff", to_json(c)}});
    return {{"space", to_json(e.space())}, {"terms", terms}};
}

inline Element element_from_json(const json& j, const SpaceNames& names = {}) {
    Element e(space_from_json(detail::field(j, "space"), names));
    const json& ts = detail::field(j, "terms");
    if (!ts.is_array()) detail::bad("terms must be an array");
    for (const auto& t : ts) {
        BasisVector b = basis_from_json(detail::field(t, "basis"));
        if (!is_basis_of(e.space(), b)) detail::bad(b.str() + " is not a basis vector of " + e.space().str());
        e.add_term(b, rational_from_json(detail::field(t, "coeff")));
    }
    return e;
}

// --- morphisms --------------------------------------------------------------------

inline const std::vector<std::pair<MorKind, std::string>>& kind_names() {
    static const std::vector<std::pair<MorKind, std::string>> names{
        {MorKind::id, "id"},           {MorKind::compose, "compose"},     {MorKind::tensor, "tensor"},
        {MorKind::sum, "sum"},         {MorKind::add, "add"},             {MorKind::zero, "zero"},
        {MorKind::scale, "scale"},     {MorKind::sigma, "sigma"},         {MorKind::inj, "inj"},
        {MorKind::proj, "proj"},       {MorKind::matrix, "matrix"},       {MorKind::linear, "linear"},
        {MorKind::symf, "symf"},       {MorKind::eta, "eta"},             {MorKind::mu, "mu"},
        {MorKind::mult, "mult"},       {MorKind::unit, "unit"},           {MorKind::deriv, "deriv"},
        {MorKind::chi, "chi"},         {MorKind::chi_inv, "chi_inv"},     {MorKind::chi0, "chi0"},
        {MorKind::chi0_inv, "chi0_inv"}, {MorKind::fold, "fold"},         {MorKind::distribute, "distribute"},
        {MorKind::undistribute, "undistribute"}, {MorKind::chi_inv_split, "chi_inv_split"},
    };
    return names;
}

inline std::string kind_name(MorKind k) {
    for (const auto& [kk, n] : kind_names())
        if (kk == k) return n;
    return "?";
}

inline json to_json(const MorExpr& m) {
    const auto& n = m.node();
    json j{{"kind", kind_name(n.kind)}};
    auto args = [&] {
        json a = json::array();
        for (const auto& x : n.args) a.push_back(to_json(x));
        return a;
    };
    auto spaces = [&](const std::vector<SpaceExpr>& ss) {
        json a = json::array();
        for (const auto& s : ss) a.push_back(to_json(s));
        return a;
    };
    switch (n.kind) {
    case MorKind::id: j["space"] = to_json(n.dom); break;
    case MorKind::compose:
    case MorKind::tensor:
    case MorKind::sum:
    case MorKind::add:
    case MorKind::fold:
    case MorKind::symf: j["args"] = args(); break;
    case MorKind::zero: j["dom"] = to_json(n.dom); j["cod"] = to_json(n.cod); break;
    case MorKind::scale: j["scalar"] = to_json(n.scalar); j["args"] = args(); break;
    case MorKind::sigma:
    case MorKind::chi:
    case MorKind::chi_inv:
    case MorKind::chi_inv_split: j["spaces"] = spaces(n.spaces); break;
    case MorKind::inj:
    case MorKind::proj: j["index"] = n.index; j["parts"] = spaces(n.spaces); break;
    case MorKind::matrix: {
        json rows = json::array();
        for (std::size_t r = 0; r < n.rows; ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < n.cols; ++c) row.push_back(to_json(n.args[r * n.cols + c]));
            rows.push_back(row);
        }
        j["rows"] = rows;
        break;
    }
    case MorKind::linear: {
        j["dom"] = to_json(n.dom);
        j["cod"] = to_json(n.cod);
        json imgs = json::array();
        for (const auto& [b, e] : *n.images) imgs.push_back({{"basis", to_json(b)}, {"image", to_json(e)}});
        j["images"] = imgs;
        break;
    }
    case MorKind::eta:
    case MorKind::mu:
    case MorKind::mult:
    case MorKind::unit:
    case MorKind::deriv: j["space"] = to_json(n.spaces[0]); break;
    case MorKind::chi0:
    case MorKind::chi0_inv: break;
    case MorKind::distribute:
    case MorKind::undistribute: {
        json gs = json::array();
        for (std::size_t i = 1; i < n.groups.size(); ++i) gs.push_back(spaces(n.groups[i]));
        j["groups"] = gs;
        break;
    }
    }
    return j;
}

/// Decodes a morphism.  "linear" also accepts "matrix": rows of rationals, column j the image of basis vector j.
inline MorExpr morphism_from_json(const json& j, const SpaceNames& names = {}) {
    using detail::field;
    const std::string kind = detail::text(field(j, "kind"), "morphism kind");
    auto sp = [&](const char* key) { return space_from_json(field(j, key), names); };
    auto args = [&](std::size_t count) {
        const json& a = field(j, "args");
        if (!a.is_array() || a.size() != count)
            detail::bad(kind + " expects " + std::to_string(count) + " args");
        std::vector<MorExpr> out;
        for (const auto& x : a) out.push_back(morphism_from_json(x, names));
        return out;
    };
    auto space_list = [&](const json& a) {
        if (!a.is_array()) detail::bad("space list must be an array");
        std::vector<SpaceExpr> out;
        for (const auto& s : a) out.push_back(space_from_json(s, names));
        return out;
    };
    auto pair = [&] {
        auto ss = space_list(field(j, "spaces"));
        if (ss.size() != 2) detail::bad(kind + " expects two spaces");
        return ss;
    };
    if (kind == "id") return MorExpr::id(sp("space"));
    if (kind == "compose") { auto a = args(2); return MorExpr::compose(a[0], a[1]); }
    if (kind == "tensor") { auto a = args(2); return MorExpr::tensor(a[0], a[1]); }
    if (kind == "sum") { auto a = args(2); return MorExpr::sum(a[0], a[1]); }
    if (kind == "add") { auto a = args(2); return MorExpr::add(a[0], a[1]); }
    if (kind == "fold") { auto a = args(2); return MorExpr::fold(a[0], a[1]); }
    if (kind == "symf") return MorExpr::symf(args(1)[0]);
    if (kind == "scale") return MorExpr::scale(rational_from_json(field(j, "scalar")), args(1)[0]);
    if (kind == "zero") return MorExpr::zero(sp("dom"), sp("cod"));
    if (kind == "sigma") { auto s = pair(); return MorExpr::sigma(s[0], s[1]); }
    if (kind == "chi") { auto s = pair(); return MorExpr::chi(s[0], s[1]); }
    if (kind == "chi_inv") { auto s = pair(); return MorExpr::chi_inv(s[0], s[1]); }
    if (kind == "chi_inv_split") { auto s = pair(); return MorExpr::chi_inv_split(s[0], s[1]); }
    if (kind == "inj" || kind == "proj") {
        auto i = detail::natural(field(j, "index"), "index");
        auto parts = space_list(field(j, "parts"));
        return kind == "inj" ? MorExpr::inj(i, parts) : MorExpr::proj(i, parts);
    }
    if (kind == "matrix") {
        const json& rs = field(j, "rows");
        if (!rs.is_array()) detail::bad("matrix rows must be an array");
        std::vector<std::vector<MorExpr>> rows;
        for (const auto& r : rs) {
            if (!r.is_array()) detail::bad("matrix row must be an array");
            auto& row = rows.emplace_back();
            for (const auto& e : r) row.push_back(morphism_from_json(e, names));
        }
        return MorExpr::matrix(rows);
    }
    if (kind == "linear") {
        SpaceExpr dom = sp("dom"), cod = sp("cod");
        if (j.contains("matrix")) return linear_map_from_matrix(dom, cod, rational_matrix_from_json(j.at("matrix")));
        const json& imgs = field(j, "images");
        if (!imgs.is_array()) detail::bad("images must be an array");
        MorExpr::Images images;
        for (const auto& im : imgs)
            images.emplace(basis_from_json(field(im, "basis")), element_from_json(field(im, "image"), names));
        return MorExpr::linear(dom, cod, std::move(images));
    }
    if (kind == "eta") return MorExpr::eta(sp("space"));
    if (kind == "mu") return MorExpr::mu(sp("space"));
    if (kind == "mult") return MorExpr::mult(sp("space"));
    if (kind == "unit") return MorExpr::unit(sp("space"));
    if (kind == "deriv") return MorExpr::deriv(sp("space"));
    if (kind == "chi0") return MorExpr::chi0();
    if (kind == "chi0_inv") return MorExpr::chi0_inv();
    if (kind == "distribute" || kind == "undistribute") {
        const json& gs = field(j, "groups");
        if (!gs.is_array()) detail::bad("groups must be an array");
        std::vector<std::vector<SpaceExpr>> groups;
        for (const auto& g : gs) groups.push_back(space_list(g));
        return kind == "distribute" ? MorExpr::distribute(groups) : MorExpr::undistribute(groups);
    }
    detail::bad("unknown morphism kind \"" + kind + "\"");
}

// --- verdicts ---------------------------------------------------------------------

inline json to_json(const Verdict& v) {
    json j{{"equal", v.equal}, {"tested_count", v.tested_count}, {"weight_bound", v.weight_bound}};
    if (!v.equal) {
        j["witness"] = v.witness ? to_json(*v.witness) : json(nullptr);
        j["witness_text"] = v.witness ? v.witness->str() : "";
        j["lhs"] = to_json(v.lhs_value);
        j["rhs"] = to_json(v.rhs_value);
        j["lhs_text"] = v.lhs_value.str();
        j["rhs_text"] = v.rhs_value.str();
        j["where"] = v.where;
    }
    return j;
}

}  // namespace dcat::io
