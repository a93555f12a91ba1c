#pragma once

/** @file harness.hpp
 *  Law registry, suite configuration, parallel execution and reports.
 *
 *  A run expands every selected law over the instances it applies to, checks
 *  each (law, instance) job on a worker pool, and sorts the records by law
 *  name then instance so the report does not depend on scheduling.
 */

#include "dcat/arrow_laws.hpp"
#include "dcat/builtins.hpp"
#include "dcat/derivations.hpp"
#include "dcat/serialize.hpp"
#include "dcat/sym.hpp"
#include "dcat/tangent.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace dcat {

inline constexpr const char* artifact_version = "0.1.0";
inline constexpr const char* config_schema_id = "dcat.suite-config/1";
inline constexpr const char* report_schema_id = "dcat.report/1";

// --- registry -----------------------------------------------------------------------

struct LawInfo {
    std::string name;
    std::string anchor;
};

// clang-format off
inline const std::vector<LawInfo>& law_registry() {
    static const std::vector<LawInfo> laws{
        {"D1", "D1 constant rule: d ∘ u = 0"},
        {"D2", "D2 Leibniz rule: d ∘ m = (m ⊗ 1) ∘ ((1 ⊗ d) + (1 ⊗ σ) ∘ (d ⊗ 1))"},
        {"D3", "D3 linear rule: d ∘ η = u ⊗ 1"},
        {"D4", "D4 chain rule: d ∘ μ = (m ⊗ 1) ∘ (μ ⊗ d) ∘ d"},
        {"D5", "D5 interchange rule: (1 ⊗ σ) ∘ (d ⊗ 1) ∘ d = (d ⊗ 1) ∘ d"},
        {"monad.unit.left", "monad left unit: μ ∘ η_S = 1"},
        {"monad.unit.right", "monad right unit: μ ∘ S(η) = 1"},
        {"monad.assoc", "monad associativity: μ ∘ S(μ) = μ ∘ μ_S"},
        {"monoid.assoc", "free algebra multiplication is associative"},
        {"monoid.unit.left", "free algebra left unit"},
        {"monoid.unit.right", "free algebra right unit"},
        {"monoid.comm", "free algebra multiplication is commutative"},
        {"mu.monoid_morphism.mult", "μ preserves multiplication"},
        {"mu.monoid_morphism.unit", "μ preserves the unit"},
        {"nat.eta", "naturality of η"},
        {"nat.mu", "naturality of μ"},
        {"nat.m", "naturality of m"},
        {"nat.u", "naturality of u"},
        {"nat.d", "naturality of d"},
        {"functor.id", "S preserves identities"},
        {"functor.comp", "S preserves composition"},
        {"seely.def", "Seely map equals m ∘ (S(ι0) ⊗ S(ι1))"},
        {"seely.iso.l", "Seely storage: χ⁻¹ ∘ χ = 1 on S(A) ⊗ S(B)"},
        {"seely.iso.r", "Seely storage: χ ∘ χ⁻¹ = 1 on S(A ⊕ B)"},
        {"seely0.def", "nullary Seely map equals the unit of S(0)"},
        {"seely0.iso", "nullary Seely map is invertible"},
        {"arrow.sbar.functor.id", "lifted functor preserves identities"},
        {"arrow.sbar.functor.comp", "lifted functor preserves composition"},
        {"arrow.sbar.square", "lifted functor sends squares to squares"},
        {"arrow.etabar.square", "lifted unit (η, u ⊗ 1) is an arrow map"},
        {"arrow.mubar.square", "lifted multiplication (μ, (m ⊗ 1) ∘ (μ ⊗ 1 ⊗ 1)) is an arrow map"},
        {"arrow.monad.unit.left", "lifted monad left unit"},
        {"arrow.monad.unit.right", "lifted monad right unit"},
        {"arrow.monad.assoc", "lifted monad associativity"},
        {"arrow.boxtimes.unit", "box product unit isomorphism"},
        {"arrow.boxtimes.assoc", "box product associator is inverse to its inverse"},
        {"arrow.boxtimes.sym.involution", "box product symmetry is an involution"},
        {"arrow.boxtimes.sym.square", "box product symmetry is an arrow map"},
        {"arrow.boxtimes.natural", "box product is functorial on arrow maps"},
        {"arrow.mbar.square", "lifted multiplication m̄ is an arrow map"},
        {"arrow.monoid.assoc", "lifted free algebra is associative"},
        {"arrow.monoid.unit.left", "lifted free algebra left unit"},
        {"arrow.monoid.unit.right", "lifted free algebra right unit"},
        {"arrow.monoid.comm", "lifted free algebra is commutative"},
        {"arrow.mu.monoid_morphism", "lifted μ preserves the lifted multiplication"},
        {"arrow.dbar.square", "lifted deriving map d̄ is an arrow map"},
        {"arrow.D1", "D1 for the lifted deriving map"},
        {"arrow.D2", "D2 for the lifted deriving map"},
        {"arrow.D3", "D3 for the lifted deriving map"},
        {"arrow.D4", "D4 for the lifted deriving map"},
        {"arrow.D5", "D5 for the lifted deriving map"},
        {"arrow.biproduct", "arrow category biproduct identities"},
        {"arrow.seely.square", "lifted Seely map is an arrow map"},
        {"arrow.seely.iso.l", "lifted Seely storage, left inverse"},
        {"arrow.seely.iso.r", "lifted Seely storage, right inverse"},
        {"arrow.seely0", "lifted nullary Seely map is invertible"},
        {"salg.unit", "S-algebra unit: ν ∘ η = 1"},
        {"salg.assoc", "S-algebra associativity: ν ∘ μ = ν ∘ S(ν)"},
        {"salg.monoid", "induced multiplication and unit form a commutative monoid"},
        {"module.unit", "module unit: α ∘ (u ⊗ 1) = 1"},
        {"module.assoc", "module associativity: α ∘ (m ⊗ 1) = α ∘ (1 ⊗ α)"},
        {"derivation.constant", "derivation kills the unit"},
        {"derivation.leibniz", "derivation Leibniz rule against the module action"},
        {"sderivation.chain", "S-derivation chain rule: D ∘ ν = α ∘ (ν ⊗ D) ∘ d"},
        {"sderivation.implies_derivation", "every S-derivation satisfies the constant and Leibniz rules"},
        {"sbar_alg.square", "S̄-algebra structure (ν, ν_α) is an arrow map"},
        {"sbar_alg.unit", "S̄-algebra unit diagrams"},
        {"sbar_alg.assoc", "S̄-algebra associativity diagrams"},
        {"sbar_alg.aux", "auxiliary S̄-algebra identities for ν1"},
        {"sbar_alg.free", "free S̄-algebra (S̄φ, μ̄) satisfies the S̄-algebra laws"},
        {"sbar_alg.free.derivation", "free S̄-algebra yields an S-derivation"},
        {"roundtrip.alpha", "algebra/derivation dictionary: α_{ν_α} = α"},
        {"roundtrip.nu", "algebra/derivation dictionary: ν_{α_{ν1}} = ν1"},
        {"dictionary.morphism", "dictionary agrees on morphism squares"},
        {"arrow_monoid.assoc", "box monoid associativity, both components"},
        {"arrow_monoid.unit", "box monoid unit, both components"},
        {"arrow_monoid.comm", "box monoid commutativity, both components"},
        {"arrow_monoid.maps", "box monoid multiplication and unit are arrow maps"},
        {"arrow_monoid.m2_redundant", "box monoid right action is the swapped left action"},
        {"arrow_monoid.roundtrip", "monoid/derivation dictionary round trip is the identity"},
        {"tangent.salg", "tangent structure ν♭ satisfies the S-algebra laws"},
        {"tangent.dual_numbers", "tangent of the rank-1 algebra is the dual numbers"},
        {"tangent.derivation", "tangent derivation D ⊕ D is an S-derivation"},
        {"kleisli.diff.oracle", "Kleisli derivative matches formal partial derivatives"},
    };
    return laws;
}
// clang-format on

inline const LawInfo* find_law(const std::string& name) {
    for (const auto& l : law_registry())
        if (l.name == name) return &l;
    return nullptr;
}

inline bool glob_match(const std::string& pattern, const std::string& name) {
    return fnmatch(pattern.c_str(), name.c_str(), 0) == 0;
}

/// Laws each mutation is expected to break, as globs.
inline std::vector<std::string> expected_failures(Mutation m) {
    switch (m) {
    case Mutation::none: return {};
    case Mutation::leibniz_drop: return {"D2", "arrow.D2"};
    case Mutation::dbar_twist: return {"arrow.D*", "arrow.dbar.square"};
    case Mutation::mubar_mskip: return {"arrow.monad.*", "arrow.D4", "sbar_alg.free*"};
    case Mutation::m2_twist: return {"arrow_monoid.m2_redundant", "arrow_monoid.comm"};
    case Mutation::chi_inv_split: return {"seely.iso.*", "arrow.seely.*"};
    }
    return {};
}

// --- configuration ---------------------------------------------------------------------

struct Instances {
    std::vector<std::pair<std::string, SpaceExpr>> spaces;
    std::vector<builtin::NamedArrow> arrows;
    std::vector<builtin::NamedAlgebra> algebras;
    std::vector<builtin::NamedDerivation> derivations;
    std::vector<builtin::NamedKleisli> kleisli;
};

struct SuiteConfig {
    std::size_t weight_bound = 3;
    std::size_t deep_weight_bound = 2;
    std::uint64_t seed = 1;
    std::size_t parallelism = 1;
    std::vector<std::string> laws{"*"};
    Mutation mutation = Mutation::none;
    /// Per-law time budget in seconds.
    std::optional<double> budget;
    Instances instances;

    [[nodiscard]] LawContext context() const {
        LawContext cx;
        cx.opts.bound = weight_bound;
        cx.opts.deep_bound = std::min(deep_weight_bound, weight_bound);
        cx.mutation = mutation;
        cx.seed = seed;
        return cx;
    }
};

inline Instances default_instances() {
    const LawContext cx;
    Instances in;
    for (std::size_t r = 1; r <= 3; ++r) in.spaces.emplace_back("V" + std::to_string(r), SpaceExpr::base("V", r));
    in.arrows = builtin::arrows();
    in.algebras = builtin::algebras(cx);
    in.algebras.push_back({"Q[x]", builtin::polynomials()});
    in.derivations = builtin::derivations(cx);
    in.kleisli = builtin::kleisli_maps();
    return in;
}

inline SuiteConfig default_config() {
    SuiteConfig c;
    c.instances = default_instances();
    return c;
}

namespace detail {

using io::json;

inline SAlgebra builtin_algebra(const std::string& name, const LawContext& cx) {
    if (name == "Q") return builtin::rationals(cx);
    if (name == "dual") return builtin::dual_numbers(cx);
    if (name == "square-zero") return builtin::square_zero(cx);
    if (name == "Q[x]") return builtin::polynomials();
    throw rejected_input("schema: unknown builtin algebra \"" + name + "\"");
}

inline Derivation builtin_derivation(const std::string& name, const LawContext& cx) {
    for (auto& nd : builtin::derivations(cx))
        if (nd.name == name) return nd.d;
    throw rejected_input("schema: unknown builtin derivation \"" + name + "\"");
}

inline void check_keys(const json& j, const std::vector<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) throw rejected_input("schema: " + where + " must be an object");
    for (const auto& [k, v] : j.items())
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
            throw rejected_input("schema: unknown field \"" + k + "\" in " + where);
}

inline Instances parse_instances(const json& j, const Instances& defaults, const LawContext& cx) {
    Instances in = defaults;
    io::SpaceNames names;
    for (const auto& [n, s] : defaults.spaces) names.emplace(n, s);

    if (j.contains("spaces")) {
        in.spaces.clear();
        names.clear();
        for (const auto& [name, doc] : j.at("spaces").items()) {
            SpaceExpr s = io::space_from_json(doc, names);
            if (s.kind() != SpaceKind::base) throw rejected_input("schema: space \"" + name + "\" must be a base space");
            in.spaces.emplace_back(name, s);
            names.emplace(name, s);
        }
    }
    if (j.contains("arrows")) {
        in.arrows.clear();
        for (const auto& [name, doc] : j.at("arrows").items()) {
            check_keys(doc, {"phi"}, "arrow \"" + name + "\"");
            in.arrows.push_back({name, ArrowObj(io::morphism_from_json(io::detail::field(doc, "phi"), names))});
        }
    }
    std::map<std::string, SAlgebra> algs;
    for (const auto& a : defaults.algebras) algs.emplace(a.name, a.a);
    if (j.contains("algebras")) {
        in.algebras.clear();
        algs.clear();
        for (const auto& [name, doc] : j.at("algebras").items()) {
            check_keys(doc, {"builtin", "space", "mult_table", "unit"}, "algebra \"" + name + "\"");
            std::optional<SAlgebra> a;
            if (doc.contains("builtin")) {
                a = builtin_algebra(io::detail::text(doc.at("builtin"), "builtin"), cx);
            } else {
                SpaceExpr s = io::space_from_json(io::detail::field(doc, "space"), names);
                const json& t = io::detail::field(doc, "mult_table");
                if (!t.is_array()) throw rejected_input("schema: mult_table must be an array");
                builtin::Table table;
                for (const auto& r : t) table.push_back(io::rational_matrix_from_json(r));
                a = SAlgebra::from_table(s, table, io::rational_vector_from_json(io::detail::field(doc, "unit")), cx);
            }
            in.algebras.push_back({name, *a});
            algs.emplace(name, *a);
        }
    }
    auto algebra_ref = [&](const json& doc, const std::string& where) {
        const std::string n = io::detail::text(io::detail::field(doc, "algebra"), "algebra");
        auto it = algs.find(n);
        if (it != algs.end()) return it->second;
        try {
            return builtin_algebra(n, cx);
        } catch (const rejected_input&) {
            throw rejected_input("schema: " + where + " refers to unknown algebra \"" + n + "\"");
        }
    };
    std::map<std::string, std::pair<SAlgebra, AModule>> mods;
    if (j.contains("modules")) {
        for (const auto& [name, doc] : j.at("modules").items()) {
            check_keys(doc, {"algebra", "space", "alpha", "regular"}, "module \"" + name + "\"");
            SAlgebra a = algebra_ref(doc, "module \"" + name + "\"");
            if (doc.value("regular", false)) {
                mods.emplace(name, std::pair{a, builtin::regular_module(a, cx)});
                continue;
            }
            SpaceExpr M = io::space_from_json(io::detail::field(doc, "space"), names);
            MorExpr alpha = linear_map_from_matrix(SpaceExpr::tensor(a.carrier(), M), M,
                                                   io::rational_matrix_from_json(io::detail::field(doc, "alpha")));
            mods.emplace(name, std::pair{a, AModule::make(a, M, alpha, cx)});
        }
    }
    if (j.contains("derivations")) {
        in.derivations.clear();
        for (const auto& [name, doc] : j.at("derivations").items()) {
            check_keys(doc, {"builtin", "module", "matrix", "map", "s_derivation"}, "derivation \"" + name + "\"");
            if (doc.contains("builtin")) {
                in.derivations.push_back({name, builtin_derivation(io::detail::text(doc.at("builtin"), "builtin"), cx)});
                continue;
            }
            const std::string mn = io::detail::text(io::detail::field(doc, "module"), "module");
            auto it = mods.find(mn);
            if (it == mods.end()) throw rejected_input("schema: derivation \"" + name + "\" refers to unknown module \"" + mn + "\"");
            const auto& [alg, mod] = it->second;
            MorExpr D = doc.contains("map")
                            ? io::morphism_from_json(doc.at("map"), names)
                            : linear_map_from_matrix(alg.carrier(), mod.carrier(),
                                                     io::rational_matrix_from_json(io::detail::field(doc, "matrix")));
            in.derivations.push_back({name, Derivation::make(alg, mod, D, cx, doc.value("s_derivation", true))});
        }
    }
    if (j.contains("kleisli")) {
        in.kleisli.clear();
        for (const auto& [name, doc] : j.at("kleisli").items()) {
            check_keys(doc, {"dom", "cod", "images"}, "kleisli map \"" + name + "\"");
            SpaceExpr dom = io::space_from_json(io::detail::field(doc, "dom"), names);
            SpaceExpr cod = io::space_from_json(io::detail::field(doc, "cod"), names);
            if (dom.kind() != SpaceKind::base) throw rejected_input("schema: kleisli domain must be a base space");
            const json& imgs = io::detail::field(doc, "images");
            if (!imgs.is_array() || imgs.size() != dom.rank())
                throw rejected_input("schema: kleisli map \"" + name + "\" needs one image per domain generator");
            MorExpr::Images images;
            for (std::size_t g = 0; g < imgs.size(); ++g) {
                std::vector<PolyTerm> terms;
                for (const auto& t : imgs[g]) {
                    PolyTerm pt{io::rational_from_json(io::detail::field(t, "coeff")), {}};
                    for (const auto& e : io::detail::field(t, "exponents")) pt.exponents.push_back(io::detail::natural(e, "exponent"));
                    terms.push_back(std::move(pt));
                }
                images.emplace(BasisVector::gen(g + 1), polynomial(cod, terms));
            }
            in.kleisli.push_back({name, KleisliMap(dom, cod, std::move(images))});
        }
    }
    return in;
}

}  // namespace detail

/// Parses a config document; missing fields keep their defaults and each instance category present replaces the default one.
inline SuiteConfig config_from_json(const io::json& j) {
    using detail::json;
    detail::check_keys(j, {"schema", "weight_bound", "deep_weight_bound", "seed", "parallelism", "laws", "mutation",
                           "budget_secs", "spaces", "arrows", "algebras", "modules", "derivations", "kleisli"},
                       "config");
    if (!j.contains("schema") || j.at("schema") != config_schema_id)
        throw rejected_input(std::string("schema: config must declare \"schema\": \"") + config_schema_id + "\"");
    SuiteConfig c;
    if (j.contains("weight_bound")) c.weight_bound = io::detail::natural(j.at("weight_bound"), "weight_bound");
    if (j.contains("deep_weight_bound"))
        c.deep_weight_bound = io::detail::natural(j.at("deep_weight_bound"), "deep_weight_bound");
    if (c.weight_bound < 1) throw rejected_input("schema: weight_bound must be at least 1");
    if (j.contains("seed")) c.seed = io::detail::natural(j.at("seed"), "seed");
    if (j.contains("parallelism")) c.parallelism = std::max<std::size_t>(1, io::detail::natural(j.at("parallelism"), "parallelism"));
    if (j.contains("laws")) {
        if (!j.at("laws").is_array()) throw rejected_input("schema: laws must be an array of globs");
        c.laws.clear();
        for (const auto& g : j.at("laws")) c.laws.push_back(io::detail::text(g, "law glob"));
    }
    if (j.contains("mutation")) {
        auto m = parse_mutation(io::detail::text(j.at("mutation"), "mutation"));
        if (!m) throw rejected_input("schema: unknown mutation \"" + j.at("mutation").get<std::string>() + "\"");
        c.mutation = *m;
    }
    if (j.contains("budget_secs")) {
        if (!j.at("budget_secs").is_number() || j.at("budget_secs").get<double>() <= 0)
            throw rejected_input("schema: budget_secs must be a positive number");
        c.budget = j.at("budget_secs").get<double>();
    }
    c.instances = detail::parse_instances(j, default_instances(), c.context());
    return c;
}

// --- jobs ------------------------------------------------------------------------------

struct Job {
    std::string law;
    std::string instance;
    std::function<Verdict(const LawContext&)> run;
};

namespace detail {

/// Σ c·∂x^a/∂x_k · y_k, computed directly on monomials.
inline Element partial_derivative_oracle(const Element& p, const SpaceExpr& B) {
    const SpaceExpr BB = SpaceExpr::sum(B, B);
    Element out(SpaceExpr::sym(BB));
    for (const auto& [mon, c] : p.terms()) {
        std::map<std::size_t, std::size_t> mult;
        for (const auto& g : mon.kids()) ++mult[g.index()];
        for (const auto& [k, a] : mult) {
            std::vector<BasisVector> factors;
            bool dropped = false;
            for (const auto& g : mon.kids()) {
                if (!dropped && g.index() == k) {
                    dropped = true;
                    continue;
                }
                factors.push_back(BasisVector::sum(1, g));
            }
            factors.push_back(BasisVector::sum(2, BasisVector::gen(k)));
            out.add_term(BasisVector::mon(std::move(factors)), c * Rational(static_cast<long long>(a)));
        }
    }
    return out;
}

inline Verdict element_verdict(const BasisVector& at, const Element& lhs, const Element& rhs) {
    Verdict v;
    v.tested_count = 1;
    if (!(lhs == rhs)) {
        v.equal = false;
        v.witness = at;
        v.lhs_value = lhs;
        v.rhs_value = rhs;
    }
    return v;
}

inline Verdict all_of(const std::vector<LawResult>& rs) {
    Verdict acc;
    for (const auto& r : rs) {
        acc = both(acc, r.verdict, "", r.name);
        if (!acc.equal) return acc;
    }
    return acc;
}

inline Verdict pick(const std::vector<LawResult>& rs, const std::vector<std::string>& names) {
    std::vector<LawResult> sel;
    for (const auto& r : rs)
        if (std::find(names.begin(), names.end(), r.name) != names.end()) sel.push_back(r);
    return all_of(sel);
}

}  // namespace detail

/// Every (law, instance) job the instances support.
inline std::vector<Job> build_jobs(const Instances& in) {
    std::vector<Job> jobs;
    auto add = [&](std::string law, std::string inst, std::function<Verdict(const LawContext&)> f) {
        jobs.push_back({std::move(law), std::move(inst), std::move(f)});
    };

    // Base modality.
    using BaseLaw = Verdict (*)(const SpaceExpr&, const LawContext&);
    const std::vector<std::pair<std::string, BaseLaw>> base{
        {"D1", laws::d1},
        {"D2", laws::d2},
        {"D3", laws::d3},
        {"D4", laws::d4},
        {"D5", laws::d5},
        {"monad.unit.left", laws::monad_unit_left},
        {"monad.unit.right", laws::monad_unit_right},
        {"monad.assoc", laws::monad_assoc},
        {"monoid.assoc", laws::monoid_assoc},
        {"monoid.unit.left", laws::monoid_unit_left},
        {"monoid.unit.right", laws::monoid_unit_right},
        {"monoid.comm", laws::monoid_comm},
        {"mu.monoid_morphism.mult", laws::mu_mult},
        {"mu.monoid_morphism.unit", laws::mu_unit},
        {"functor.id", laws::functor_id},
    };
    using NatLaw = Verdict (*)(const MorExpr&, const LawContext&);
    const std::vector<std::pair<std::string, NatLaw>> nat{
        {"nat.eta", laws::nat_eta}, {"nat.mu", laws::nat_mu}, {"nat.m", laws::nat_m},
        {"nat.u", laws::nat_u},     {"nat.d", laws::nat_d},
    };
    for (const auto& [sname, A] : in.spaces) {
        for (const auto& [law, fn] : base) add(law, sname, [fn, A](const LawContext& cx) { return fn(A, cx); });
        for (const auto& [law, fn] : nat)
            add(law, sname, [fn, A](const LawContext& cx) {
                std::mt19937_64 rng(cx.seed);
                const MorExpr f = random_linear(A, A, rng);
                const MorExpr g = random_linear(A, SpaceExpr::base("W", 2), rng);
                return both(fn(f, cx), fn(g, cx), "endomorphism", "map to W[2]");
            });
        add("functor.comp", sname, [A](const LawContext& cx) {
            std::mt19937_64 rng(cx.seed + 1);
            const MorExpr f = random_linear(A, A, rng);
            const MorExpr g = random_linear(A, SpaceExpr::base("W", 2), rng);
            return laws::functor_comp(g, f, cx);
        });
    }
    for (const auto& [an, A] : in.spaces)
        for (const auto& [bn, B] : in.spaces) {
            const std::string inst = an + "," + bn;
            add("seely.def", inst, [A, B](const LawContext& cx) { return laws::seely_def(A, B, cx); });
            add("seely.iso.l", inst, [A, B](const LawContext& cx) { return laws::seely_iso_l(A, B, cx); });
            add("seely.iso.r", inst, [A, B](const LawContext& cx) { return laws::seely_iso_r(A, B, cx); });
        }
    add("seely0.def", "I", [](const LawContext& cx) { return laws::seely0_def(cx); });
    add("seely0.iso", "I", [](const LawContext& cx) { return laws::seely0_iso(cx); });

    // Arrow category.
    using ArrowLaw = Verdict (*)(const ArrowObj&, const LawContext&);
    const std::vector<std::pair<std::string, ArrowLaw>> unary{
        {"arrow.sbar.functor.id", arrow_laws::sbar_functor_id},
        {"arrow.sbar.functor.comp", arrow_laws::sbar_functor_comp},
        {"arrow.sbar.square", arrow_laws::sbar_square},
        {"arrow.etabar.square", arrow_laws::etabar_square},
        {"arrow.mubar.square", arrow_laws::mubar_square},
        {"arrow.monad.unit.left", arrow_laws::monad_unit_left},
        {"arrow.monad.unit.right", arrow_laws::monad_unit_right},
        {"arrow.monad.assoc", arrow_laws::monad_assoc},
        {"arrow.boxtimes.unit", arrow_laws::box_unit_law},
        {"arrow.mbar.square", arrow_laws::mbar_square},
        {"arrow.monoid.assoc", arrow_laws::monoid_assoc},
        {"arrow.monoid.unit.left", arrow_laws::monoid_unit_left},
        {"arrow.monoid.unit.right", arrow_laws::monoid_unit_right},
        {"arrow.monoid.comm", arrow_laws::monoid_comm},
        {"arrow.mu.monoid_morphism", arrow_laws::mu_monoid_morphism},
        {"arrow.dbar.square", arrow_laws::dbar_square},
        {"arrow.D1", arrow_laws::d1},
        {"arrow.D2", arrow_laws::d2},
        {"arrow.D3", arrow_laws::d3},
        {"arrow.D4", arrow_laws::d4},
        {"arrow.D5", arrow_laws::d5},
    };
    using ArrowPairLaw = Verdict (*)(const ArrowObj&, const ArrowObj&, const LawContext&);
    const std::vector<std::pair<std::string, ArrowPairLaw>> binary{
        {"arrow.boxtimes.sym.involution", arrow_laws::box_sym_involution},
        {"arrow.boxtimes.sym.square", arrow_laws::box_sym_square},
        {"arrow.boxtimes.natural", arrow_laws::box_natural},
        {"arrow.biproduct", arrow_laws::biproduct},
        {"arrow.seely.square", arrow_laws::seely_square},
        {"arrow.seely.iso.l", arrow_laws::seely_iso_l},
        {"arrow.seely.iso.r", arrow_laws::seely_iso_r},
    };
    const auto& arrows = in.arrows;
    for (const auto& [name, p] : arrows) {
        for (const auto& [law, fn] : unary) add(law, name, [fn, p](const LawContext& cx) { return fn(p, cx); });
        add("sbar_alg.free", name, [p](const LawContext& cx) {
            const SbarAlgebra a = free_sbar_algebra(p, cx);
            return detail::all_of(a.laws(cx));
        });
        add("sbar_alg.free.derivation", name, [p](const LawContext& cx) {
            const SbarAlgebra a = free_sbar_algebra(p, cx);
            const Derivation d = algebra_to_derivation(a, cx);
            return both(d.chain_rule(cx), detail::all_of(d.plain_laws(cx)), "sderivation.chain", "");
        });
    }
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        const auto& p = arrows[i];
        const auto& q = arrows[(i + 1) % arrows.size()];
        const auto& r = arrows[(i + 2) % arrows.size()];
        const std::string pq = p.name + "," + q.name;
        for (const auto& [law, fn] : binary)
            add(law, pq, [fn, a = p.obj, b = q.obj](const LawContext& cx) { return fn(a, b, cx); });
        add("arrow.boxtimes.assoc", pq + "," + r.name, [a = p.obj, b = q.obj, c = r.obj](const LawContext& cx) {
            return arrow_laws::box_assoc_law(a, b, c, cx);
        });
    }
    if (!arrows.empty()) add("arrow.seely0", "0", [](const LawContext& cx) { return arrow_laws::seely0(cx); });

    // Algebras.
    for (const auto& [name, a] : in.algebras) {
        add("salg.unit", name, [a](const LawContext& cx) { return detail::pick(a.laws(cx), {"salg.unit"}); });
        add("salg.assoc", name, [a](const LawContext& cx) { return detail::pick(a.laws(cx), {"salg.assoc"}); });
        add("salg.monoid", name, [a](const LawContext& cx) { return detail::all_of(a.monoid_laws(cx)); });
        add("tangent.salg", name, [a](const LawContext& cx) {
            const SAlgebra t = SAlgebra::unchecked(SpaceExpr::sum(a.carrier(), a.carrier()), tangent_structure(a));
            return detail::all_of(t.laws(cx));
        });
        if (a.carrier().sym_free() && rank_of(a.carrier()) == 1)
            add("tangent.dual_numbers", name, [a](const LawContext& cx) {
                const SAlgebra t = tangent_algebra(a, cx).tangent;
                const SpaceExpr& T = t.carrier();
                // With e·e = c·e in the base, expect (p, q)·(r, s) = (c·pr, c·(ps + qr)).
                const Rational c =
                    apply_basis(a.mult(), BasisVector::tensor({BasisVector::gen(1), BasisVector::gen(1)})).coeff(BasisVector::gen(1));
                const MorExpr dual = linear_map_from_matrix(SpaceExpr::tensor(T, T), T, {{c, 0, 0, 0}, {0, c, c, 0}});
                return check_equal(t.mult(), dual, CheckOptions{0, 0});
            });
    }

    // Derivations.
    for (const auto& [name, d] : in.derivations) {
        auto plain = [d](const LawContext& cx) { return d.plain_laws(cx); };
        add("derivation.constant", name, [plain](const LawContext& cx) { return detail::pick(plain(cx), {"derivation.constant"}); });
        add("derivation.leibniz", name, [plain](const LawContext& cx) { return detail::pick(plain(cx), {"derivation.leibniz"}); });
        add("sderivation.chain", name, [d](const LawContext& cx) { return d.chain_rule(cx); });
        add("sderivation.implies_derivation", name, [d](const LawContext& cx) {
            Verdict chain = d.chain_rule(cx);
            if (!chain.equal) return Verdict{};  // implication holds vacuously
            return detail::all_of(d.plain_laws(cx));
        });
        add("module.unit", name, [d](const LawContext& cx) {
            return detail::pick(d.module().laws(d.algebra(), cx), {"module.unit"});
        });
        add("module.assoc", name, [d](const LawContext& cx) {
            return detail::pick(d.module().laws(d.algebra(), cx), {"module.assoc"});
        });
        auto lifted = [d](const LawContext& cx) { return derivation_to_algebra(d, cx).laws(cx); };
        add("sbar_alg.square", name, [lifted](const LawContext& cx) { return detail::pick(lifted(cx), {"sbar_alg.square"}); });
        add("sbar_alg.unit", name, [lifted](const LawContext& cx) {
            return detail::pick(lifted(cx), {"sbar_alg.unit0", "sbar_alg.unit1"});
        });
        add("sbar_alg.assoc", name, [lifted](const LawContext& cx) {
            return detail::pick(lifted(cx), {"sbar_alg.assoc0", "sbar_alg.assoc1"});
        });
        add("sbar_alg.aux", name, [d](const LawContext& cx) {
            return detail::all_of(derivation_to_algebra(d, cx).auxiliary_laws(cx));
        });
        add("roundtrip.alpha", name, [d](const LawContext& cx) { return roundtrip_alpha(d, cx); });
        add("roundtrip.nu", name, [d](const LawContext& cx) { return roundtrip_nu(derivation_to_algebra(d, cx), cx); });
        auto monoid = [d](const LawContext& cx) { return derivation_to_monoid(d, cx).laws(cx); };
        add("arrow_monoid.assoc", name, [monoid](const LawContext& cx) {
            return detail::pick(monoid(cx), {"arrow_monoid.assoc0", "arrow_monoid.assoc1"});
        });
        add("arrow_monoid.unit", name, [monoid](const LawContext& cx) {
            return detail::pick(monoid(cx), {"arrow_monoid.unit0", "arrow_monoid.unit1"});
        });
        add("arrow_monoid.comm", name, [monoid](const LawContext& cx) {
            return detail::pick(monoid(cx), {"arrow_monoid.comm0", "arrow_monoid.comm1"});
        });
        add("arrow_monoid.maps", name, [monoid](const LawContext& cx) { return detail::pick(monoid(cx), {"arrow_monoid.maps"}); });
        add("arrow_monoid.m2_redundant", name, [monoid](const LawContext& cx) {
            return detail::pick(monoid(cx), {"arrow_monoid.m2_redundant"});
        });
        add("arrow_monoid.roundtrip", name, [d](const LawContext& cx) {
            const Derivation back = monoid_to_derivation(derivation_to_monoid(d, cx), cx);
            return both(check_equal(back.D(), d.D(), cx.opts),
                        both(check_equal(back.algebra().nu(), d.algebra().nu(), cx.opts),
                             check_equal(back.module().alpha(), d.module().alpha(), cx.opts), "ν", "α"),
                        "D", "");
        });
        add("tangent.derivation", name, [d](const LawContext& cx) {
            const Derivation t = tangent_derivation(d, cx);
            return both(t.chain_rule(cx), detail::all_of(t.plain_laws(cx)), "sderivation.chain", "");
        });
    }

    add("dictionary.morphism", "builtin", [](const LawContext& cx) {
        Verdict acc;
        for (const auto& m : builtin::derivation_morphisms(cx)) {
            const Verdict dv = is_derivation_morphism(m.source, m.target, m.f, m.g, cx);
            const Verdict av = is_sbar_algebra_morphism(derivation_to_algebra(m.source, cx),
                                                        derivation_to_algebra(m.target, cx), m.f, m.g, cx);
            if (dv.equal != av.equal || dv.equal != m.expected) {
                Verdict bad = dv.equal ? av : dv;
                bad.equal = false;
                bad.where = "morphism " + m.name;
                return bad;
            }
            acc.tested_count += dv.tested_count + av.tested_count;
        }
        return acc;
    });

    for (const auto& [name, f] : in.kleisli) {
        add("kleisli.diff.oracle", name, [f](const LawContext&) {
            const KleisliMap df = kleisli_diff(f);
            Verdict acc;
            for (const auto& b : enumerate_basis(f.dom(), 0)) {
                acc = both(acc, detail::element_verdict(b, df.image(b), detail::partial_derivative_oracle(f.image(b), f.cod())),
                           "", "generator " + b.str());
                if (!acc.equal) break;
            }
            return acc;
        });
    }
    return jobs;
}

// --- running ------------------------------------------------------------------------------

enum class Status { pass, fail, error, aborted };

inline std::string status_name(Status s) {
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
    case Status::aborted: return "aborted";
    }
    return "?";
}

struct Record {
    std::string law;
    std::string instance;
    Status status = Status::pass;
    Verdict verdict;
    std::string message;
    double elapsed_ms = 0;
};

struct Report {
    SuiteConfig config;
    std::vector<Record> records;
    double elapsed_ms = 0;

    [[nodiscard]] std::size_t count(Status s) const {
        return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [s](const Record& r) { return r.status == s; }));
    }
    [[nodiscard]] bool all_passed() const { return count(Status::pass) == records.size(); }
};

inline bool law_selected(const SuiteConfig& cfg, const std::string& law) {
    return std::any_of(cfg.laws.begin(), cfg.laws.end(), [&](const std::string& g) { return glob_match(g, law); });
}

inline Record run_job(const Job& job, const LawContext& cx, std::optional<double> budget) {
    Record rec;
    rec.law = job.law;
    rec.instance = job.instance;
    const auto start = std::chrono::steady_clock::now();
    std::optional<std::chrono::steady_clock::time_point> dl;
    if (budget)
        dl = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(*budget));
    ScopedDeadline guard(dl);
    try {
        rec.verdict = job.run(cx);
        rec.status = rec.verdict.equal ? Status::pass : Status::fail;
    } catch (const law_violation& e) {
        rec.verdict = e.verdict();
        rec.verdict.where = e.diagram();
        rec.status = Status::fail;
        rec.message = e.what();
    } catch (const budget_exceeded& e) {
        rec.status = Status::aborted;
        rec.message = e.what();
    } catch (const std::exception& e) {
        rec.status = Status::error;
        rec.message = e.what();
    }
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

inline Report run_suite(const SuiteConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<Job> jobs;
    for (auto& j : build_jobs(cfg.instances))
        if (law_selected(cfg, j.law)) jobs.push_back(std::move(j));

    Report rep{cfg, std::vector<Record>(jobs.size()), 0};
    const LawContext cx = cfg.context();
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) rep.records[i] = run_job(jobs[i], cx, cfg.budget);
    };
    const std::size_t n = std::min(std::max<std::size_t>(cfg.parallelism, 1), std::max<std::size_t>(jobs.size(), 1));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::stable_sort(rep.records.begin(), rep.records.end(), [](const Record& a, const Record& b) {
        return std::tie(a.law, a.instance) < std::tie(b.law, b.instance);
    });
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

// --- rendering -----------------------------------------------------------------------------

inline io::json config_echo(const SuiteConfig& c) {
    io::json inst{{"spaces", io::json::object()}, {"arrows", io::json::object()}, {"algebras", io::json::array()},
                  {"derivations", io::json::array()}, {"kleisli", io::json::array()}};
    for (const auto& [n, s] : c.instances.spaces) inst["spaces"][n] = io::to_json(s);
    for (const auto& a : c.instances.arrows) inst["arrows"][a.name] = io::to_json(a.obj.phi());
    for (const auto& a : c.instances.algebras) inst["algebras"].push_back(a.name);
    for (const auto& d : c.instances.derivations) inst["derivations"].push_back(d.name);
    for (const auto& k : c.instances.kleisli) inst["kleisli"].push_back(k.name);
    io::json j{{"weight_bound", c.weight_bound},
               {"deep_weight_bound", c.deep_weight_bound},
               {"seed", c.seed},
               {"laws", c.laws},
               {"mutation", mutation_name(c.mutation)},
               {"instances", inst}};
    j["budget_secs"] = c.budget ? io::json(*c.budget) : io::json(nullptr);
    return j;
}

inline io::json report_to_json(const Report& r) {
    io::json recs = io::json::array();
    for (const auto& rec : r.records) {
        const LawInfo* info = find_law(rec.law);
        io::json j{{"law", rec.law},
                   {"anchor", info ? info->anchor : ""},
                   {"instance", rec.instance},
                   {"status", status_name(rec.status)},
                   {"elapsed_ms", rec.elapsed_ms}};
        if (rec.status == Status::pass || rec.status == Status::fail) j["verdict"] = io::to_json(rec.verdict);
        if (!rec.message.empty()) j["message"] = rec.message;
        recs.push_back(std::move(j));
    }
    return {{"schema", report_schema_id},
            {"artifact_version", artifact_version},
            {"config", config_echo(r.config)},
            {"records", recs},
            {"summary",
             {{"total", r.records.size()},
              {"passed", r.count(Status::pass)},
              {"failed", r.count(Status::fail)},
              {"errors", r.count(Status::error)},
              {"aborted", r.count(Status::aborted)}}},
            {"elapsed_ms", r.elapsed_ms}};
}

/// Drops the timing fields so two reports can be compared.
inline io::json strip_timing(io::json j) {
    j.erase("elapsed_ms");
    for (auto& rec : j["records"]) rec.erase("elapsed_ms");
    return j;
}

inline std::string render_summary(const Report& r) {
    std::ostringstream os;
    for (const auto& rec : r.records) {
        if (rec.status == Status::pass) continue;
        os << status_name(rec.status) << "  " << rec.law << " [" << rec.instance << "]";
        if (rec.status == Status::fail) {
            const Verdict& v = rec.verdict;
            if (!v.where.empty()) os << " (" << v.where << ")";
            os << "\n      at " << (v.witness ? v.witness->str() : "?") << ": " << v.lhs_value.str() << " ≠ "
               << v.rhs_value.str();
        } else {
            os << ": " << rec.message;
        }
        os << "\n";
    }
    os << r.records.size() << " checks: " << r.count(Status::pass) << " passed, " << r.count(Status::fail)
       << " failed, " << r.count(Status::error) << " errors, " << r.count(Status::aborted) << " aborted\n";
    return os.str();
}

}  // namespace dcat
