#include "dcat/harness.hpp"

#include <doctest.h>

#include <set>

using namespace dcat;
using io::json;

namespace {
SuiteConfig with_laws(std::vector<std::string> globs, Mutation m = Mutation::none) {
    SuiteConfig c = default_config();
    c.laws = std::move(globs);
    c.mutation = m;
    return c;
}

std::set<std::string> failing_laws(const Report& r) {
    std::set<std::string> out;
    for (const auto& rec : r.records)
        if (rec.status != Status::pass) out.insert(rec.law);
    return out;
}

bool matches_any(const std::vector<std::string>& globs, const std::string& law) {
    for (const auto& g : globs)
        if (glob_match(g, law)) return true;
    return false;
}

SuiteConfig parse(const char* text) { return config_from_json(json::parse(text)); }
}  // namespace

TEST_CASE("registry") {
    const auto& reg = law_registry();
    CHECK(reg.size() >= 40);
    std::set<std::string> names;
    for (const auto& l : reg) {
        CHECK_FALSE(l.anchor.empty());
        CHECK(names.insert(l.name).second);
    }
    for (const char* n : {"D1", "D2", "D3", "D4", "D5", "arrow.monad.assoc", "roundtrip.alpha", "kleisli.diff.oracle"})
        CHECK(find_law(n) != nullptr);
    CHECK(find_law("no.such.law") == nullptr);
}

TEST_CASE("every job corresponds to a registered law") {
    for (const auto& j : build_jobs(default_instances())) {
        CAPTURE(j.law);
        CHECK(find_law(j.law) != nullptr);
    }
}

TEST_CASE("glob matching") {
    CHECK(glob_match("*", "arrow.D2"));
    CHECK(glob_match("arrow.D*", "arrow.D2"));
    CHECK_FALSE(glob_match("D*", "arrow.D2"));
    CHECK(glob_match("seely.iso.?", "seely.iso.l"));
    CHECK_FALSE(glob_match("seely.iso", "seely.iso.l"));
}

TEST_CASE("the default suite passes") {
    const Report r = run_suite(default_config());
    CHECK(r.records.size() > 100);
    CHECK(r.all_passed());
    for (const auto& rec : r.records)
        if (rec.status != Status::pass) FAIL_CHECK(rec.law << " [" << rec.instance << "]: " << rec.message);
    // Records are sorted by (law, instance).
    for (std::size_t i = 1; i < r.records.size(); ++i)
        CHECK(std::tie(r.records[i - 1].law, r.records[i - 1].instance) <= std::tie(r.records[i].law, r.records[i].instance));
}

TEST_CASE("an empty selection runs nothing and passes") {
    const Report r = run_suite(with_laws({"nothing-matches-this"}));
    CHECK(r.records.empty());
    CHECK(r.all_passed());
    const json j = report_to_json(r);
    CHECK(j["summary"]["total"] == 0);
}

TEST_CASE("reports are deterministic across parallelism once timing is stripped") {
    SuiteConfig a = with_laws({"D*", "seely.*", "arrow.monad.*", "tangent.*", "roundtrip.*"});
    SuiteConfig b = a;
    a.parallelism = 1;
    b.parallelism = 4;
    const json ja = strip_timing(report_to_json(run_suite(a)));
    const json jb = strip_timing(report_to_json(run_suite(b)));
    CHECK(ja == jb);
    CHECK_FALSE(ja.contains("elapsed_ms"));
    CHECK(ja["schema"] == report_schema_id);
    CHECK_FALSE(ja["config"].contains("parallelism"));
}

TEST_CASE("each mutation is caught with a witness in its expected family") {
    for (const auto& [m, name] : mutation_names()) {
        if (m == Mutation::none) continue;
        CAPTURE(name);
        const Report r = run_suite(with_laws({"*"}, m));
        CHECK_FALSE(r.all_passed());
        CHECK(r.count(Status::error) == 0);
        for (const auto& rec : r.records) {
            if (rec.status != Status::fail) continue;
            CAPTURE(rec.law);
            CHECK(rec.verdict.witness.has_value());
        }
        const auto fails = failing_laws(r);
        for (const auto& glob : expected_failures(m)) {
            CAPTURE(glob);
            CHECK(std::any_of(fails.begin(), fails.end(), [&](const std::string& l) { return glob_match(glob, l); }));
        }
    }
}

TEST_CASE("dropping the Leibniz summand breaks only the Leibniz laws") {
    const Report r = run_suite(with_laws({"*"}, Mutation::leibniz_drop));
    const auto fails = failing_laws(r);
    CHECK_FALSE(fails.empty());
    for (const auto& l : fails) {
        CAPTURE(l);
        CHECK(matches_any(expected_failures(Mutation::leibniz_drop), l));
    }
}

TEST_CASE("failures serialize with witness details") {
    const Report r = run_suite(with_laws({"D2"}, Mutation::leibniz_drop));
    const json j = report_to_json(r);
    REQUIRE(j["records"].size() > 0);
    const json& rec = j["records"][0];
    CHECK(rec["status"] == "fail");
    CHECK(rec["verdict"]["equal"] == false);
    CHECK(rec["verdict"].contains("witness_text"));
    CHECK(rec["anchor"] == find_law("D2")->anchor);
    CHECK(j["config"]["mutation"] == "leibniz-drop");
    CHECK(render_summary(r).find("fail  D2") != std::string::npos);
}

TEST_CASE("a tiny budget aborts the law and the run continues") {
    SuiteConfig c = with_laws({"arrow.D2", "D1"});
    c.budget = 1e-9;
    const Report r = run_suite(c);
    CHECK(r.count(Status::aborted) > 0);
    CHECK_FALSE(r.all_passed());
    CHECK(r.records.size() == run_suite(with_laws({"arrow.D2", "D1"})).records.size());
    CHECK(report_to_json(r)["summary"]["aborted"] == r.count(Status::aborted));
}

TEST_CASE("config parsing") {
    const SuiteConfig d = parse(R"({"schema":"dcat.suite-config/1"})");
    CHECK(d.weight_bound == 3);
    CHECK(d.deep_weight_bound == 2);
    CHECK(d.instances.spaces.size() == 3);
    CHECK(d.instances.derivations.size() == default_instances().derivations.size());

    const SuiteConfig c = parse(R"({"schema":"dcat.suite-config/1","weight_bound":2,"seed":9,"laws":["D*"],
        "mutation":"dbar-twist","budget_secs":5,"spaces":{"U":{"kind":"base","name":"U","rank":2}}})");
    CHECK(c.weight_bound == 2);
    CHECK(c.seed == 9);
    CHECK(c.laws == std::vector<std::string>{"D*"});
    CHECK(c.mutation == Mutation::dbar_twist);
    CHECK(c.budget == 5.0);
    REQUIRE(c.instances.spaces.size() == 1);
    CHECK(c.instances.spaces[0].first == "U");
    // Categories not given keep their defaults.
    CHECK(c.instances.arrows.size() == builtin::arrows().size());
    CHECK(c.context().opts.deep_bound == 2);
}

TEST_CASE("config instances run through the suite") {
    const SuiteConfig c = parse(R"({"schema":"dcat.suite-config/1","weight_bound":2,
        "algebras":{"Q2":{"space":{"kind":"base","name":"E","rank":2},
                          "mult_table":[[["1","0"],["0","0"]],[["0","0"],["0","1"]]],"unit":["1","1"]}},
        "modules":{"m":{"algebra":"dual","regular":true}},
        "derivations":{"half":{"module":"m","matrix":[["0","0"],["0","1/2"]]}},
        "kleisli":{"k":{"dom":{"kind":"base","name":"x","rank":1},"cod":{"kind":"base","name":"y","rank":2},
                        "images":[[{"coeff":"2","exponents":[3,0]},{"coeff":"-1/3","exponents":[1,2]}]]}}})");
    REQUIRE(c.instances.algebras.size() == 1);
    REQUIRE(c.instances.derivations.size() == 1);
    REQUIRE(c.instances.kleisli.size() == 1);
    SuiteConfig run = c;
    run.laws = {"salg.*", "derivation.*", "sderivation.*", "roundtrip.*", "tangent.*", "kleisli.*", "arrow_monoid.*"};
    const Report r = run_suite(run);
    CHECK(r.records.size() > 5);
    CHECK(r.all_passed());
}

TEST_CASE("config errors are rejected") {
    const char* bad[] = {
        R"({})",
        R"({"schema":"dcat.suite-config/2"})",
        R"({"schema":"dcat.suite-config/1","weight_bound":"three"})",
        R"({"schema":"dcat.suite-config/1","weight_bound":0})",
        R"({"schema":"dcat.suite-config/1","mutation":"bogus"})",
        R"({"schema":"dcat.suite-config/1","budget_secs":-1})",
        R"({"schema":"dcat.suite-config/1","laws":"D1"})",
        R"({"schema":"dcat.suite-config/1","colour":"blue"})",
        R"({"schema":"dcat.suite-config/1","spaces":{"S":{"kind":"sym","inner":{"kind":"unit"}}}})",
        R"({"schema":"dcat.suite-config/1","algebras":{"a":{"builtin":"octonions"}}})",
        R"({"schema":"dcat.suite-config/1","algebras":{"a":{"space":{"kind":"base","name":"E","rank":2},
            "mult_table":[[["1","0"],["0","1"]],[["1","0"],["0","0"]]],"unit":["1","0"]}}})",
        R"({"schema":"dcat.suite-config/1","derivations":{"d":{"module":"missing","matrix":[]}}})",
        R"({"schema":"dcat.suite-config/1","modules":{"m":{"algebra":"dual","regular":true}},
            "derivations":{"d":{"module":"m","matrix":[["1","0"],["0","1"]]}}})",
        R"({"schema":"dcat.suite-config/1","kleisli":{"k":{"dom":{"kind":"base","name":"x","rank":2},
            "cod":{"kind":"base","name":"y","rank":1},"images":[[]]}}})",
        R"({"schema":"dcat.suite-config/1","arrows":{"a":{"phi":{"kind":"id","space":"nope"}}}})",
    };
    for (const char* s : bad) {
        CAPTURE(s);
        CHECK_THROWS_AS(parse(s), rejected_input);
    }
}
