// Command-line front end for the law suites.

#include "dcat/harness.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_config = 2;

std::size_t env_parallelism() {
    if (const char* v = std::getenv("DCAT_PARALLELISM")) {
        try {
            const long n = std::stol(v);
            if (n > 0) return static_cast<std::size_t>(n);
        } catch (const std::exception&) {
        }
        std::cerr << "ignoring DCAT_PARALLELISM=" << v << " (expected a positive integer)\n";
    }
    return 1;
}

struct CheckArgs {
    std::string config;
    std::vector<std::string> laws;
    std::optional<std::size_t> bound;
    std::string mutate;
    std::string json_path;
    std::optional<double> budget;
};

int run_check(const CheckArgs& a) {
    dcat::SuiteConfig cfg;
    try {
        if (a.config.empty()) {
            cfg = dcat::default_config();
        } else {
            std::ifstream in(a.config);
            if (!in) throw dcat::rejected_input("cannot open config " + a.config);
            dcat::io::json doc;
            try {
                doc = dcat::io::json::parse(in);
            } catch (const dcat::io::json::parse_error& e) {
                throw dcat::rejected_input(std::string("config is not valid JSON: ") + e.what());
            }
            cfg = dcat::config_from_json(doc);
            if (!doc.contains("parallelism")) cfg.parallelism = env_parallelism();
        }
        if (a.config.empty()) cfg.parallelism = env_parallelism();
        if (!a.laws.empty()) cfg.laws = a.laws;
        if (a.bound) {
            if (*a.bound < 1) throw dcat::rejected_input("--bound must be at least 1");
            cfg.weight_bound = *a.bound;
        }
        if (!a.mutate.empty()) {
            auto m = dcat::parse_mutation(a.mutate);
            if (!m) throw dcat::rejected_input("unknown mutation \"" + a.mutate + "\"");
            cfg.mutation = *m;
        }
        if (a.budget) {
            if (*a.budget <= 0) throw dcat::rejected_input("--budget must be positive");
            cfg.budget = a.budget;
        }
    } catch (const dcat::rejected_input& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config;
    }

    const dcat::Report rep = dcat::run_suite(cfg);
    std::cout << dcat::render_summary(rep);
    if (!a.json_path.empty()) {
        std::ofstream out(a.json_path);
        if (!out) {
            std::cerr << "cannot write " << a.json_path << "\n";
            return exit_config;
        }
        out << dcat::report_to_json(rep).dump(2) << "\n";
    }
    return rep.all_passed() ? exit_pass : exit_fail;
}

int run_list() {
    for (const auto& l : dcat::law_registry()) std::cout << l.name << "\t" << l.anchor << "\n";
    std::cout << "\nmutations:";
    for (const auto& [m, n] : dcat::mutation_names()) std::cout << " " << n;
    std::cout << "\n";
    return exit_pass;
}

int run_demo() {
    using namespace dcat;
    const LawContext cx;
    const SpaceExpr X = builtin::x_space();
    std::cout << "Basis names: e1 is the generator x; {..} is a monomial; ι1, ι2 pick a copy in a sum.\n\n";

    const Element x2 = polynomial(X, {{Rational(1), {2}}});
    std::cout << "d(x^2)     = " << apply(MorExpr::deriv(X), x2).str() << "   in " << S(X).str() << " ⊗ " << X.str()
              << "\n";

    const Derivation eps = builtin::dual_epsilon(cx);
    const SpaceExpr Dn = eps.algebra().carrier();
    std::cout << "D[ε]       = " << apply(eps.D(), Element::basis(Dn, BasisVector::gen(2))).str()
              << "   (ε-derivation a + bε ↦ bε on dual numbers, basis e1 = 1, e2 = ε)\n";

    const Derivation fd = builtin::formal_derivative(cx);
    const Derivation t = tangent_derivation(fd, cx);
    const SpaceExpr SX = S(X);
    Element a_plus_beps(t.algebra().carrier());
    a_plus_beps += apply(MorExpr::inj(0, {SX, SX}), polynomial(X, {{Rational(1), {3}}}));
    a_plus_beps += apply(MorExpr::inj(1, {SX, SX}), x2);
    std::cout << "T(d/dx)(x^3 + x^2 ε) = " << apply(t.D(), a_plus_beps).str() << "\n";

    const KleisliMap dk = kleisli_diff(builtin::power_map(2));
    std::cout << "D[x^2](x)  = " << dk.image(BasisVector::gen(1)).str() << "   in " << S(dk.cod()).str() << "\n";

    const SpaceExpr A = SpaceExpr::base("A", 1), B = SpaceExpr::base("B", 2);
    Element st = elem_tensor(polynomial(A, {{Rational(1), {2}}}), polynomial(B, {{Rational(3), {1, 1}}}));
    const Element merged = apply(MorExpr::chi(A, B), st);
    const Element back = apply(MorExpr::chi_inv(A, B), merged);
    std::cout << "Seely:       " << st.str() << "\n  χ       ↦ " << merged.str() << "\n  χ⁻¹     ↦ " << back.str()
              << (back == st ? "   (round trip exact)" : "   (ROUND TRIP MISMATCH)") << "\n";
    return back == st ? exit_pass : exit_fail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact law checker for the symmetric-algebra differential modality"};
    app.require_subcommand(1);

    CheckArgs ca;
    auto* check = app.add_subcommand("check", "run the law suites");
    check->add_option("--config", ca.config, "suite config JSON");
    check->add_option("--laws", ca.laws, "law-name glob (repeatable)");
    check->add_option("--bound", ca.bound, "weight bound for basis enumeration");
    check->add_option("--mutate", ca.mutate, "inject a named defect");
    check->add_option("--json", ca.json_path, "write the JSON report here");
    check->add_option("--budget", ca.budget, "per-law time budget in seconds");

    auto* list = app.add_subcommand("list-laws", "print every registered law with its anchor");
    auto* demo = app.add_subcommand("demo", "print worked examples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_pass : exit_config;
    }
    if (*check) return run_check(ca);
    if (*list) return run_list();
    if (*demo) return run_demo();
    return exit_config;
}
