#pragma once

/** @file laws.hpp
 *  Shared vocabulary for law suites: results, run context, mutations.
 */

#include "dcat/check.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace dcat {

/// Deliberate defects used to confirm that the law suites can fail.
enum class Mutation {
    none,
    leibniz_drop,   ///< Leibniz rule stated with its twisted summand missing
    dbar_twist,     ///< lifted deriving map built without its symmetry
    mubar_mskip,    ///< lifted monad multiplication discards instead of multiplying
    m2_twist,       ///< monoid right action not equal to the swapped left action
    chi_inv_split,  ///< Seely inverse that forgets the second summand
};

inline const std::vector<std::pair<Mutation, std::string>>& mutation_names() {
    static const std::vector<std::pair<Mutation, std::string>> names{
        {Mutation::leibniz_drop, "leibniz-drop"}, {Mutation::dbar_twist, "dbar-twist"},
        {Mutation::mubar_mskip, "mubar-mskip"},   {Mutation::m2_twist, "m2-twist"},
        {Mutation::chi_inv_split, "chi-inv-split"},
    };
    return names;
}

inline std::string mutation_name(Mutation m) {
    for (const auto& [k, n] : mutation_names())
        if (k == m) return n;
    return "none";
}

inline std::optional<Mutation> parse_mutation(std::string_view s) {
    if (s == "none" || s.empty()) return Mutation::none;
    for (const auto& [k, n] : mutation_names())
        if (n == s) return k;
    return std::nullopt;
}

struct LawContext {
    CheckOptions opts;
    Mutation mutation = Mutation::none;
    std::uint64_t seed = 1;
};

struct LawResult {
    std::string name;
    Verdict verdict;
};

/// Small integer matrix with entries in [-2, 2], reproducible from the generator state.
inline MorExpr random_linear(const SpaceExpr& dom, const SpaceExpr& cod, std::mt19937_64& rng) {
    const std::size_t r = rank_of(cod), c = rank_of(dom);
    std::vector<std::vector<Rational>> m(r, std::vector<Rational>(c));
    for (auto& row : m)
        for (auto& x : row) x = Rational(static_cast<long long>(rng() % 5) - 2);
    return linear_map_from_matrix(dom, cod, m);
}

}  // namespace dcat
