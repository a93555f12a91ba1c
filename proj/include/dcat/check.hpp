#pragma once

/** @file check.hpp
 *  Diagram equality by exhaustive evaluation on a bounded basis.
 */

#include "dcat/basis.hpp"
#include "dcat/element.hpp"
#include "dcat/errors.hpp"
#include "dcat/morphism.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace dcat {

struct Verdict {
    bool equal = true;
    std::optional<BasisVector> witness;
    Element lhs_value, rhs_value;
    std::size_t tested_count = 0;
    std::size_t weight_bound = 0;
    /// Which part of a compound obligation the witness belongs to ("" for plain checks).
    std::string where;

    [[nodiscard]] explicit operator bool() const { return equal; }
};

/// Bounds used when a caller checks a diagram without choosing one explicitly.
struct CheckOptions {
    std::size_t bound = 3;
    /// Used instead of `bound` when the domain carries two or more Sym layers.
    std::size_t deep_bound = 2;

    [[nodiscard]] std::size_t for_space(const SpaceExpr& s) const {
        return s.sym_depth() >= 2 ? std::min(bound, deep_bound) : bound;
    }
};

/// Thrown when a law check runs past the active time budget.
class budget_exceeded : public std::runtime_error {
public:
    budget_exceeded() : std::runtime_error("time budget exceeded") {}
};

/// Thrown by validating constructors when a defining diagram fails.
class law_violation : public rejected_input {
public:
    law_violation(std::string diagram, Verdict v)
        : rejected_input(diagram + " fails at " + (v.witness ? v.witness->str() : std::string("?")) + ": " +
                         v.lhs_value.str() + " ≠ " + v.rhs_value.str()),
          diagram_(std::move(diagram)), verdict_(std::move(v)) {}
    [[nodiscard]] const std::string& diagram() const { return diagram_; }
    [[nodiscard]] const Verdict& verdict() const { return verdict_; }

private:
    std::string diagram_;
    Verdict verdict_;
};

namespace detail {
inline std::optional<std::chrono::steady_clock::time_point>& deadline() {
    thread_local std::optional<std::chrono::steady_clock::time_point> d;
    return d;
}
}  // namespace detail

/// Installs a deadline for checks run on the current thread; restores the previous one on exit.
class ScopedDeadline {
public:
    explicit ScopedDeadline(std::optional<std::chrono::steady_clock::time_point> d) : saved_(detail::deadline()) {
        detail::deadline() = d;
    }
    ~ScopedDeadline() { detail::deadline() = saved_; }
    ScopedDeadline(const ScopedDeadline&) = delete;
    ScopedDeadline& operator=(const ScopedDeadline&) = delete;

private:
    std::optional<std::chrono::steady_clock::time_point> saved_;
};

inline Verdict check_equal(const MorExpr& lhs, const MorExpr& rhs, std::size_t weight_bound) {
    if (!(lhs.dom() == rhs.dom()) || !(lhs.cod() == rhs.cod()))
        throw rejected_input("check_equal: endpoints differ: " + lhs.signature() + " vs " + rhs.signature());
    Verdict v;
    v.weight_bound = weight_bound;
    v.lhs_value = Element(lhs.cod());
    v.rhs_value = Element(rhs.cod());
    const auto& dl = detail::deadline();
    for (const auto& b : enumerate_basis(lhs.dom(), weight_bound)) {
        if (dl && std::chrono::steady_clock::now() > *dl) throw budget_exceeded();
        Element l = apply_basis(lhs, b);
        Element r = apply_basis(rhs, b);
        ++v.tested_count;
        if (!(l == r)) {
            v.equal = false;
            v.witness = b;
            v.lhs_value = std::move(l);
            v.rhs_value = std::move(r);
            return v;
        }
    }
    return v;
}

inline Verdict check_equal(const MorExpr& lhs, const MorExpr& rhs, const CheckOptions& opts) {
    return check_equal(lhs, rhs, opts.for_space(lhs.dom()));
}

/// Conjunction of two verdicts: the first failure wins, otherwise counts add up.
inline Verdict both(Verdict first, Verdict second, const std::string& first_name = "component 0",
                    const std::string& second_name = "component 1") {
    if (!first.equal) {
        if (first.where.empty()) first.where = first_name;
        return first;
    }
    if (!second.equal) {
        if (second.where.empty()) second.where = second_name;
        return second;
    }
    first.tested_count += second.tested_count;
    first.weight_bound = std::max(first.weight_bound, second.weight_bound);
    return first;
}

/// Throws law_violation unless the verdict is `equal`.
inline void require(const std::string& diagram, const Verdict& v) {
    if (!v.equal) throw law_violation(diagram, v);
}

}  // namespace dcat
