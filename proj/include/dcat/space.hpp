#pragma once

/** @file space.hpp
 *  Symbolic vector spaces over the rationals.
 *
 *  Every SpaceExpr is kept in normal form by its factory functions:
 *  tensors and sums are flattened, units drop out of tensors, zeros drop
 *  out of sums, a tensor with a zero factor is zero, and singleton lists
 *  collapse to their only member.  Structural equality of normal forms is
 *  therefore the strict monoidal/biproduct equality.
 */

#include "dcat/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

namespace dcat {

enum class SpaceKind { unit, zero, base, tensor, sum, sym };

class SpaceExpr {
public:
    /// The monoidal unit I.
    SpaceExpr() : node_(unit_node()) {}

    static SpaceExpr unit() { return SpaceExpr(); }
    static SpaceExpr zero() {
        static const auto n = make_node(SpaceKind::zero, {}, 0, {});
        return SpaceExpr(n);
    }
    static SpaceExpr base(std::string name, std::size_t rank) {
        if (rank == 0) return zero();
        return SpaceExpr(make_node(SpaceKind::base, std::move(name), rank, {}));
    }
    static SpaceExpr sym(const SpaceExpr& inner) { return SpaceExpr(make_node(SpaceKind::sym, {}, 0, {inner})); }

    static SpaceExpr tensor(const std::vector<SpaceExpr>& factors) {
        std::vector<SpaceExpr> flat;
        for (const auto& f : factors) {
            switch (f.kind()) {
            case SpaceKind::zero: return zero();
            case SpaceKind::unit: break;
            case SpaceKind::tensor: flat.insert(flat.end(), f.parts().begin(), f.parts().end()); break;
            default: flat.push_back(f);
            }
        }
        if (flat.empty()) return unit();
        if (flat.size() == 1) return flat.front();
        return SpaceExpr(make_node(SpaceKind::tensor, {}, 0, std::move(flat)));
    }
    static SpaceExpr tensor(const SpaceExpr& a, const SpaceExpr& b) { return tensor(std::vector{a, b}); }

    static SpaceExpr sum(const std::vector<SpaceExpr>& summands) {
        std::vector<SpaceExpr> flat;
        for (const auto& s : summands) {
            switch (s.kind()) {
            case SpaceKind::zero: break;
            case SpaceKind::sum: flat.insert(flat.end(), s.parts().begin(), s.parts().end()); break;
            default: flat.push_back(s);
            }
        }
        if (flat.empty()) return zero();
        if (flat.size() == 1) return flat.front();
        return SpaceExpr(make_node(SpaceKind::sum, {}, 0, std::move(flat)));
    }
    static SpaceExpr sum(const SpaceExpr& a, const SpaceExpr& b) { return sum(std::vector{a, b}); }

    [[nodiscard]] SpaceKind kind() const { return node_->kind; }
    [[nodiscard]] const std::string& name() const { return node_->name; }
    [[nodiscard]] std::size_t rank() const { return node_->rank; }
    /// Factors of a tensor, summands of a sum, the single argument of Sym.
    [[nodiscard]] const std::vector<SpaceExpr>& parts() const { return node_->parts; }
    [[nodiscard]] const SpaceExpr& inner() const {
        if (kind() != SpaceKind::sym) throw rejected_input("inner() of non-Sym space " + str());
        return node_->parts.front();
    }
    /// Canonical printed form; equal iff the normal forms are equal.
    [[nodiscard]] const std::string& str() const { return node_->key; }

    /// Largest number of nested Sym layers.
    [[nodiscard]] int sym_depth() const { return node_->depth; }
    [[nodiscard]] bool sym_free() const { return node_->depth == 0; }

    friend bool operator==(const SpaceExpr& a, const SpaceExpr& b) {
        return a.node_ == b.node_ || a.node_->key == b.node_->key;
    }
    friend bool operator<(const SpaceExpr& a, const SpaceExpr& b) { return a.node_->key < b.node_->key; }
    friend std::ostream& operator<<(std::ostream& os, const SpaceExpr& s) { return os << s.str(); }

private:
    struct Node {
        SpaceKind kind;
        std::string name;
        std::size_t rank;
        std::vector<SpaceExpr> parts;
        std::string key;
        int depth;
    };

    explicit SpaceExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static std::shared_ptr<const Node> make_node(SpaceKind k, std::string name, std::size_t rank,
                                                 std::vector<SpaceExpr> parts) {
        std::string key;
        int depth = 0;
        auto join = [&](const char* sep) {
            key = "(";
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i) key += sep;
                key += parts[i].str();
                depth = std::max(depth, parts[i].sym_depth());
            }
            key += ")";
        };
        switch (k) {
        case SpaceKind::unit: key = "I"; break;
        case SpaceKind::zero: key = "0"; break;
        case SpaceKind::base: key = name + "[" + std::to_string(rank) + "]"; break;
        case SpaceKind::tensor: join(" ⊗ "); break;
        case SpaceKind::sum: join(" ⊕ "); break;
        case SpaceKind::sym:
            key = "S(" + parts.front().str() + ")";
            depth = parts.front().sym_depth() + 1;
            break;
        }
        return std::make_shared<const Node>(Node{k, std::move(name), rank, std::move(parts), std::move(key), depth});
    }
    static const std::shared_ptr<const Node>& unit_node() {
        static const auto n = make_node(SpaceKind::unit, {}, 0, {});
        return n;
    }

    std::shared_ptr<const Node> node_;
};

/// Rebuilds a space through the normalizing factories.
inline SpaceExpr normalize(const SpaceExpr& s) {
    switch (s.kind()) {
    case SpaceKind::unit: return SpaceExpr::unit();
    case SpaceKind::zero: return SpaceExpr::zero();
    case SpaceKind::base: return SpaceExpr::base(s.name(), s.rank());
    case SpaceKind::sym: return SpaceExpr::sym(normalize(s.inner()));
    case SpaceKind::tensor:
    case SpaceKind::sum: {
        std::vector<SpaceExpr> ps;
        for (const auto& p : s.parts()) ps.push_back(normalize(p));
        return s.kind() == SpaceKind::tensor ? SpaceExpr::tensor(ps) : SpaceExpr::sum(ps);
    }
    }
    return s;
}

/// Tensor factors of a normalized space (empty for I).
inline std::vector<SpaceExpr> tensor_factors(const SpaceExpr& s) {
    if (s.kind() == SpaceKind::unit) return {};
    if (s.kind() == SpaceKind::tensor) return s.parts();
    return {s};
}

/// Summands of a normalized space (empty for 0).
inline std::vector<SpaceExpr> summands(const SpaceExpr& s) {
    if (s.kind() == SpaceKind::zero) return {};
    if (s.kind() == SpaceKind::sum) return s.parts();
    return {s};
}

}  // namespace dcat
