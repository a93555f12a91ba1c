#pragma once

/** @file basis.hpp
 *  Basis vectors of normalized spaces, their weight and total order,
 *  bounded enumeration, and the index bookkeeping for flattened tensors
 *  and sums.
 *
 *  Indices are 1-based: GenIx(k) for k in 1..rank, SumIx(i, v) for the
 *  i-th summand of a normalized sum.
 */

#include "dcat/errors.hpp"
#include "dcat/space.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dcat {

enum class BasisTag : std::uint8_t { unit = 0, gen = 1, tensor = 2, sum = 3, mon = 4 };

class BasisVector {
public:
    BasisVector() = default;  // UnitIx

    static BasisVector unit() { return {}; }
    static BasisVector gen(std::size_t k) { return BasisVector(BasisTag::gen, k, {}); }
    static BasisVector tensor(std::vector<BasisVector> comps) {
        return BasisVector(BasisTag::tensor, 0, std::move(comps));
    }
    static BasisVector sum(std::size_t branch, BasisVector inner) {
        std::vector<BasisVector> k;
        k.push_back(std::move(inner));
        return BasisVector(BasisTag::sum, branch, std::move(k));
    }
    /// Multiset of factors; stored sorted.
    static BasisVector mon(std::vector<BasisVector> factors) {
        std::sort(factors.begin(), factors.end());
        return BasisVector(BasisTag::mon, 0, std::move(factors));
    }

    [[nodiscard]] BasisTag tag() const { return tag_; }
    /// Generator index or summand branch.
    [[nodiscard]] std::size_t index() const { return value_; }
    /// Tensor components or monomial factors.
    [[nodiscard]] const std::vector<BasisVector>& kids() const { return kids_; }
    /// Payload of a SumIx.
    [[nodiscard]] const BasisVector& summand() const { return kids_.front(); }

    /// MonIx weighs its degree plus its factors; everything else sums its children.
    [[nodiscard]] std::size_t weight() const {
        std::size_t w = tag_ == BasisTag::mon ? kids_.size() : 0;
        for (const auto& k : kids_) w += k.weight();
        return w;
    }

    friend int compare(const BasisVector& a, const BasisVector& b) {
        if (a.tag_ != b.tag_) return a.tag_ < b.tag_ ? -1 : 1;
        if (a.value_ != b.value_) return a.value_ < b.value_ ? -1 : 1;
        const std::size_t n = std::min(a.kids_.size(), b.kids_.size());
        for (std::size_t i = 0; i < n; ++i)
            if (int c = compare(a.kids_[i], b.kids_[i])) return c;
        if (a.kids_.size() == b.kids_.size()) return 0;
        return a.kids_.size() < b.kids_.size() ? -1 : 1;
    }
    friend bool operator<(const BasisVector& a, const BasisVector& b) { return compare(a, b) < 0; }
    friend bool operator==(const BasisVector& a, const BasisVector& b) { return compare(a, b) == 0; }

    [[nodiscard]] std::string str() const {
        switch (tag_) {
        case BasisTag::unit: return "1";
        case BasisTag::gen: return "e" + std::to_string(value_);
        case BasisTag::tensor: {
            std::string s = "(";
            for (std::size_t i = 0; i < kids_.size(); ++i) s += (i ? " ⊗ " : "") + kids_[i].str();
            return s + ")";
        }
        case BasisTag::sum: return "ι" + std::to_string(value_) + "(" + kids_.front().str() + ")";
        case BasisTag::mon: {
            std::string s = "{";
            for (std::size_t i = 0; i < kids_.size(); ++i) s += (i ? "," : "") + kids_[i].str();
            return s + "}";
        }
        }
        return "?";
    }

private:
    BasisVector(BasisTag t, std::size_t v, std::vector<BasisVector> k) : tag_(t), value_(v), kids_(std::move(k)) {}

    BasisTag tag_ = BasisTag::unit;
    std::size_t value_ = 0;
    std::vector<BasisVector> kids_;
};

/// True iff `b` is a basis vector of the normalized space `s`.
inline bool is_basis_of(const SpaceExpr& s, const BasisVector& b) {
    switch (s.kind()) {
    case SpaceKind::unit: return b.tag() == BasisTag::unit;
    case SpaceKind::zero: return false;
    case SpaceKind::base: return b.tag() == BasisTag::gen && b.index() >= 1 && b.index() <= s.rank();
    case SpaceKind::tensor:
        if (b.tag() != BasisTag::tensor || b.kids().size() != s.parts().size()) return false;
        for (std::size_t i = 0; i < s.parts().size(); ++i)
            if (!is_basis_of(s.parts()[i], b.kids()[i])) return false;
        return true;
    case SpaceKind::sum:
        return b.tag() == BasisTag::sum && b.index() >= 1 && b.index() <= s.parts().size() &&
               is_basis_of(s.parts()[b.index() - 1], b.summand());
    case SpaceKind::sym:
        if (b.tag() != BasisTag::mon) return false;
        for (std::size_t i = 0; i < b.kids().size(); ++i) {
            if (!is_basis_of(s.inner(), b.kids()[i])) return false;
            if (i && b.kids()[i] < b.kids()[i - 1]) return false;
        }
        return true;
    }
    return false;
}

namespace detail {

struct Weighted {
    BasisVector b;
    std::size_t w;
};

inline void choose_multisets(const std::vector<Weighted>& pool, std::size_t from, std::size_t budget,
                             std::vector<BasisVector>& cur, std::size_t cur_w, std::vector<Weighted>& out) {
    out.push_back({BasisVector::mon(cur), cur_w});
    for (std::size_t i = from; i < pool.size(); ++i) {
        const std::size_t cost = pool[i].w + 1;
        if (cost > budget) continue;
        cur.push_back(pool[i].b);
        choose_multisets(pool, i, budget - cost, cur, cur_w + cost, out);
        cur.pop_back();
    }
}

inline std::vector<Weighted> enumerate_weighted(const SpaceExpr& s, std::size_t bound) {
    std::vector<Weighted> out;
    switch (s.kind()) {
    case SpaceKind::unit: out.push_back({BasisVector::unit(), 0}); break;
    case SpaceKind::zero: break;
    case SpaceKind::base:
        for (std::size_t k = 1; k <= s.rank(); ++k) out.push_back({BasisVector::gen(k), 0});
        break;
    case SpaceKind::tensor: {
        std::vector<std::vector<Weighted>> lists;
        for (const auto& f : s.parts()) lists.push_back(enumerate_weighted(f, bound));
        std::vector<BasisVector> comps(lists.size());
        auto rec = [&](auto& self, std::size_t i, std::size_t w) -> void {
            if (i == lists.size()) {
                out.push_back({BasisVector::tensor(comps), w});
                return;
            }
            for (const auto& e : lists[i]) {
                if (w + e.w > bound) continue;
                comps[i] = e.b;
                self(self, i + 1, w + e.w);
            }
        };
        rec(rec, 0, 0);
        break;
    }
    case SpaceKind::sum:
        for (std::size_t i = 0; i < s.parts().size(); ++i)
            for (auto& e : enumerate_weighted(s.parts()[i], bound)) out.push_back({BasisVector::sum(i + 1, e.b), e.w});
        break;
    case SpaceKind::sym: {
        std::vector<Weighted> pool = bound == 0 ? std::vector<Weighted>{} : enumerate_weighted(s.inner(), bound - 1);
        std::sort(pool.begin(), pool.end(), [](const Weighted& a, const Weighted& b) { return a.b < b.b; });
        std::vector<BasisVector> cur;
        choose_multisets(pool, 0, bound, cur, 0, out);
        break;
    }
    }
    return out;
}

inline std::size_t factor_count(const SpaceExpr& s) {
    switch (s.kind()) {
    case SpaceKind::unit: return 0;
    case SpaceKind::tensor: return s.parts().size();
    default: return 1;
    }
}

inline std::size_t summand_count(const SpaceExpr& s) {
    switch (s.kind()) {
    case SpaceKind::zero: return 0;
    case SpaceKind::sum: return s.parts().size();
    default: return 1;
    }
}

}  // namespace detail

/// All basis vectors of `s` with weight <= bound, in the global order.
inline std::vector<BasisVector> enumerate_basis(const SpaceExpr& s, std::size_t bound) {
    auto ws = detail::enumerate_weighted(s, bound);
    std::vector<BasisVector> out;
    out.reserve(ws.size());
    for (auto& w : ws) out.push_back(std::move(w.b));
    std::sort(out.begin(), out.end());
    return out;
}

/// Rank of a Sym-free space.
inline std::size_t rank_of(const SpaceExpr& s) {
    switch (s.kind()) {
    case SpaceKind::unit: return 1;
    case SpaceKind::zero: return 0;
    case SpaceKind::base: return s.rank();
    case SpaceKind::tensor: {
        std::size_t r = 1;
        for (const auto& p : s.parts()) r *= rank_of(p);
        return r;
    }
    case SpaceKind::sum: {
        std::size_t r = 0;
        for (const auto& p : s.parts()) r += rank_of(p);
        return r;
    }
    case SpaceKind::sym: throw rejected_input("rank of infinite-dimensional space " + s.str());
    }
    return 0;
}

/// Splits an index of tensor(parts) into one index per part.
inline std::vector<BasisVector> split_tensor(const BasisVector& ix, const std::vector<SpaceExpr>& parts) {
    std::size_t total = 0;
    for (const auto& p : parts) total += detail::factor_count(p);
    std::vector<BasisVector> single;
    const std::vector<BasisVector>* comps = &single;
    if (total == 1) {
        single.push_back(ix);
    } else if (total > 1) {
        if (ix.tag() != BasisTag::tensor || ix.kids().size() != total)
            throw rejected_input("index " + ix.str() + " does not fit a tensor of " + std::to_string(total) + " factors");
        comps = &ix.kids();
    }
    std::vector<BasisVector> out;
    out.reserve(parts.size());
    std::size_t pos = 0;
    for (const auto& p : parts) {
        const std::size_t n = detail::factor_count(p);
        if (n == 0) {
            out.push_back(BasisVector::unit());
        } else if (n == 1) {
            out.push_back((*comps)[pos]);
        } else {
            out.push_back(BasisVector::tensor(std::vector<BasisVector>(comps->begin() + pos, comps->begin() + pos + n)));
        }
        pos += n;
    }
    return out;
}

/// Inverse of split_tensor.
inline BasisVector join_tensor(const std::vector<SpaceExpr>& parts, const std::vector<BasisVector>& ixs) {
    std::vector<BasisVector> comps;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const std::size_t n = detail::factor_count(parts[i]);
        if (n == 1) comps.push_back(ixs[i]);
        else if (n > 1) comps.insert(comps.end(), ixs[i].kids().begin(), ixs[i].kids().end());
    }
    if (comps.empty()) return BasisVector::unit();
    if (comps.size() == 1) return std::move(comps.front());
    return BasisVector::tensor(std::move(comps));
}

/// Locates an index of sum(parts): returns (part number, index inside that part).
inline std::pair<std::size_t, BasisVector> split_sum(const BasisVector& ix, const std::vector<SpaceExpr>& parts) {
    std::size_t total = 0;
    for (const auto& p : parts) total += detail::summand_count(p);
    std::size_t branch = 0;
    const BasisVector* inner = &ix;
    if (total != 1) {
        if (ix.tag() != BasisTag::sum || ix.index() < 1 || ix.index() > total)
            throw rejected_input("index " + ix.str() + " does not fit a sum of " + std::to_string(total) + " summands");
        branch = ix.index() - 1;
        inner = &ix.summand();
    }
    std::size_t offset = 0;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        const std::size_t n = detail::summand_count(parts[p]);
        if (branch < offset + n) {
            if (n == 1) return {p, *inner};
            return {p, BasisVector::sum(branch - offset + 1, *inner)};
        }
        offset += n;
    }
    throw rejected_input("sum index out of range");
}

/// Injects an index of parts[part] into sum(parts).
inline BasisVector join_sum(const std::vector<SpaceExpr>& parts, std::size_t part, const BasisVector& ix) {
    std::size_t total = 0, offset = 0;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (p < part) offset += detail::summand_count(parts[p]);
        total += detail::summand_count(parts[p]);
    }
    const std::size_t n = detail::summand_count(parts[part]);
    std::size_t local = 0;
    const BasisVector* inner = &ix;
    if (n != 1) {
        local = ix.index() - 1;
        inner = &ix.summand();
    }
    if (total == 1) return *inner;
    return BasisVector::sum(offset + local + 1, *inner);
}

}  // namespace dcat
