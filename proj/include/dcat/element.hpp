#pragma once

/** @file element.hpp
 *  Finitely supported vectors in a SpaceExpr.  Zero coefficients are never stored.
 */

#include "dcat/basis.hpp"
#include "dcat/rational.hpp"
#include "dcat/space.hpp"

#include <map>
#include <ostream>
#include <string>
#include <utility>

namespace dcat {

class Element {
public:
    using Terms = std::map<BasisVector, Rational>;

    Element() = default;
    explicit Element(SpaceExpr space) : space_(std::move(space)) {}

    /// The vector 1·b.
    static Element basis(SpaceExpr space, BasisVector b) {
        Element e(std::move(space));
        e.terms_.emplace(std::move(b), Rational(1));
        return e;
    }

    [[nodiscard]] const SpaceExpr& space() const { return space_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    [[nodiscard]] Rational coeff(const BasisVector& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// this += c·b
    void add_term(const BasisVector& b, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(b, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// this += c·other
    void add_scaled(const Element& other, const Rational& c) {
        if (!(other.space_ == space_))
            throw rejected_input("adding elements of " + other.space_.str() + " and " + space_.str());
        if (c.is_zero()) return;
        for (const auto& [b, v] : other.terms_) add_term(b, v * c);
    }

    Element& operator+=(const Element& o) { add_scaled(o, Rational(1)); return *this; }
    Element& operator-=(const Element& o) { add_scaled(o, Rational(-1)); return *this; }

    friend bool operator==(const Element& a, const Element& b) { return a.space_ == b.space_ && a.terms_ == b.terms_; }

    [[nodiscard]] std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [b, c] : terms_) {
            std::string cs = c.str();
            bool neg = cs.front() == '-';
            if (neg) cs.erase(0, 1);
            if (!first) s += neg ? " - " : " + ";
            else if (neg) s += "-";
            if (cs != "1") s += cs + "·";
            s += b.str();
            first = false;
        }
        return s;
    }
    friend std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.str(); }

private:
    SpaceExpr space_;
    Terms terms_;
};

inline Element elem_zero(const SpaceExpr& s) { return Element(s); }

inline Element elem_add(const Element& a, const Element& b) {
    Element r = a;
    r += b;
    return r;
}

inline Element elem_scale(const Rational& c, const Element& a) {
    Element r(a.space());
    r.add_scaled(a, c);
    return r;
}

/// a ⊗ b in the normalized tensor of the two spaces.
inline Element elem_tensor(const Element& a, const Element& b) {
    const std::vector<SpaceExpr> parts{a.space(), b.space()};
    Element r(SpaceExpr::tensor(parts));
    for (const auto& [x, c] : a.terms())
        for (const auto& [y, d] : b.terms()) r.add_term(join_tensor(parts, {x, y}), c * d);
    return r;
}

inline Element operator+(const Element& a, const Element& b) { return elem_add(a, b); }
inline Element operator-(const Element& a, const Element& b) { return elem_add(a, elem_scale(Rational(-1), b)); }
inline Element operator*(const Rational& c, const Element& a) { return elem_scale(c, a); }

}  // namespace dcat
