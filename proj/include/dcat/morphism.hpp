#pragma once

/** @file morphism.hpp
 *  Typed morphism expressions and their exact evaluator.
 *
 *  A MorExpr is an immutable tree.  Factories check endpoints and throw
 *  rejected_input on mismatch; dom() and cod() are always normalized.
 *  Summand and injection indices in this API are 0-based.
 */

#include "dcat/basis.hpp"
#include "dcat/element.hpp"
#include "dcat/errors.hpp"
#include "dcat/rational.hpp"
#include "dcat/space.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace dcat {

enum class MorKind {
    id, compose, tensor, sum, add, zero, scale, sigma, inj, proj, matrix, linear,
    symf, eta, mu, mult, unit, deriv, chi, chi_inv, chi0, chi0_inv,
    fold, distribute, undistribute,
    chi_inv_split,  // deliberately wrong splitting, used only by mutation runs
};

class MorExpr {
public:
    using Images = std::map<BasisVector, Element>;

    struct Node {
        MorKind kind;
        SpaceExpr dom, cod;
        std::vector<MorExpr> args;
        std::vector<SpaceExpr> spaces;
        std::vector<std::vector<SpaceExpr>> groups;
        std::size_t index = 0, rows = 0, cols = 0;
        Rational scalar;
        std::shared_ptr<const Images> images;
    };

    [[nodiscard]] MorKind kind() const { return n_->kind; }
    [[nodiscard]] const SpaceExpr& dom() const { return n_->dom; }
    [[nodiscard]] const SpaceExpr& cod() const { return n_->cod; }
    [[nodiscard]] const Node& node() const { return *n_; }
    [[nodiscard]] const std::vector<MorExpr>& args() const { return n_->args; }

    // --- structural -------------------------------------------------------

    static MorExpr id(const SpaceExpr& a) { return make(MorKind::id, a, a); }

    /// g ∘ f
    static MorExpr compose(const MorExpr& g, const MorExpr& f) {
        if (!(f.cod() == g.dom()))
            throw rejected_input("compose: cod " + f.cod().str() + " does not match dom " + g.dom().str());
        Node n = base(MorKind::compose, f.dom(), g.cod());
        n.args = {g, f};
        return MorExpr(std::move(n));
    }

    static MorExpr tensor(const MorExpr& f, const MorExpr& g) {
        Node n = base(MorKind::tensor, SpaceExpr::tensor(f.dom(), g.dom()), SpaceExpr::tensor(f.cod(), g.cod()));
        n.args = {f, g};
        return MorExpr(std::move(n));
    }

    /// f ⊕ g
    static MorExpr sum(const MorExpr& f, const MorExpr& g) {
        Node n = base(MorKind::sum, SpaceExpr::sum(f.dom(), g.dom()), SpaceExpr::sum(f.cod(), g.cod()));
        n.args = {f, g};
        return MorExpr(std::move(n));
    }

    static MorExpr add(const MorExpr& f, const MorExpr& g) {
        if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
            throw rejected_input("add: endpoints differ: " + f.signature() + " vs " + g.signature());
        Node n = base(MorKind::add, f.dom(), f.cod());
        n.args = {f, g};
        return MorExpr(std::move(n));
    }

    static MorExpr zero(const SpaceExpr& dom, const SpaceExpr& cod) { return make(MorKind::zero, dom, cod); }

    static MorExpr scale(const Rational& c, const MorExpr& f) {
        Node n = base(MorKind::scale, f.dom(), f.cod());
        n.args = {f};
        n.scalar = c;
        return MorExpr(std::move(n));
    }

    /// Symmetry a ⊗ b → b ⊗ a.
    static MorExpr sigma(const SpaceExpr& a, const SpaceExpr& b) {
        Node n = base(MorKind::sigma, SpaceExpr::tensor(a, b), SpaceExpr::tensor(b, a));
        n.spaces = {a, b};
        return MorExpr(std::move(n));
    }

    static MorExpr inj(std::size_t i, const std::vector<SpaceExpr>& parts) {
        if (i >= parts.size()) throw rejected_input("inj: index out of range");
        Node n = base(MorKind::inj, parts[i], SpaceExpr::sum(parts));
        n.spaces = parts;
        n.index = i;
        return MorExpr(std::move(n));
    }

    static MorExpr proj(std::size_t i, const std::vector<SpaceExpr>& parts) {
        if (i >= parts.size()) throw rejected_input("proj: index out of range");
        Node n = base(MorKind::proj, SpaceExpr::sum(parts), parts[i]);
        n.spaces = parts;
        n.index = i;
        return MorExpr(std::move(n));
    }

    /// Block matrix; entry (i, j) maps the j-th domain summand to the i-th codomain summand.
    static MorExpr matrix(const std::vector<std::vector<MorExpr>>& rows) {
        if (rows.empty() || rows.front().empty()) throw rejected_input("matrix: empty block matrix");
        const std::size_t r = rows.size(), c = rows.front().size();
        std::vector<SpaceExpr> dparts, cparts;
        for (std::size_t j = 0; j < c; ++j) dparts.push_back(rows[0][j].dom());
        for (std::size_t i = 0; i < r; ++i) cparts.push_back(rows[i][0].cod());
        Node n = base(MorKind::matrix, SpaceExpr::sum(dparts), SpaceExpr::sum(cparts));
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw rejected_input("matrix: ragged rows");
            for (std::size_t j = 0; j < c; ++j) {
                const auto& e = rows[i][j];
                if (!(e.dom() == dparts[j]) || !(e.cod() == cparts[i]))
                    throw rejected_input("matrix: entry (" + std::to_string(i) + "," + std::to_string(j) +
                                         ") has type " + e.signature() + ", expected " + dparts[j].str() +
                                         " → " + cparts[i].str());
                n.args.push_back(e);
            }
        }
        n.rows = r;
        n.cols = c;
        n.groups = {dparts, cparts};
        return MorExpr(std::move(n));
    }

    /// Linear map given by the image of each domain basis vector (missing images are zero).
    static MorExpr linear(const SpaceExpr& dom, const SpaceExpr& cod, Images images) {
        if (!dom.sym_free()) throw rejected_input("linear map on Sym domain " + dom.str());
        for (const auto& [b, e] : images) {
            if (!is_basis_of(dom, b)) throw rejected_input("linear map: " + b.str() + " is not a basis vector of " + dom.str());
            if (!(e.space() == cod)) throw rejected_input("linear map: image of " + b.str() + " lies in " + e.space().str());
        }
        std::erase_if(images, [](const auto& kv) { return kv.second.is_zero(); });
        Node n = base(MorKind::linear, dom, cod);
        n.images = std::make_shared<const Images>(std::move(images));
        return MorExpr(std::move(n));
    }

    // --- modality primitives --------------------------------------------

    static MorExpr symf(const MorExpr& f) {
        Node n = base(MorKind::symf, SpaceExpr::sym(f.dom()), SpaceExpr::sym(f.cod()));
        n.args = {f};
        return MorExpr(std::move(n));
    }
    static MorExpr eta(const SpaceExpr& a) { return prim(MorKind::eta, a, a, SpaceExpr::sym(a)); }
    static MorExpr mu(const SpaceExpr& a) {
        return prim(MorKind::mu, a, SpaceExpr::sym(SpaceExpr::sym(a)), SpaceExpr::sym(a));
    }
    static MorExpr mult(const SpaceExpr& a) {
        auto s = SpaceExpr::sym(a);
        return prim(MorKind::mult, a, SpaceExpr::tensor(s, s), s);
    }
    static MorExpr unit(const SpaceExpr& a) { return prim(MorKind::unit, a, SpaceExpr::unit(), SpaceExpr::sym(a)); }
    static MorExpr deriv(const SpaceExpr& a) {
        auto s = SpaceExpr::sym(a);
        return prim(MorKind::deriv, a, s, SpaceExpr::tensor(s, a));
    }

    /// Seely map S(a) ⊗ S(b) → S(a ⊕ b).
    static MorExpr chi(const SpaceExpr& a, const SpaceExpr& b) {
        Node n = base(MorKind::chi, SpaceExpr::tensor(SpaceExpr::sym(a), SpaceExpr::sym(b)),
                      SpaceExpr::sym(SpaceExpr::sum(a, b)));
        n.spaces = {a, b};
        return MorExpr(std::move(n));
    }
    static MorExpr chi_inv(const SpaceExpr& a, const SpaceExpr& b) {
        Node n = base(MorKind::chi_inv, SpaceExpr::sym(SpaceExpr::sum(a, b)),
                      SpaceExpr::tensor(SpaceExpr::sym(a), SpaceExpr::sym(b)));
        n.spaces = {a, b};
        return MorExpr(std::move(n));
    }
    static MorExpr chi0() { return make(MorKind::chi0, SpaceExpr::unit(), SpaceExpr::sym(SpaceExpr::zero())); }
    static MorExpr chi0_inv() { return make(MorKind::chi0_inv, SpaceExpr::sym(SpaceExpr::zero()), SpaceExpr::unit()); }

    // --- derived primitives ---------------------------------------------

    /// S-algebra structure S(A) → A obtained by folding a multiplication m: A⊗A→A with unit u: I→A.
    static MorExpr fold(const MorExpr& m, const MorExpr& u) {
        const SpaceExpr& a = u.cod();
        if (!(u.dom() == SpaceExpr::unit())) throw rejected_input("fold: unit must start at I");
        if (!(m.dom() == SpaceExpr::tensor(a, a)) || !(m.cod() == a))
            throw rejected_input("fold: multiplication has type " + m.signature());
        Node n = base(MorKind::fold, SpaceExpr::sym(a), a);
        n.args = {m, u};
        return MorExpr(std::move(n));
    }

    /// Distributivity X1 ⊗ … ⊗ Xn → ⊕ over choices of summands, in lexicographic order.
    static MorExpr distribute(const SpaceExpr& s) { return distribute(default_groups(s)); }
    /// Same, with factor i given as the sum of groups[i] (keeps nested sums grouped).
    static MorExpr distribute(const std::vector<std::vector<SpaceExpr>>& groups) {
        Node n = distribution_node(MorKind::distribute, groups);
        n.dom = tensor_of_groups(groups);
        n.cod = SpaceExpr::sum(n.spaces);
        return MorExpr(std::move(n));
    }
    static MorExpr undistribute(const SpaceExpr& s) { return undistribute(default_groups(s)); }
    static MorExpr undistribute(const std::vector<std::vector<SpaceExpr>>& groups) {
        Node n = distribution_node(MorKind::undistribute, groups);
        n.dom = SpaceExpr::sum(n.spaces);
        n.cod = tensor_of_groups(groups);
        return MorExpr(std::move(n));
    }

    /// Mutant of chi_inv that loses the second-summand part of each monomial.
    static MorExpr chi_inv_split(const SpaceExpr& a, const SpaceExpr& b) {
        MorExpr m = chi_inv(a, b);
        Node n = *m.n_;
        n.kind = MorKind::chi_inv_split;
        return MorExpr(std::move(n));
    }

    [[nodiscard]] std::string signature() const { return dom().str() + " → " + cod().str(); }

    /// Compact human-readable form.
    [[nodiscard]] std::string str() const {
        const Node& n = *n_;
        auto sub = [](const SpaceExpr& s) { return "_{" + s.str() + "}"; };
        switch (n.kind) {
        case MorKind::id: return "1" + sub(n.dom);
        case MorKind::compose: return n.args[0].str() + " ∘ " + n.args[1].str();
        case MorKind::tensor: return "(" + n.args[0].str() + " ⊗ " + n.args[1].str() + ")";
        case MorKind::sum: return "(" + n.args[0].str() + " ⊕ " + n.args[1].str() + ")";
        case MorKind::add: return "(" + n.args[0].str() + " + " + n.args[1].str() + ")";
        case MorKind::zero: return "0";
        case MorKind::scale: return n.scalar.str() + "·(" + n.args[0].str() + ")";
        case MorKind::sigma: return "σ";
        case MorKind::inj: return "inj" + std::to_string(n.index);
        case MorKind::proj: return "proj" + std::to_string(n.index);
        case MorKind::matrix: {
            std::string s = "[";
            for (std::size_t i = 0; i < n.rows; ++i) {
                if (i) s += "; ";
                for (std::size_t j = 0; j < n.cols; ++j) s += (j ? ", " : "") + n.args[i * n.cols + j].str();
            }
            return s + "]";
        }
        case MorKind::linear: return "L" + sub(n.dom);
        case MorKind::symf: return "S(" + n.args[0].str() + ")";
        case MorKind::eta: return "η" + sub(n.spaces[0]);
        case MorKind::mu: return "μ" + sub(n.spaces[0]);
        case MorKind::mult: return "m" + sub(n.spaces[0]);
        case MorKind::unit: return "u" + sub(n.spaces[0]);
        case MorKind::deriv: return "d" + sub(n.spaces[0]);
        case MorKind::chi: return "χ";
        case MorKind::chi_inv: return "χ⁻¹";
        case MorKind::chi0: return "χ₀";
        case MorKind::chi0_inv: return "χ₀⁻¹";
        case MorKind::fold: return "fold(" + n.args[0].str() + ")";
        case MorKind::distribute: return "dist";
        case MorKind::undistribute: return "undist";
        case MorKind::chi_inv_split: return "χ⁻¹'";
        }
        return "?";
    }

private:
    explicit MorExpr(Node n) : n_(std::make_shared<const Node>(std::move(n))) {}

    static Node base(MorKind k, SpaceExpr dom, SpaceExpr cod) {
        Node n;
        n.kind = k;
        n.dom = std::move(dom);
        n.cod = std::move(cod);
        return n;
    }
    static MorExpr make(MorKind k, SpaceExpr dom, SpaceExpr cod) { return MorExpr(base(k, std::move(dom), std::move(cod))); }
    static MorExpr prim(MorKind k, const SpaceExpr& a, SpaceExpr dom, SpaceExpr cod) {
        Node n = base(k, std::move(dom), std::move(cod));
        n.spaces = {a};
        return MorExpr(std::move(n));
    }

    static std::vector<std::vector<SpaceExpr>> default_groups(const SpaceExpr& s) {
        std::vector<std::vector<SpaceExpr>> g;
        for (const auto& f : tensor_factors(s)) g.push_back(summands(f));
        return g;
    }
    static SpaceExpr tensor_of_groups(const std::vector<std::vector<SpaceExpr>>& groups) {
        std::vector<SpaceExpr> fs;
        for (const auto& g : groups) fs.push_back(SpaceExpr::sum(g));
        return SpaceExpr::tensor(fs);
    }
    /// groups[0] holds the factors; groups[i + 1] the summand list of factor i; spaces the distributed parts.
    static Node distribution_node(MorKind k, const std::vector<std::vector<SpaceExpr>>& groups) {
        Node n;
        n.kind = k;
        std::vector<SpaceExpr> factors;
        for (const auto& g : groups) factors.push_back(SpaceExpr::sum(g));
        n.groups.push_back(factors);
        n.groups.insert(n.groups.end(), groups.begin(), groups.end());
        for (const auto& g : groups)
            if (g.empty()) return n;
        std::vector<std::size_t> pick(groups.size(), 0);
        while (true) {
            std::vector<SpaceExpr> chosen;
            for (std::size_t i = 0; i < groups.size(); ++i) chosen.push_back(groups[i][pick[i]]);
            n.spaces.push_back(SpaceExpr::tensor(chosen));
            std::size_t i = groups.size();
            while (i > 0 && ++pick[i - 1] == groups[i - 1].size()) pick[--i] = 0;
            if (i == 0) return n;
        }
    }

    std::shared_ptr<const Node> n_;
};

inline MorExpr compose(const MorExpr& g, const MorExpr& f) { return MorExpr::compose(g, f); }

/// chain({h, g, f}) = h ∘ g ∘ f
inline MorExpr chain(const std::vector<MorExpr>& fs) {
    if (fs.empty()) throw rejected_input("chain: empty composite");
    MorExpr r = fs.back();
    for (std::size_t i = fs.size() - 1; i-- > 0;) r = MorExpr::compose(fs[i], r);
    return r;
}

inline MorExpr operator+(const MorExpr& f, const MorExpr& g) { return MorExpr::add(f, g); }

/// Matrix with rational entries: column j is the image of the j-th basis vector of dom.
inline MorExpr linear_map_from_matrix(const SpaceExpr& dom, const SpaceExpr& cod,
                                      const std::vector<std::vector<Rational>>& entries) {
    if (!dom.sym_free() || !cod.sym_free()) throw rejected_input("linear_map_from_matrix needs Sym-free spaces");
    auto db = enumerate_basis(dom, 0);
    auto cb = enumerate_basis(cod, 0);
    if (entries.size() != cb.size())
        throw rejected_input("matrix has " + std::to_string(entries.size()) + " rows, codomain rank is " +
                             std::to_string(cb.size()));
    MorExpr::Images images;
    for (std::size_t j = 0; j < db.size(); ++j) {
        Element col(cod);
        for (std::size_t i = 0; i < cb.size(); ++i) {
            if (entries[i].size() != db.size())
                throw rejected_input("matrix row " + std::to_string(i) + " has " + std::to_string(entries[i].size()) +
                                     " columns, domain rank is " + std::to_string(db.size()));
            col.add_term(cb[i], entries[i][j]);
        }
        images.emplace(db[j], std::move(col));
    }
    return MorExpr::linear(dom, cod, std::move(images));
}

// --- evaluation ------------------------------------------------------------

Element apply(const MorExpr& m, const Element& v);

namespace detail {

inline BasisVector merge_monomials(const BasisVector& p, const BasisVector& q) {
    std::vector<BasisVector> k = p.kids();
    k.insert(k.end(), q.kids().begin(), q.kids().end());
    return BasisVector::mon(std::move(k));
}

/// Product in S(B) of degree-one factors given as elements of B.
inline Element sym_product(const SpaceExpr& sym_space, const std::vector<Element>& factors) {
    Element acc = Element::basis(sym_space, BasisVector::mon({}));
    for (const auto& f : factors) {
        Element next(sym_space);
        for (const auto& [mon, c] : acc.terms())
            for (const auto& [y, d] : f.terms()) {
                std::vector<BasisVector> k = mon.kids();
                k.push_back(y);
                next.add_term(BasisVector::mon(std::move(k)), c * d);
            }
        acc = std::move(next);
        if (acc.is_zero()) break;
    }
    return acc;
}

}  // namespace detail

/// Image of a single basis vector of dom(m).
inline Element apply_basis(const MorExpr& m, const BasisVector& b) {
    const auto& n = m.node();
    switch (n.kind) {
    case MorKind::id: return Element::basis(n.cod, b);
    case MorKind::compose: return apply(n.args[0], apply_basis(n.args[1], b));
    case MorKind::tensor: {
        auto parts = split_tensor(b, {n.args[0].dom(), n.args[1].dom()});
        return elem_tensor(apply_basis(n.args[0], parts[0]), apply_basis(n.args[1], parts[1]));
    }
    case MorKind::sum: {
        auto [p, inner] = split_sum(b, {n.args[0].dom(), n.args[1].dom()});
        Element r = apply_basis(n.args[p], inner);
        const std::vector<SpaceExpr> cparts{n.args[0].cod(), n.args[1].cod()};
        Element out(n.cod);
        for (const auto& [y, c] : r.terms()) out.add_term(join_sum(cparts, p, y), c);
        return out;
    }
    case MorKind::add: return apply_basis(n.args[0], b) + apply_basis(n.args[1], b);
    case MorKind::zero: return Element(n.cod);
    case MorKind::scale: return elem_scale(n.scalar, apply_basis(n.args[0], b));
    case MorKind::sigma: {
        auto parts = split_tensor(b, {n.spaces[0], n.spaces[1]});
        return Element::basis(n.cod, join_tensor({n.spaces[1], n.spaces[0]}, {parts[1], parts[0]}));
    }
    case MorKind::inj: return Element::basis(n.cod, join_sum(n.spaces, n.index, b));
    case MorKind::proj: {
        auto [p, inner] = split_sum(b, n.spaces);
        if (p != n.index) return Element(n.cod);
        return Element::basis(n.cod, inner);
    }
    case MorKind::matrix: {
        const auto& dparts = n.groups[0];
        const auto& cparts = n.groups[1];
        auto [j, inner] = split_sum(b, dparts);
        Element out(n.cod);
        for (std::size_t i = 0; i < n.rows; ++i) {
            Element r = apply_basis(n.args[i * n.cols + j], inner);
            for (const auto& [y, c] : r.terms()) out.add_term(join_sum(cparts, i, y), c);
        }
        return out;
    }
    case MorKind::linear: {
        auto it = n.images->find(b);
        return it == n.images->end() ? Element(n.cod) : it->second;
    }
    case MorKind::symf: {
        std::vector<Element> fs;
        for (const auto& k : b.kids()) fs.push_back(apply_basis(n.args[0], k));
        return detail::sym_product(n.cod, fs);
    }
    case MorKind::eta: return Element::basis(n.cod, BasisVector::mon({b}));
    case MorKind::mu: {
        std::vector<BasisVector> all;
        for (const auto& inner : b.kids()) all.insert(all.end(), inner.kids().begin(), inner.kids().end());
        return Element::basis(n.cod, BasisVector::mon(std::move(all)));
    }
    case MorKind::mult: {
        auto s = SpaceExpr::sym(n.spaces[0]);
        auto pq = split_tensor(b, {s, s});
        return Element::basis(n.cod, detail::merge_monomials(pq[0], pq[1]));
    }
    case MorKind::unit: return Element::basis(n.cod, BasisVector::mon({}));
    case MorKind::deriv: {
        const std::vector<SpaceExpr> parts{n.dom, n.spaces[0]};
        Element out(n.cod);
        const auto& k = b.kids();
        for (std::size_t i = 0; i < k.size(); ++i) {
            std::vector<BasisVector> rest;
            rest.reserve(k.size() - 1);
            for (std::size_t j = 0; j < k.size(); ++j)
                if (j != i) rest.push_back(k[j]);
            out.add_term(join_tensor(parts, {BasisVector::mon(std::move(rest)), k[i]}), Rational(1));
        }
        return out;
    }
    case MorKind::chi: {
        const auto& a = n.spaces[0];
        const auto& c = n.spaces[1];
        auto pq = split_tensor(b, {SpaceExpr::sym(a), SpaceExpr::sym(c)});
        std::vector<BasisVector> k;
        for (const auto& x : pq[0].kids()) k.push_back(join_sum(n.spaces, 0, x));
        for (const auto& y : pq[1].kids()) k.push_back(join_sum(n.spaces, 1, y));
        return Element::basis(n.cod, BasisVector::mon(std::move(k)));
    }
    case MorKind::chi_inv:
    case MorKind::chi_inv_split: {
        std::vector<BasisVector> left, right;
        for (const auto& g : b.kids()) {
            auto [p, inner] = split_sum(g, n.spaces);
            (p == 0 ? left : right).push_back(inner);
        }
        if (n.kind == MorKind::chi_inv_split) right.clear();
        return Element::basis(n.cod, join_tensor({SpaceExpr::sym(n.spaces[0]), SpaceExpr::sym(n.spaces[1])},
                                                 {BasisVector::mon(std::move(left)), BasisVector::mon(std::move(right))}));
    }
    case MorKind::chi0: return Element::basis(n.cod, BasisVector::mon({}));
    case MorKind::chi0_inv: return Element::basis(n.cod, BasisVector::unit());
    case MorKind::fold: {
        const MorExpr& mul = n.args[0];
        if (b.kids().empty()) return apply_basis(n.args[1], BasisVector::unit());
        Element acc = Element::basis(n.cod, b.kids().front());
        for (std::size_t i = 1; i < b.kids().size(); ++i)
            acc = apply(mul, elem_tensor(acc, Element::basis(n.cod, b.kids()[i])));
        return acc;
    }
    case MorKind::distribute: {
        const auto& factors = n.groups[0];
        auto comps = split_tensor(b, factors);
        std::size_t pos = 0;
        std::vector<SpaceExpr> chosen;
        std::vector<BasisVector> inners;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const auto& opts = n.groups[i + 1];
            auto [br, inner] = split_sum(comps[i], opts);
            pos = pos * opts.size() + br;
            chosen.push_back(opts[br]);
            inners.push_back(std::move(inner));
        }
        return Element::basis(n.cod, join_sum(n.spaces, pos, join_tensor(chosen, inners)));
    }
    case MorKind::undistribute: {
        const auto& factors = n.groups[0];
        auto [pos, inner] = split_sum(b, n.spaces);
        std::vector<std::size_t> pick(factors.size());
        for (std::size_t i = factors.size(); i-- > 0;) {
            pick[i] = pos % n.groups[i + 1].size();
            pos /= n.groups[i + 1].size();
        }
        std::vector<SpaceExpr> chosen;
        for (std::size_t i = 0; i < factors.size(); ++i) chosen.push_back(n.groups[i + 1][pick[i]]);
        auto parts = split_tensor(inner, chosen);
        std::vector<BasisVector> comps;
        for (std::size_t i = 0; i < factors.size(); ++i) comps.push_back(join_sum(n.groups[i + 1], pick[i], parts[i]));
        return Element::basis(n.cod, join_tensor(factors, comps));
    }
    }
    throw rejected_input("apply: unknown morphism kind");
}

inline Element apply(const MorExpr& m, const Element& v) {
    if (!(v.space() == m.dom()))
        throw rejected_input("apply: element of " + v.space().str() + " given to map on " + m.dom().str());
    Element out(m.cod());
    for (const auto& [b, c] : v.terms()) out.add_scaled(apply_basis(m, b), c);
    return out;
}

}  // namespace dcat
