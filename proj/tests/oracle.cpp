#include "oracle.hpp"

#include "dcat/basis.hpp"

namespace oracle {

Poly monomial(std::size_t nvars, const Exps& e, const Rational& c) {
    Exps x = e;
    x.resize(nvars, 0);
    Poly p;
    if (!c.is_zero()) p[x] = c;
    return p;
}

Poly add(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [e, c] : b) {
        out[e] += c;
        if (out[e].is_zero()) out.erase(e);
    }
    return out;
}

Poly mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exps e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
            if (out[e].is_zero()) out.erase(e);
        }
    return out;
}

Poly partial(const Poly& p, std::size_t k) {
    Poly out;
    for (const auto& [e, c] : p) {
        if (e[k] == 0) continue;
        Exps f = e;
        --f[k];
        out[f] += c * Rational(static_cast<long long>(e[k]));
    }
    return out;
}

Poly substitute(const Poly& p, const Matrix& L) {
    const std::size_t m = L.size();
    Poly out;
    for (const auto& [e, c] : p) {
        Poly term = monomial(m, {}, c);
        for (std::size_t j = 0; j < e.size(); ++j) {
            Poly lin;
            for (std::size_t i = 0; i < m; ++i) {
                Exps u(m, 0);
                u[i] = 1;
                lin = add(lin, monomial(m, u, L[i][j]));
            }
            for (unsigned t = 0; t < e[j]; ++t) term = mul(term, lin);
        }
        out = add(out, term);
    }
    return out;
}

dcat::Element to_element(const Poly& p, const dcat::SpaceExpr& v) {
    dcat::Element out(dcat::SpaceExpr::sym(v));
    for (const auto& [e, c] : p) {
        std::vector<dcat::BasisVector> fs;
        for (std::size_t k = 0; k < e.size(); ++k)
            for (unsigned t = 0; t < e[k]; ++t) fs.push_back(dcat::BasisVector::gen(k + 1));
        out.add_term(dcat::BasisVector::mon(fs), c);
    }
    return out;
}

Poly from_element(const dcat::Element& el, std::size_t nvars) {
    Poly out;
    for (const auto& [b, c] : el.terms()) {
        Exps e(nvars, 0);
        for (const auto& g : b.kids()) ++e[g.index() - 1];
        out = add(out, monomial(nvars, e, c));
    }
    return out;
}

dcat::Element differential(const Poly& p, const dcat::SpaceExpr& v) {
    const auto sv = dcat::SpaceExpr::sym(v);
    dcat::Element out(dcat::SpaceExpr::tensor(sv, v));
    for (std::size_t k = 0; k < v.rank(); ++k) {
        dcat::Element dk = to_element(partial(p, k), v);
        out += dcat::elem_tensor(dk, dcat::Element::basis(v, dcat::BasisVector::gen(k + 1)));
    }
    return out;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    Matrix out(a.size(), std::vector<Rational>(b.empty() ? 0 : b[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < out[i].size(); ++j)
            for (std::size_t k = 0; k < b.size(); ++k) out[i][j] += a[i][k] * b[k][j];
    return out;
}

Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
    Matrix m(rows, std::vector<Rational>(cols));
    for (auto& r : m)
        for (auto& x : r) x = Rational(num(rng), den(rng));
    return m;
}

Poly random_poly(std::size_t nvars, std::size_t max_degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<std::size_t> terms(1, 4);
    Poly p;
    const std::size_t n = terms(rng);
    for (std::size_t t = 0; t < n; ++t) {
        Exps e(nvars, 0);
        std::uniform_int_distribution<std::size_t> deg(0, max_degree);
        std::size_t d = deg(rng);
        std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
        for (std::size_t i = 0; i < d; ++i) ++e[var(rng)];
        p = add(p, monomial(nvars, e, Rational(coeff(rng))));
    }
    return p;
}

std::size_t monomial_count(std::size_t n, std::size_t d) {
    // C(n + d, d) computed multiplicatively; exact for the small sizes used here.
    std::size_t r = 1;
    for (std::size_t i = 1; i <= d; ++i) r = r * (n + i) / i;
    return r;
}

}  // namespace oracle
