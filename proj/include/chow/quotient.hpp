#pragma once

#include <map>
#include <vector>

#include "dimension.hpp"
#include "handle.hpp"
#include "univariate.hpp"

namespace chow {

// Monomial basis of the finite-dimensional quotient ring k[x]/I together with
// the Groebner data needed to compute coordinates of normal forms.
struct QuotientBasis {
    RingPtr ring;
    std::vector<Polynomial> gb;
    MonomialOrder ord;
    std::vector<Monomial> basis;
    std::map<Monomial, std::size_t, CanonicalMonoLess> index;

    std::size_t dim() const { return basis.size(); }

    // Coordinates of a polynomial already in normal form.
    std::vector<Rat> coordinates(const Polynomial& nf) const {
        std::vector<Rat> v(basis.size(), Rat(0));
        for (const auto& [m, c] : nf.terms()) {
            auto it = index.find(m);
            if (it == index.end()) throw consistency_error("coordinates: term not in basis");
            v[it->second] = c;
        }
        return v;
    }

    Polynomial reduce(const Polynomial& f) const { return normal_form(f, gb, ord); }
};

inline QuotientBasis make_quotient_basis(const IdealHandle& I) {
    if (!is_zero_dimensional(I)) throw std::invalid_argument("quotient basis needs a zero-dimensional ideal");
    QuotientBasis Q;
    Q.ring = I.ring();
    Q.ord = grevlex_order();
    Q.gb = I.groebner(Q.ord);
    Q.basis = standard_monomials(I);
    for (std::size_t i = 0; i < Q.basis.size(); ++i) Q.index.emplace(Q.basis[i], i);
    return Q;
}

// Monic minimal polynomial of theta acting on k[x]/I, found by reducing the
// vectors 1, theta, theta^2, ... to row echelon form until they go dependent.
inline UniPoly minimal_polynomial(const QuotientBasis& Q, const Polynomial& theta) {
    struct Row {
        std::vector<Rat> vec;   // length = quotient dimension, 1 at pivot
        std::vector<Rat> expr;  // combination of theta powers this row equals
        std::size_t pivot;
    };
    std::vector<Row> rows;
    Polynomial power = Polynomial::constant(Q.ring, Rat(1));
    for (std::size_t k = 0;; ++k) {
        if (k) power = Q.reduce(power * theta);
        std::vector<Rat> v = Q.coordinates(power);
        std::vector<Rat> expr(k + 1, Rat(0));
        expr[k] = 1;
        for (const auto& row : rows) {
            Rat c = v[row.pivot];
            if (c == 0) continue;
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * row.vec[i];
            for (std::size_t i = 0; i < row.expr.size(); ++i) expr[i] -= c * row.expr[i];
        }
        std::size_t piv = v.size();
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) {
                piv = i;
                break;
            }
        if (piv == v.size()) {
            uni_trim(expr);  // monic of degree k: earlier rows touch indices < k only
            return expr;
        }
        if (k == Q.dim()) throw consistency_error("minimal polynomial exceeded quotient dimension");
        Rat inv = Rat(1) / v[piv];
        for (auto& c : v) c *= inv;
        for (auto& c : expr) c *= inv;
        // Keep earlier rows reduced at the new pivot so reduction order never matters.
        for (auto& row : rows) {
            Rat c = row.vec[piv];
            if (c == 0) continue;
            for (std::size_t i = 0; i < v.size(); ++i) row.vec[i] -= c * v[i];
            row.expr.resize(std::max(row.expr.size(), expr.size()), Rat(0));
            for (std::size_t i = 0; i < expr.size(); ++i) row.expr[i] -= c * expr[i];
        }
        rows.push_back(Row{std::move(v), std::move(expr), piv});
    }
}

// Exact dense linear solver over Q (Gauss-Jordan on an augmented inverse),
// factored once and reused across right-hand sides.
struct ExactSolver {
    std::vector<std::vector<Rat>> inv;  // the inverse matrix

    explicit ExactSolver(std::vector<std::vector<Rat>> m) {
        std::size_t n = m.size();
        inv.assign(n, std::vector<Rat>(n, Rat(0)));
        for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (piv < n && m[piv][col] == 0) ++piv;
            if (piv == n) throw consistency_error("singular matrix in exact solve");
            std::swap(m[piv], m[col]);
            std::swap(inv[piv], inv[col]);
            Rat s = Rat(1) / m[col][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[col][j] *= s;
                inv[col][j] *= s;
            }
            for (std::size_t r = 0; r < n; ++r) {
                if (r == col) continue;
                Rat c = m[r][col];
                if (c == 0) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    m[r][j] -= c * m[col][j];
                    inv[r][j] -= c * inv[col][j];
                }
            }
        }
    }

    std::vector<Rat> solve(const std::vector<Rat>& rhs) const {
        std::size_t n = inv.size();
        std::vector<Rat> x(n, Rat(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) x[i] += inv[i][j] * rhs[j];
        return x;
    }
};

}  // namespace chow
