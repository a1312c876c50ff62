#pragma once

#include <vector>

#include "factor.hpp"
#include "quotient.hpp"
#include "scalars.hpp"
#include "zero_dim.hpp"

namespace chow {

// Rational univariate representation of a zero-dimensional radical ideal: a
// separating linear form theta with monic squarefree minimal polynomial R and
// coordinate numerators A_i, so that the points are
//   x_i = A_i(theta) / R'(theta),  R(theta) = 0.
struct RURPoints {
    UniPoly R;
    UniPoly Rprime;
    std::vector<UniPoly> A;  // one per geometric variable
    Polynomial separating;
    RingPtr ring;
    long dimension_tag = -1;  // component dimension the cluster was sampled at

    std::size_t point_count() const { return (std::size_t)uni_deg(R); }
};

// Builds the representation, retrying the random linear form until it
// separates (degree of its minimal polynomial equals the quotient dimension).
inline RURPoints rur_construct(const IdealHandle& I, GenericScalarSource& src) {
    QuotientBasis Q = make_quotient_basis(I);
    std::size_t D = Q.dim();
    if (D == 0) throw std::invalid_argument("rur_construct: empty point set");
    ++work().rur_builds;

    Polynomial theta(I.ring());
    UniPoly R;
    bool found = false;
    for (int attempt = 0; attempt <= src.max_retries && !found; ++attempt) {
        GenericScalarSource s = src.fork("separating", (std::uint64_t)attempt);
        theta = random_linear_form(I.ring(), s);
        R = minimal_polynomial(Q, theta);
        found = (std::size_t)uni_deg(R) == D;
    }
    if (!found) throw genericity_error("no separating linear form found");
    UniPoly Rp = uni_derivative(R);
    if (uni_deg(uni_gcd(R, Rp)) > 0)
        throw consistency_error("rur_construct: minimal polynomial not squarefree (input not radical)");

    // Coordinates of the theta-power basis, then one exact solve per variable.
    std::vector<Polynomial> powers;
    powers.push_back(Polynomial::constant(I.ring(), Rat(1)));
    for (std::size_t k = 1; k < D; ++k) powers.push_back(Q.reduce(powers.back() * theta));
    std::vector<std::vector<Rat>> V(D, std::vector<Rat>(D, Rat(0)));
    for (std::size_t k = 0; k < D; ++k) {
        std::vector<Rat> col = Q.coordinates(powers[k]);
        for (std::size_t r = 0; r < D; ++r) V[r][k] = col[r];
    }
    ExactSolver solver(std::move(V));

    Polynomial rp_theta(I.ring());
    for (std::size_t k = 0; k < Rp.size(); ++k)
        if (Rp[k] != 0) rp_theta += powers[k] * Rp[k];

    RURPoints out;
    out.R = std::move(R);
    out.Rprime = std::move(Rp);
    out.separating = theta;
    out.ring = I.ring();
    for (std::size_t i = 0; i < I.ring()->geometric; ++i) {
        Polynomial rhs = Q.reduce(Polynomial::variable(I.ring(), i) * rp_theta);
        UniPoly a = solver.solve(Q.coordinates(rhs));
        uni_trim(a);
        out.A.push_back(std::move(a));
    }
    return out;
}

// Residue of a polynomial at the represented points: each x_i becomes
// A_i/R', cleared of denominators by R'^(deg f). Zero exactly when f vanishes
// at every point of the cluster.
inline UniPoly evaluate_mod_univariate(const Polynomial& f, const RURPoints& rur) {
    for (std::size_t i = rur.ring->geometric; i < rur.ring->vars.size(); ++i)
        if (f.uses_var(i)) throw std::invalid_argument("evaluate_mod_univariate: auxiliary variable present");
    long degf = f.degree();
    if (degf < 0) return {};
    UniPoly acc;
    for (const auto& [m, c] : f.terms()) {
        UniPoly term{c};
        long total = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (unsigned e = 0; e < m[i]; ++e) term = uni_mod(uni_mul(term, rur.A[i]), rur.R);
            total += (long)m[i];
        }
        for (long e = total; e < degf; ++e) term = uni_mod(uni_mul(term, rur.Rprime), rur.R);
        acc = uni_add(acc, term);
    }
    return uni_mod(acc, rur.R);
}

inline bool vanishes_on_cluster(const IdealHandle& I, const RURPoints& rur) {
    for (const auto& g : I.gens())
        if (uni_deg(evaluate_mod_univariate(g, rur)) >= 0) return false;
    return true;
}

// Splits a cluster into conjugation-uniform pieces, one per irreducible factor
// R_k of R, renormalizing the numerators to the factor's own derivative:
// B_i = A_i * (R')^{-1} * R_k' mod R_k.
inline std::vector<RURPoints> split_rur(const RURPoints& rur) {
    std::vector<UniPoly> factors = factor_squarefree_monic(rur.R);
    if (factors.size() == 1) return {rur};
    std::vector<RURPoints> out;
    for (const auto& Rk : factors) {
        RURPoints piece;
        piece.R = Rk;
        piece.Rprime = uni_derivative(Rk);
        piece.separating = rur.separating;
        piece.ring = rur.ring;
        piece.dimension_tag = rur.dimension_tag;
        UniPoly inv = uni_invmod(uni_mod(rur.Rprime, Rk), Rk);
        UniPoly scale = uni_mod(uni_mul(inv, piece.Rprime), Rk);
        for (const auto& a : rur.A) piece.A.push_back(uni_mod(uni_mul(a, scale), Rk));
        out.push_back(std::move(piece));
    }
    return out;
}

// Compose a univariate polynomial with a multivariate argument (Horner).
inline Polynomial compose_uni(const UniPoly& f, const Polynomial& arg) {
    Polynomial r(arg.ring());
    for (std::size_t k = f.size(); k-- > 0;) r = r * arg + Polynomial::constant(arg.ring(), f[k]);
    return r;
}

// Defining equations of the cluster itself, all of degree deg R:
//   R(l(x)),  R'(l(x)) x_i - A_i(l(x)).
inline std::vector<Polynomial> cluster_generators(const RURPoints& rur) {
    std::vector<Polynomial> gens;
    gens.push_back(compose_uni(rur.R, rur.separating));
    Polynomial rp = compose_uni(rur.Rprime, rur.separating);
    for (std::size_t i = 0; i < rur.A.size(); ++i) {
        Polynomial g = rp * Polynomial::variable(rur.ring, i) - compose_uni(rur.A[i], rur.separating);
        gens.push_back(std::move(g));
    }
    return gens;
}

}  // namespace chow
