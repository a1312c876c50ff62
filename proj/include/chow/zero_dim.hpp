#pragma once

#include <vector>

#include "quotient.hpp"

namespace chow {

// A zero-dimensional ideal is radical exactly when the minimal polynomial of
// every variable is squarefree; adjoining the squarefree parts cuts the ideal
// down to its radical.

inline bool is_radical_zero_dim(const IdealHandle& I) {
    if (I.is_unit()) return true;
    QuotientBasis Q = make_quotient_basis(I);
    for (std::size_t i = 0; i < I.ring()->vars.size(); ++i) {
        UniPoly m = minimal_polynomial(Q, Polynomial::variable(I.ring(), i));
        if (uni_deg(uni_gcd(m, uni_derivative(m))) > 0) return false;
    }
    return true;
}

inline IdealHandle radical_zero_dim(const IdealHandle& I) {
    if (I.is_unit()) return I;
    QuotientBasis Q = make_quotient_basis(I);
    std::vector<Polynomial> extra;
    for (std::size_t i = 0; i < I.ring()->vars.size(); ++i) {
        UniPoly m = minimal_polynomial(Q, Polynomial::variable(I.ring(), i));
        UniPoly s = uni_squarefree_part(m);
        if (uni_deg(s) < uni_deg(m)) extra.push_back(uni_to_poly(s, I.ring(), i));
    }
    if (extra.empty()) return I;  // already radical, keep the cached handle
    std::vector<Polynomial> gens = I.gens();
    for (auto& f : extra) gens.push_back(std::move(f));
    return IdealHandle(I.ring(), gens);
}

}  // namespace chow
