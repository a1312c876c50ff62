#pragma once

#include <vector>

#include "polynomial.hpp"

namespace chow {

// Dense univariate polynomial over Q, coefficients low to high, no trailing zeros.
using UniPoly = std::vector<Rat>;

inline void uni_trim(UniPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline long uni_deg(const UniPoly& f) { return (long)f.size() - 1; }  // -1 for zero

inline UniPoly uni_add(const UniPoly& a, const UniPoly& b) {
    UniPoly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    uni_trim(r);
    return r;
}

inline UniPoly uni_sub(const UniPoly& a, const UniPoly& b) {
    UniPoly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    uni_trim(r);
    return r;
}

inline UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    uni_trim(r);
    return r;
}

inline UniPoly uni_scale(const UniPoly& a, const Rat& c) {
    if (c == 0) return {};
    UniPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

// Quotient and remainder; b nonzero.
inline std::pair<UniPoly, UniPoly> uni_divmod(UniPoly a, const UniPoly& b) {
    if (b.empty()) throw std::invalid_argument("uni_divmod: division by zero");
    UniPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
    while (a.size() >= b.size()) {
        Rat c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        uni_trim(a);  // the leading coefficient cancels exactly
    }
    uni_trim(q);
    return {q, a};
}

inline UniPoly uni_mod(const UniPoly& a, const UniPoly& b) { return uni_divmod(a, b).second; }

inline UniPoly uni_monic(UniPoly f) {
    uni_trim(f);
    if (f.empty()) return f;
    Rat lc = f.back();
    for (auto& c : f) c /= lc;
    return f;
}

inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        UniPoly r = uni_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return uni_monic(a);
}

inline UniPoly uni_derivative(const UniPoly& f) {
    UniPoly r;
    for (std::size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * (long)i);
    uni_trim(r);
    return r;
}

inline UniPoly uni_squarefree_part(const UniPoly& f) {
    if (uni_deg(f) < 1) return uni_monic(f);
    UniPoly g = uni_gcd(f, uni_derivative(f));
    return uni_monic(uni_divmod(f, g).first);
}

inline Rat uni_eval(const UniPoly& f, const Rat& x) {
    Rat r = 0;
    for (std::size_t i = f.size(); i-- > 0;) r = r * x + f[i];
    return r;
}

// Multivariate image c_k * v^k under a chosen ring variable.
inline Polynomial uni_to_poly(const UniPoly& f, const RingPtr& ring, std::size_t var) {
    Polynomial p(ring);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        Monomial m(ring->size(), 0);
        m[var] = (unsigned)i;
        p.add_term(m, f[i]);
    }
    return p;
}

// Inverse of uni_to_poly; requires p univariate in the given variable.
inline UniPoly poly_to_uni(const Polynomial& p, std::size_t var) {
    UniPoly f;
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != var && m[i]) throw std::invalid_argument("poly_to_uni: not univariate");
        if (f.size() <= m[var]) f.resize(m[var] + 1, Rat(0));
        f[m[var]] = c;
    }
    uni_trim(f);
    return f;
}

// Primitive integer scaling of a nonzero rational polynomial, lc > 0.
inline std::vector<Int> uni_primitive_z(const UniPoly& f) {
    Int den = 1, num = 0;
    for (const auto& c : f) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num().get_mpz_t());
    }
    Rat scale(den, num);
    scale.canonicalize();
    if (f.back() < 0) scale = -scale;
    std::vector<Int> out;
    for (const auto& c : f) out.push_back(to_int_exact(c * scale));
    return out;
}

inline std::string uni_to_string(const UniPoly& f, const std::string& var) {
    RingPtr r = make_ring({var});
    return uni_to_poly(f, r, 0).to_string();
}

// Modular inverse of f mod g in Q[x] (g squarefree contexts); extended Euclid.
inline UniPoly uni_invmod(const UniPoly& f, const UniPoly& g) {
    UniPoly r0 = g, r1 = uni_mod(f, g);
    UniPoly s0 = {}, s1 = {Rat(1)};
    while (!r1.empty()) {
        auto [q, r2] = uni_divmod(r0, r1);
        UniPoly s2 = uni_sub(s0, uni_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (uni_deg(r0) != 0) throw std::invalid_argument("uni_invmod: not invertible");
    return uni_mod(uni_scale(s0, Rat(1) / r0[0]), g);
}

}  // namespace chow
