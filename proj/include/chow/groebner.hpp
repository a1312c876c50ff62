#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "budget.hpp"
#include "polynomial.hpp"

namespace chow {

namespace detail {

// Working form inside the engine: term list sorted descending by the active order.
struct OrdPoly {
    std::vector<std::pair<Monomial, Rat>> t;
    unsigned sugar = 0;

    const Monomial& lm() const { return t.front().first; }
    const Rat& lc() const { return t.front().second; }
    bool zero() const { return t.empty(); }
};

inline OrdPoly to_ord(const Polynomial& p, const MonomialOrder& ord) {
    OrdPoly f;
    f.t.assign(p.terms().begin(), p.terms().end());
    std::sort(f.t.begin(), f.t.end(),
              [&](const auto& a, const auto& b) { return ord.less(b.first, a.first); });
    f.sugar = (unsigned)std::max(0L, p.degree());
    return f;
}

inline Polynomial from_ord(const OrdPoly& f, const RingPtr& ring) {
    Polynomial p(ring);
    for (const auto& [m, c] : f.t) p.add_term(m, c);
    return p;
}

inline void make_primitive_ord(OrdPoly& f) {
    if (f.t.empty()) return;
    Int den = 1, num = 0;
    for (const auto& [m, c] : f.t) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num().get_mpz_t());
    }
    Rat scale(den, num);
    scale.canonicalize();
    if (f.lc() < 0) scale = -scale;
    if (scale != 1)
        for (auto& [m, c] : f.t) c *= scale;
}

// f -= coeff * x^shift * g, keeping descending order. One reduction step.
inline void axpy(OrdPoly& f, const Rat& coeff, const Monomial& shift, const OrdPoly& g,
                 const MonomialOrder& ord) {
    charge_reduction_step();
    std::vector<std::pair<Monomial, Rat>> out;
    out.reserve(f.t.size() + g.t.size());
    std::size_t i = 0, j = 0;
    while (i < f.t.size() || j < g.t.size()) {
        if (j == g.t.size()) {
            out.push_back(std::move(f.t[i++]));
            continue;
        }
        Monomial gm = mono_mul(g.t[j].first, shift);
        if (i == f.t.size()) {
            out.emplace_back(std::move(gm), -coeff * g.t[j].second);
            ++j;
            continue;
        }
        if (f.t[i].first == gm) {
            Rat c = f.t[i].second - coeff * g.t[j].second;
            if (c != 0) out.emplace_back(std::move(gm), std::move(c));
            ++i, ++j;
        } else if (ord.less(gm, f.t[i].first)) {
            out.push_back(std::move(f.t[i++]));
        } else {
            out.emplace_back(std::move(gm), -coeff * g.t[j].second);
            ++j;
        }
    }
    f.t = std::move(out);
    f.sugar = std::max(f.sugar, g.sugar + total_degree(shift));
}

// Full reduction of f modulo basis; remainder has no term divisible by any LM.
inline OrdPoly reduce_full(OrdPoly f, const std::vector<OrdPoly>& basis, const MonomialOrder& ord) {
    std::vector<std::pair<Monomial, Rat>> out;
    while (!f.t.empty()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.zero()) continue;
            if (mono_divides(g.lm(), f.lm())) {
                axpy(f, f.lc() / g.lc(), mono_div(f.lm(), g.lm()), g, ord);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            out.push_back(std::move(f.t.front()));
            f.t.erase(f.t.begin());
        }
    }
    f.t = std::move(out);
    return f;
}

struct SPair {
    std::size_t i, j;
    Monomial lcm;
    unsigned sugar;
};

}  // namespace detail

// Reduced Groebner basis: unique for (ideal, order) up to the primitive
// normalization, elements sorted by ascending leading monomial.
inline std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens,
                                              const MonomialOrder& ord) {
    using namespace detail;
    ++work().groebner_calls;
    RingPtr ring;
    std::vector<OrdPoly> G;
    for (const auto& p : gens) {
        if (p.is_zero()) continue;
        if (!ring) ring = p.ring();
        OrdPoly f = to_ord(p, ord);
        make_primitive_ord(f);
        G.push_back(std::move(f));
    }
    if (!ring) return {};  // zero ideal

    std::vector<SPair> pairs;
    auto add_pairs_for = [&](std::size_t t) {
        // Gebauer-Moeller update for the element just appended at index t.
        std::vector<SPair> fresh;
        for (std::size_t i = 0; i < t; ++i) {
            if (G[i].zero()) continue;
            Monomial l = mono_lcm(G[i].lm(), G[t].lm());
            unsigned sug = std::max(G[i].sugar + total_degree(l) - total_degree(G[i].lm()),
                                    G[t].sugar + total_degree(l) - total_degree(G[t].lm()));
            fresh.push_back({i, t, std::move(l), sug});
        }
        // Drop old pairs killed by the chain criterion through LM(G[t]).
        std::erase_if(pairs, [&](const SPair& p) {
            return mono_divides(G[t].lm(), p.lcm) &&
                   mono_lcm(G[p.i].lm(), G[t].lm()) != p.lcm &&
                   mono_lcm(G[p.j].lm(), G[t].lm()) != p.lcm;
        });
        // Among the fresh pairs keep one representative per lcm-divisibility class.
        std::vector<char> drop(fresh.size(), 0);
        for (std::size_t a = 0; a < fresh.size(); ++a)
            for (std::size_t b = 0; b < fresh.size(); ++b) {
                if (a == b || drop[a] || drop[b]) continue;
                if (fresh[a].lcm == fresh[b].lcm ? a > b
                                                 : mono_divides(fresh[b].lcm, fresh[a].lcm))
                    drop[a] = 1;
            }
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (drop[a]) continue;
            // Buchberger's coprimality criterion.
            if (mono_coprime(G[fresh[a].i].lm(), G[fresh[a].j].lm())) continue;
            pairs.push_back(std::move(fresh[a]));
        }
    };
    for (std::size_t t = 0; t < G.size(); ++t) add_pairs_for(t);

    while (!pairs.empty()) {
        auto best = std::min_element(pairs.begin(), pairs.end(), [&](const SPair& a, const SPair& b) {
            if (a.sugar != b.sugar) return a.sugar < b.sugar;
            if (a.lcm != b.lcm) return ord.less(a.lcm, b.lcm);
            return std::pair(a.i, a.j) < std::pair(b.i, b.j);
        });
        SPair p = *best;
        pairs.erase(best);
        const OrdPoly &f = G[p.i], &g = G[p.j];
        // S-polynomial: shift_f * f - (lc_f/lc_g) shift_g * g.
        OrdPoly sf;
        Monomial shf = mono_div(p.lcm, f.lm());
        for (const auto& [m, c] : f.t) sf.t.emplace_back(mono_mul(m, shf), c);
        axpy(sf, f.lc() / g.lc(), mono_div(p.lcm, g.lm()), g, ord);
        sf.sugar = p.sugar;
        OrdPoly r = reduce_full(std::move(sf), G, ord);
        if (!r.zero()) {
            make_primitive_ord(r);
            G.push_back(std::move(r));
            add_pairs_for(G.size() - 1);
        }
    }

    // Minimalize: drop elements whose LM is divisible by another LM.
    std::vector<char> dead(G.size(), 0);
    for (std::size_t a = 0; a < G.size(); ++a)
        for (std::size_t b = 0; b < G.size(); ++b) {
            if (a == b || dead[a] || dead[b]) continue;
            if (G[a].lm() == G[b].lm() ? a > b : mono_divides(G[b].lm(), G[a].lm())) dead[a] = 1;
        }
    std::vector<OrdPoly> minimal;
    for (std::size_t a = 0; a < G.size(); ++a)
        if (!dead[a]) minimal.push_back(std::move(G[a]));

    // Tail-reduce to the reduced basis.
    std::vector<OrdPoly> reduced = minimal;
    for (std::size_t a = 0; a < reduced.size(); ++a) {
        std::vector<OrdPoly> others;
        for (std::size_t b = 0; b < minimal.size(); ++b)
            if (b != a) others.push_back(minimal[b]);
        reduced[a] = reduce_full(std::move(reduced[a]), others, ord);
        make_primitive_ord(reduced[a]);
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const OrdPoly& a, const OrdPoly& b) { return ord.less(a.lm(), b.lm()); });

    std::vector<Polynomial> out;
    for (const auto& f : reduced) out.push_back(from_ord(f, ring));
    return out;
}

// Remainder of f on division by a Groebner basis; the canonical coset representative.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gb,
                              const MonomialOrder& ord) {
    if (gb.empty() || f.is_zero()) return f;
    std::vector<detail::OrdPoly> basis;
    for (const auto& g : gb) basis.push_back(detail::to_ord(g, ord));
    return detail::from_ord(detail::reduce_full(detail::to_ord(f, ord), basis, ord), f.ring());
}

}  // namespace chow
