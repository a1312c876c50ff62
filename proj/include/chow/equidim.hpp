#pragma once

#include <optional>
#include <vector>

#include "dimension.hpp"
#include "ideal_ops.hpp"

namespace chow {

struct EquidimPiece {
    long dim;
    IdealHandle ideal;
};

// Pieces of strictly descending dimension; their intersection has the same
// radical as the input, and each piece is equidimensional (every associated
// prime of minimal height, all of the stated dimension).
struct EquidimDecomposition {
    std::vector<EquidimPiece> pieces;

    const IdealHandle* piece_of_dim(long d) const {
        for (const auto& p : pieces)
            if (p.dim == d) return &p.ideal;
        return nullptr;
    }
    long top_dim() const { return pieces.empty() ? -1 : pieces.front().dim; }
};

namespace detail {

// Product of the distinct leading coefficients of G viewed in k(S)[U], where U
// is the complement of the independent set S and the order eliminates U.
inline Polynomial gtz_pivot_product(const std::vector<Polynomial>& G, const std::vector<char>& umask,
                                    const MonomialOrder& ord) {
    RingPtr ring = G.empty() ? nullptr : G.front().ring();
    std::vector<Polynomial> distinct;
    for (const auto& g : G) {
        // U-part of the leading monomial under the elimination order.
        const Monomial* lead = nullptr;
        for (const auto& [m, c] : g.terms())
            if (!lead || ord.less(*lead, m)) lead = &m;
        auto ustar = *lead;
        for (std::size_t i = 0; i < ustar.size(); ++i)
            if (!umask[i]) ustar[i] = 0;
        Polynomial lc(g.ring());
        for (const auto& [m, c] : g.terms()) {
            bool same = true;
            for (std::size_t i = 0; i < m.size() && same; ++i)
                if (umask[i] && m[i] != ustar[i]) same = false;
            if (!same) continue;
            auto spart = m;
            for (std::size_t i = 0; i < spart.size(); ++i)
                if (umask[i]) spart[i] = 0;
            lc.add_term(spart, c);
        }
        lc.make_primitive();
        bool seen = false;
        for (const auto& d : distinct)
            if (d == lc) {
                seen = true;
                break;
            }
        if (!seen) distinct.push_back(std::move(lc));
    }
    Polynomial h = Polynomial::constant(ring, Rat(1));
    for (const auto& d : distinct) h = h * d;
    return h;
}

}  // namespace detail

// Splits an affine ideal into equidimensional pieces, peeling the top
// dimension repeatedly: contract away from a maximal independent set to trap
// every top-dimensional component, then saturate it out and continue below.
inline EquidimDecomposition equidimensional_decomposition(const IdealHandle& I) {
    EquidimDecomposition out;
    if (I.is_unit()) return out;
    RingPtr ring = I.ring();
    IdealHandle T = I;
    while (!T.is_unit()) {
        long m = krull_dimension(T);
        IdealHandle rest = T;
        std::optional<IdealHandle> Km;
        while (!rest.is_unit() && krull_dimension(rest) == m) {
            std::vector<char> smask = independent_set_mask(rest);
            std::vector<char> umask(ring->size());
            for (std::size_t i = 0; i < umask.size(); ++i) umask[i] = !smask[i];
            MonomialOrder ord = elim_order(umask);
            Polynomial h = detail::gtz_pivot_product(rest.groebner(ord), umask, ord);
            IdealHandle chunk = detail::saturate_quiet(rest, IdealHandle(ring, {h}));
            Km = Km ? intersect(*Km, chunk) : chunk;
            rest = detail::saturate_quiet(rest, chunk);
        }
        out.pieces.push_back(EquidimPiece{m, *Km});
        T = detail::saturate_quiet(T, *Km);
    }
    return out;
}

}  // namespace chow
