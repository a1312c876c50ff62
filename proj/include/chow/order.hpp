#pragma once

#include <string>
#include <vector>

#include "monomial.hpp"

namespace chow {

enum class OrderKind { grevlex, lex, block_elim };

namespace detail {

// Strict grevlex restricted to the positions where mask is nonzero
// (empty mask = all positions).
inline bool grevlex_less_masked(const Monomial& a, const Monomial& b, const std::vector<char>& mask) {
    long da = 0, db = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!mask.empty() && !mask[i]) continue;
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (!mask.empty() && !mask[i]) continue;
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

}  // namespace detail

// block_elim compares the eliminated block first (grevlex within it), so
// basis elements free of eliminated variables generate the elimination ideal.
struct MonomialOrder {
    OrderKind kind = OrderKind::grevlex;
    std::vector<char> elim;  // block_elim only: elim[i] != 0 marks an eliminated variable

    bool less(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case OrderKind::grevlex:
                return detail::grevlex_less_masked(a, b, {});
            case OrderKind::lex:
                for (std::size_t i = 0; i < a.size(); ++i)
                    if (a[i] != b[i]) return a[i] < b[i];
                return false;
            case OrderKind::block_elim: {
                std::vector<char> keep(elim.size());
                for (std::size_t i = 0; i < elim.size(); ++i) keep[i] = !elim[i];
                if (detail::grevlex_less_masked(a, b, elim)) return true;
                if (detail::grevlex_less_masked(b, a, elim)) return false;
                return detail::grevlex_less_masked(a, b, keep);
            }
        }
        return false;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }

    // Cache key: one Groebner basis is stored per distinct key.
    std::string key() const {
        std::string k;
        switch (kind) {
            case OrderKind::grevlex: return "grevlex";
            case OrderKind::lex: return "lex";
            case OrderKind::block_elim:
                k = "elim:";
                for (char c : elim) k += c ? '1' : '0';
                return k;
        }
        return k;
    }
};

inline MonomialOrder grevlex_order() { return {OrderKind::grevlex, {}}; }
inline MonomialOrder lex_order() { return {OrderKind::lex, {}}; }
inline MonomialOrder elim_order(std::vector<char> eliminated) {
    return {OrderKind::block_elim, std::move(eliminated)};
}

// Canonical container/printing order, independent of any Groebner order choice.
struct CanonicalMonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return detail::grevlex_less_masked(a, b, {});
    }
};

}  // namespace chow
