#pragma once

#include <vector>

#include "errors.hpp"
#include "handle.hpp"

namespace chow {

namespace detail {

// Largest subset S of variables such that no leading monomial is supported
// entirely inside S (an independent set modulo LT(I)). Returns the first
// maximum set in the ascending-variable search order, so the choice is
// deterministic.
inline std::vector<char> max_independent_set_mask(const std::vector<Monomial>& lms,
                                                  std::size_t nvars) {
    std::vector<char> in_set(nvars, 0), best_set(nvars, 0);
    std::size_t best = 0;
    bool have = false;
    auto independent = [&]() {
        for (const auto& m : lms) {
            bool inside = true;
            for (std::size_t i = 0; i < nvars && inside; ++i)
                if (m[i] && !in_set[i]) inside = false;
            if (inside) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, std::size_t next, std::size_t size) -> void {
        if (size > best || !have) {
            best = size;
            best_set = in_set;
            have = true;
        }
        if (size + (nvars - next) <= best) return;  // cannot beat the incumbent
        for (std::size_t v = next; v < nvars; ++v) {
            in_set[v] = 1;
            if (independent()) self(self, v + 1, size + 1);
            in_set[v] = 0;
        }
    };
    rec(rec, 0, 0);
    return best_set;
}

inline std::size_t max_independent_set(const std::vector<Monomial>& lms, std::size_t nvars) {
    auto mask = max_independent_set_mask(lms, nvars);
    std::size_t n = 0;
    for (char c : mask) n += (c != 0);
    return n;
}

}  // namespace detail

// Affine Krull dimension of ring/I (the dimension of the cone for homogeneous
// input; projective callers subtract one). Unit ideal: -1, empty vanishing set.
inline long krull_dimension(const IdealHandle& I) {
    long cached;
    if (I.dimension_cached(cached)) return cached;
    long d;
    if (I.is_zero_ideal())
        d = (long)I.ring()->size();
    else if (I.is_unit())
        d = -1;
    else
        d = (long)detail::max_independent_set(I.leading_monomials(), I.ring()->size());
    I.cache_dimension(d);
    return d;
}

inline bool is_zero_dimensional(const IdealHandle& I) { return krull_dimension(I) == 0; }

// A maximum independent set of variables modulo LT(I), as a mask. Requires a
// proper nonzero ideal.
inline std::vector<char> independent_set_mask(const IdealHandle& I) {
    if (I.is_zero_ideal()) return std::vector<char>(I.ring()->size(), 1);
    if (I.is_unit()) throw std::invalid_argument("independent_set_mask: unit ideal");
    return detail::max_independent_set_mask(I.leading_monomials(), I.ring()->size());
}

// Standard monomial basis of ring/I for zero-dimensional I, canonical order.
inline std::vector<Monomial> standard_monomials(const IdealHandle& I) {
    if (krull_dimension(I) != 0)
        throw dimension_error("standard_monomials: ideal is not zero-dimensional");
    auto lms = I.leading_monomials();
    std::size_t n = I.ring()->size();
    std::vector<unsigned> cap(n, 0);
    for (const auto& m : lms)
        for (std::size_t i = 0; i < n; ++i) {
            if (!m[i]) continue;
            bool pure = true;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i && m[j]) pure = false;
            if (pure && (!cap[i] || m[i] < cap[i])) cap[i] = m[i];
        }
    std::vector<Monomial> out;
    Monomial cur(n, 0);
    auto rec = [&](auto&& self, std::size_t v) -> void {
        if (v == n) {
            out.push_back(cur);
            return;
        }
        for (unsigned e = 0; e < cap[v]; ++e) {
            cur[v] = e;
            bool div = false;
            for (const auto& m : lms)
                if (mono_divides(m, cur)) {
                    div = true;
                    break;
                }
            if (div) break;
            self(self, v + 1);
        }
        cur[v] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), CanonicalMonoLess{});
    return out;
}

// dim_Q of ring/I for zero-dimensional I. Unit ideal counts 0 (empty
// vanishing set); positive dimension is an error.
inline unsigned long quotient_vs_dimension(const IdealHandle& I) {
    if (I.is_unit()) return 0;
    return standard_monomials(I).size();
}

}  // namespace chow
