#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace chow {

// Exponent vector; index i matches Ring::vars[i]. All monomials of one
// polynomial share the ring's variable count.
using Monomial = std::vector<unsigned>;

inline unsigned total_degree(const Monomial& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {  // a | b
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {  // a / b, caller checks b | a
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return false;
    return true;
}

inline bool is_one(const Monomial& m) {
    for (unsigned e : m)
        if (e) return false;
    return true;
}

}  // namespace chow
