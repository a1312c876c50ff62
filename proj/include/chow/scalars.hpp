#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "polynomial.hpp"

namespace chow {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a(std::uint64_t h, std::string_view s) {
    for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ULL;
    return h;
}

}  // namespace detail

// Deterministic source of generic scalars. Forks are derived from the root
// seed and a label, not from the current stream position, so the draw made at
// one call site never depends on how many draws other sites performed.
struct GenericScalarSource {
    std::uint64_t root = 0;
    std::uint64_t state = 0;
    long bound = 32003;
    int max_retries = 3;

    static GenericScalarSource seeded(std::uint64_t seed, long bound = 32003, int max_retries = 3) {
        GenericScalarSource s;
        s.root = seed;
        s.state = seed ^ 0x5851f42d4c957f2dULL;
        s.bound = bound;
        s.max_retries = max_retries;
        return s;
    }

    GenericScalarSource fork(std::string_view label, std::uint64_t salt = 0) const {
        std::uint64_t h = detail::fnv1a(0xcbf29ce484222325ULL, label);
        h ^= salt + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        // Nested forks chain: the child's root carries the whole label path.
        return seeded(root ^ h, bound, max_retries);
    }

    std::uint64_t next_u64() { return detail::splitmix64(state); }

    // Uniform nonzero integer in [-bound, bound].
    Rat next_scalar() {
        std::uint64_t r = next_u64() % (2 * (std::uint64_t)bound);
        long v = r < (std::uint64_t)bound ? (long)r + 1 : -(long)(r - (std::uint64_t)bound) - 1;
        return Rat(v);
    }
};

// Generic linear form in the geometric variables: c_1 x_1 + ... (+ c_0 when
// affine = true).
inline Polynomial random_linear_form(const RingPtr& ring, GenericScalarSource& src,
                                     bool affine = false) {
    Polynomial f(ring);
    for (std::size_t i = 0; i < ring->geometric; ++i)
        f += Polynomial::variable(ring, i) * src.next_scalar();
    if (affine) f += Polynomial::constant(ring, src.next_scalar());
    return f;
}

inline Polynomial random_combination(const std::vector<Polynomial>& polys,
                                     GenericScalarSource& src) {
    if (polys.empty()) throw std::invalid_argument("random_combination: empty list");
    Polynomial f(polys.front().ring());
    for (const auto& p : polys) f += p * src.next_scalar();
    return f;
}

inline std::vector<Polynomial> random_linear_forms(const RingPtr& ring, std::size_t count,
                                                   GenericScalarSource& src, bool affine = false) {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_linear_form(ring, src, affine));
    return out;
}

inline std::vector<Polynomial> random_combinations(const std::vector<Polynomial>& polys,
                                                   std::size_t count, GenericScalarSource& src) {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_combination(polys, src));
    return out;
}

}  // namespace chow
