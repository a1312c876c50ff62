#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace chow {

using Rat = mpq_class;
using Int = mpz_class;

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Exact integer value of a rational known to be integral.
inline Int to_int_exact(const Rat& q) {
    if (q.get_den() != 1) throw std::invalid_argument("to_int_exact: not an integer: " + q.get_str());
    return q.get_num();
}

inline long to_long(const Int& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("to_long: value exceeds long range");
    return z.get_si();
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace chow
