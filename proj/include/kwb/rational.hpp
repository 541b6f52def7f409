#pragma once

#include <gmpxx.h>

#include <string>

namespace kwb {

// Exact rational scalar: always reduced, denominator > 0.  Backed by GMP.
using Rat = mpq_class;
// Arbitrary-precision integer.
using Int = mpz_class;

inline Int factorial(unsigned n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(unsigned n, unsigned k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Canonical rational from a numerator/denominator pair.  (The raw two-
// argument Rat constructor does not reduce to lowest terms.)
inline Rat make_rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p" or "p/q" with optional sign.  Throws std::invalid_argument on
// malformed input or a zero denominator.
Rat rat_from_string(const std::string& s);

// Canonical text form: "p" or "p/q" with q > 1.
std::string rat_to_string(const Rat& r);

}  // namespace kwb
