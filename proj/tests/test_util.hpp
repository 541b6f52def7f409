#pragma once

// Shared helpers for the test suites: seeded random generators so every run
// is reproducible bit-for-bit.

#include <random>

#include "kwb/poly.hpp"
#include "kwb/sym_tensor.hpp"

namespace kwb::testutil {

inline Rat random_rat(std::mt19937_64& rng) {
    long num = static_cast<long>(rng() % 11) - 5;
    long den = 1 + static_cast<long>(rng() % 3);
    return make_rat(num, den);
}

// Random polynomial with total degree <= maxdeg and at most max_terms terms.
inline Poly random_poly(std::mt19937_64& rng, int nvars, int maxdeg,
                        int max_terms = 6) {
    Poly p(nvars);
    int nterms = 1 + static_cast<int>(rng() % max_terms);
    for (int t = 0; t < nterms; ++t) {
        ExpVec e(nvars, 0);
        int budget = static_cast<int>(rng() % (maxdeg + 1));
        for (int b = 0; b < budget; ++b) ++e[rng() % nvars];
        p.add_term(e, random_rat(rng));
    }
    return p;
}

// Random homogeneous polynomial of degree exactly deg (may be zero).
inline Poly random_homogeneous(std::mt19937_64& rng, int nvars, int deg,
                               int max_terms = 4) {
    Poly p(nvars);
    int nterms = 1 + static_cast<int>(rng() % max_terms);
    for (int t = 0; t < nterms; ++t) {
        ExpVec e(nvars, 0);
        for (int b = 0; b < deg; ++b) ++e[rng() % nvars];
        p.add_term(e, random_rat(rng));
    }
    return p;
}

// Random bi-homogeneous tensor element with the given bi-degree.
inline TensorElement random_tensor(std::mt19937_64& rng, int n, int xdeg,
                                   int ddeg, int max_terms = 4) {
    TensorElement t(n, xdeg, ddeg);
    int nterms = 1 + static_cast<int>(rng() % max_terms);
    for (int q = 0; q < nterms; ++q) {
        ExpVec a(n, 0), b(n, 0);
        for (int i = 0; i < xdeg; ++i) ++a[rng() % n];
        for (int i = 0; i < ddeg; ++i) ++b[rng() % n];
        Rat c = random_rat(rng);
        if (c == 0) c = 1;
        t.add_term(a, b, c);
    }
    return t;
}

}  // namespace kwb::testutil
