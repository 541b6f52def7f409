#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kwb/poly.hpp"
#include "kwb/root_system.hpp"

namespace kwb {

// A class function on SU(N) restricted to the maximal torus: a symmetric
// polynomial in x_1..x_N, column-normalized so the minimal exponent over
// all monomials is 0.
struct CharClassFn {
    int n = 0;       // N
    Poly poly;       // symmetric, column-normalized

    bool operator==(const CharClassFn&) const = default;
};

// A virtual character decomposed in the irreducible basis: dominant highest
// weight -> multiplicity.  Genuine characters have nonnegative integer
// multiplicities; differences of characters may not.
using SchurExpansion = std::map<Weight, Rat>;

// Irreducible character as the Schur polynomial of lambda's partition,
// computed by the alternant ratio.  Guards: N <= 8, |partition| <= 40.
CharClassFn character_of(const RootSystemA& rs, const Weight& lambda);

// Product of class functions with column re-normalization.
CharClassFn char_mul(const CharClassFn& a, const CharClassFn& b);
CharClassFn char_add(const CharClassFn& a, const CharClassFn& b);
CharClassFn char_scale(const Rat& c, const CharClassFn& a);
CharClassFn char_one(int n);

// Decomposition into irreducible characters by graded-lex leading-term
// subtraction.  Throws DomainError on asymmetric input.
SchurExpansion schur_decompose(const CharClassFn& f);

// schur_decompose(character_of(lambda) * character_of(mu)).
SchurExpansion tensor_decompose(const RootSystemA& rs, const Weight& lambda,
                                const Weight& mu);

// Weights of V(lambda) with multiplicities; total mass = weyl_dim(lambda).
std::map<Weight, Int> weight_multiplicities(const RootSystemA& rs,
                                            const Weight& lambda);

// Normalized Haar integral of a class function: the multiplicity of the
// trivial representation in its decomposition.
Rat haar_integral_class(const CharClassFn& f);

// Finite-horizon moment scan.  a_n and b_n are indexed 1..nmax.
struct ScanReport {
    int nmax = 0;
    std::vector<Rat> a;                    // a_n = haar(f^n)
    std::vector<Rat> b;                    // b_n = haar(f^n * h)
    bool hypothesis_holds = false;         // all a_n == 0 up to the horizon
    std::optional<int> first_all_zero_b;   // least n0 with b_n == 0 for n >= n0
};

// Computes a_n = haar(f^n) and b_n = haar(f^n h) for 1 <= n <= nmax, where
// f and h are given in the character basis.  Finite-horizon evidence only.
ScanReport mathieu_scan_class(const RootSystemA& rs, const SchurExpansion& f,
                              const SchurExpansion& h, int nmax);

// Realizes an expansion as a class function (sum of multiples of
// irreducible characters).
CharClassFn expansion_to_class_fn(const RootSystemA& rs, const SchurExpansion& e);

// Character-combination grammar: `3*[1,0] - [0,1] + 2*[0,0]`.
SchurExpansion parse_char_combo(const std::string& text, int rank);
std::string print_char_combo(const SchurExpansion& e);

}  // namespace kwb
