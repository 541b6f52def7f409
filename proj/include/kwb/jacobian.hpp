#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kwb/poly.hpp"
#include "kwb/sym_tensor.hpp"

namespace kwb {

// Keller-style polynomial map f = x - h with every h_i either zero or
// homogeneous of degree d >= 2.
struct PolyMap {
    int n = 0;
    int d = 0;
    std::vector<Poly> h;
};

// Validates dimensions and homogeneity.
PolyMap make_poly_map(int n, int d, std::vector<Poly> h);

// f_i = x_i - h_i as a polynomial.
Poly map_component(const PolyMap& f, int i);
std::vector<Poly> map_components(const PolyMap& f);

// Truncated formal inverse: F_i - x_i has only terms of degree >= 2, and
// nonzero homogeneous components occur only in degrees k(d-1)+1.
struct FormalInverse {
    int n = 0;
    int trunc = 0;
    std::vector<Poly> F;
};

// Exact determinant of the Jacobian matrix of f, by cofactor expansion.
Poly jacobian_det(const PolyMap& f);

// Inverse by fixpoint iteration G <- x + h(G) truncated at degree D,
// iterated to stability; the compositions f(F) and F(f) are verified to be
// the identity modulo degree > D before returning.
FormalInverse formal_inverse(const PolyMap& f, int D);

// Independent inverse: F_i = sum over multi-indices alpha with
// |alpha|(d-1)+1 <= D of (1/alpha!) d^alpha (h^alpha x_i).
FormalInverse abcw_inverse(const PolyMap& f, int D);

// {U,f} = sum_alpha (1/alpha!) d^alpha (U(f) * det J(f) * h^alpha), summed
// over |alpha|(d-1) <= D + deg(U) and truncated at degree D.
Poly bracket_U_f(const Poly& U, const PolyMap& f, int D);

// Q = sum_i h_i (x) d_i, bi-degree (d, 1).
TensorElement build_Q(const PolyMap& f);

struct PipelineRecord {
    int k = 0;
    bool div_zero = false;             // div(Q^k) == 0
    bool psi_matches_inverse = false;  // Psi(Q^k) == k! sum_i F_i^{(k(d-1)+1)} (x) d_i
    bool psi_is_zero = false;          // Psi(Q^k) == 0
};

struct PipelineReport {
    std::string det;  // printed determinant (always "1" on success)
    std::vector<PipelineRecord> records;  // k = 1..kmax, contiguous
};

// Runs the verification chain for k = 1..kmax.  Throws PreconditionError
// naming the determinant when det J(f) != 1, and ResourceError when
// kmax(d-1)+1 > 64.
PipelineReport q_pipeline(const PolyMap& f, int kmax);

// Deterministic triangular map: h_i depends only on x_{i+1..n}, so
// det J(f) == 1 by construction.
PolyMap random_tame_map(int n, int d, std::uint64_t seed);

// Map file format: `n = 2`, `d = 2`, then `h1 = x2^2`, ...; blank lines and
// `#` comments ignored.  Components may be omitted (default 0).
PolyMap parse_map_file(const std::string& content);
PolyMap load_map_file(const std::string& path);

}  // namespace kwb
