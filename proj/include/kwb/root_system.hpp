#pragma once

#include <string>
#include <vector>

#include "kwb/errors.hpp"
#include "kwb/rational.hpp"

namespace kwb {

// Integral weight of A_{N-1} stored as Dynkin labels in the fundamental-
// weight basis (length N-1).  Dominant iff all labels >= 0.
struct Weight {
    std::vector<long> labels;

    Weight() = default;
    explicit Weight(std::vector<long> l) : labels(std::move(l)) {}

    int rank() const { return static_cast<int>(labels.size()); }
    bool is_zero() const {
        for (long l : labels)
            if (l != 0) return false;
        return true;
    }
    long label_sum() const {
        long s = 0;
        for (long l : labels) s += l;
        return s;
    }

    static Weight zero(int rank) { return Weight(std::vector<long>(rank, 0)); }
    // j is 1-based: fundamental(rank, j) has a single 1 in position j.
    static Weight fundamental(int rank, int j);

    // Serialization: comma-separated labels, e.g. "1,0,1".
    static Weight parse(const std::string& text);
    std::string str() const;

    auto operator<=>(const Weight&) const = default;
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator*(long k, const Weight& a);

// Positive root alpha_i + ... + alpha_j of A_{N-1}, 1 <= i <= j <= N-1.
// Serialized as "a[i..j]".
struct PosRoot {
    int lo;
    int hi;
    std::string str() const;
};

// The A_{N-1} root system of SU(N)/SL(N,C).  Coroot additivity makes every
// pairing a sum of consecutive Dynkin labels, so no bilinear form is ever
// materialized.  Guard: N <= 8.
class RootSystemA {
public:
    explicit RootSystemA(int N);

    int N() const { return n_; }
    int rank() const { return n_ - 1; }

    const std::vector<PosRoot>& positive_roots() const { return pos_roots_; }
    Weight rho() const { return Weight(std::vector<long>(rank(), 1)); }
    // Simple root alpha_i (1-based) as a weight: the i-th Cartan column.
    Weight simple_root(int i) const;

    // lambda(H_beta) = sum of labels over the interval of beta.
    long pairing(const Weight& lambda, const PosRoot& beta) const;

    bool is_dominant(const Weight& lambda) const;

    // Dominance order: mu preceq lambda iff lambda - mu is a nonnegative
    // integer combination of simple roots (checked via the exact inverse
    // Cartan matrix).
    bool preceq(const Weight& mu, const Weight& lambda) const;

    // Orbit of the Weyl group S_N acting on partition coordinates.
    std::vector<Weight> weyl_orbit(const Weight& lambda) const;

    // Nonzero dominant lambda with pairing(lambda, beta) in {0,1} for every
    // positive root beta.  Throws DomainError on non-dominant input.
    bool is_minuscule(const Weight& lambda) const;

    // Weyl dimension formula, exact.
    Int weyl_dim(const Weight& lambda) const;

    // Highest weight of the dual representation: reversed labels.
    Weight dual_weight(const Weight& lambda) const;

    // Partition coordinates p (length N, p_N = 0, p_i - p_{i+1} = label_i).
    std::vector<long> to_partition(const Weight& lambda) const;
    // Inverse of to_partition; accepts any integer vector of length N and
    // normalizes the last entry to 0.
    Weight from_partition(const std::vector<long>& p) const;

private:
    int n_;
    std::vector<PosRoot> pos_roots_;
    std::vector<std::vector<Rat>> inv_cartan_;

    void check_rank(const Weight& w) const;
};

}  // namespace kwb
