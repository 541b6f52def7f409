#pragma once

#include <map>
#include <vector>

#include "kwb/errors.hpp"
#include "kwb/rational.hpp"

namespace kwb {

// Exponent vector of a monomial; one entry per variable.  Negative entries
// are legal only inside Laurent polynomials.
using ExpVec = std::vector<int>;

inline int total_degree(const ExpVec& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

// Graded-lexicographic order, descending: higher total degree first, ties
// broken by the first differing exponent (larger first).  Iterating a term
// map therefore starts at the leading monomial, which makes printing and
// leading-term extraction deterministic.
struct GrlexDesc {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return a > b;  // lexicographic on exponents, larger first
    }
};

// Sparse multivariate polynomial with exact rational coefficients.
// Canonical: no zero coefficients stored, terms ordered graded-lex
// descending.  A `laurent` polynomial may carry negative exponents.
class Poly {
public:
    using TermMap = std::map<ExpVec, Rat, GrlexDesc>;

    Poly() : nvars_(0), laurent_(false) {}
    explicit Poly(int nvars, bool laurent = false)
        : nvars_(nvars), laurent_(laurent) {}

    static Poly constant(int nvars, const Rat& c, bool laurent = false);
    static Poly variable(int nvars, int var, bool laurent = false);  // 0-based
    static Poly monomial(const ExpVec& e, const Rat& c, bool laurent = false);

    int nvars() const { return nvars_; }
    bool laurent() const { return laurent_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    // Adds c * x^e, erasing the term if the total cancels.
    void add_term(const ExpVec& e, const Rat& c);

    Rat coeff(const ExpVec& e) const;
    Rat constant_term() const;

    // Max total degree over stored terms; -1 for the zero polynomial.
    int degree() const;
    // Min total degree over stored terms; 0 for the zero polynomial.
    int low_degree() const;
    bool is_homogeneous() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);

    // Value equality: same variable count and identical term sets.  The
    // Laurent flag is a capability, not part of the value.
    bool operator==(const Poly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

private:
    int nvars_;
    bool laurent_;
    TermMap terms_;

    void check_compatible(const Poly& o) const;
};

// order-fold iterated partial derivative d^order/dx_var^order.
// Rejects Laurent input.
Poly partial_derive(const Poly& p, int var, int order = 1);

// Derivative along a multi-index: applies partial_derive per variable.
Poly partial_derive_multi(const Poly& p, const ExpVec& alpha);

// Sum of the terms of total degree exactly k.
Poly homogeneous_component(const Poly& p, int k);

// Drops all terms of total degree > maxdeg.
Poly truncate(const Poly& p, int maxdeg);

// p with x_i replaced by images[i]; every term of total degree > trunc is
// discarded during expansion.  Exact below the truncation bound.
Poly substitute(const Poly& p, const std::vector<Poly>& images, int trunc);

// p^e with truncation at total degree trunc (trunc < 0 means exact).
Poly pow_trunc(const Poly& p, int e, int trunc = -1);

Rat constant_term(const Poly& p);

// Exact evaluation at a rational point.
Rat evaluate(const Poly& p, const std::vector<Rat>& point);

// Exact quotient p / q; throws DomainError if the division is not exact.
Poly divide_exact(const Poly& p, const Poly& q);

// p with variables var_a and var_b exchanged.
Poly swap_vars(const Poly& p, int var_a, int var_b);

}  // namespace kwb
