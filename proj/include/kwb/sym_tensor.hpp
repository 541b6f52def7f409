#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kwb/poly.hpp"

namespace kwb {

// Bi-homogeneous element of S^k C^N (x) S^l (C^N)*, stored as a polynomial
// in commuting x- and d-variables.  Every stored exponent pair (a, b)
// satisfies |a| == xdeg and |b| == ddeg.  All elements use the canonical
// orientation x-part (x) d-part; the swap map sigma is the identity on this
// layout.
class TensorElement {
public:
    using Key = std::pair<ExpVec, ExpVec>;

    // Graded-lex descending on the x-part, then on the d-part, matching the
    // canonical polynomial term order.
    struct KeyOrder {
        bool operator()(const Key& p, const Key& q) const {
            GrlexDesc g;
            if (p.first != q.first) return g(p.first, q.first);
            return g(p.second, q.second);
        }
    };

    using TermMap = std::map<Key, Rat, KeyOrder>;

    TensorElement() : n_(0), xdeg_(0), ddeg_(0) {}
    TensorElement(int n, int xdeg, int ddeg);

    static TensorElement term(int n, const ExpVec& a, const ExpVec& b, const Rat& c);
    // p (x) d^b for homogeneous p.
    static TensorElement from_poly(const Poly& p, const ExpVec& b);

    int n() const { return n_; }
    int xdeg() const { return xdeg_; }
    int ddeg() const { return ddeg_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const ExpVec& a, const ExpVec& b, const Rat& c);

    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;
    TensorElement operator*(const Rat& c) const;
    TensorElement& operator+=(const TensorElement& o);

    // Value equality ignores the declared bi-degree when both sides are
    // zero: all zero elements of a given rank are equal.
    bool operator==(const TensorElement& o) const {
        if (n_ != o.n_) return false;
        if (terms_.empty() && o.terms_.empty()) return true;
        return xdeg_ == o.xdeg_ && ddeg_ == o.ddeg_ && terms_ == o.terms_;
    }

    // Text form: `1*x1^2|d1 + -3*x1x2|d2`; round-trip exact.
    std::string str() const;
    static TensorElement parse(const std::string& text, int n);

private:
    int n_, xdeg_, ddeg_;
    TermMap terms_;
};

// (P (x) Q) * (P' (x) Q') = PP' (x) QQ'; bi-degrees add.
TensorElement tensor_mul(const TensorElement& s, const TensorElement& t);

// Basis element of sl(N): off-diagonal E_ij (i != j) or the Cartan element
// E_ii - E_{i+1,i+1}.  Indices are 1-based.
struct LieBasisElem {
    enum class Kind { OffDiag, Cartan };
    Kind kind;
    int i;
    int j;  // unused for Cartan

    static LieBasisElem off_diag(int i, int j) { return {Kind::OffDiag, i, j}; }
    static LieBasisElem cartan(int i) { return {Kind::Cartan, i, 0}; }
};

// All N^2 - 1 basis elements of sl(N).
std::vector<LieBasisElem> sl_basis(int n);

// Derivation action on the tensor algebra: on x-monomials E_ij acts as
// x_i d/dx_j; on d-monomials E_ij d_k = -delta_{ik} d_j extended as a
// derivation.  Preserves bi-degree.
TensorElement lie_act(const LieBasisElem& X, const TensorElement& t);

// Induced action on plain polynomials (the S^m component).
Poly lie_act_poly(const LieBasisElem& X, const Poly& p);

// Contraction: c * x^a d^b  ->  c * prod_m a_m!/(a_m-b_m)! * x^(a-b) when
// a >= b componentwise, else 0.  Returns 0 whenever xdeg < ddeg.
Poly div_map(const TensorElement& t);

// For homogeneous p of degree k: sum_i (p * x_i) (x) d_i, bi-degree (k+1, 1).
TensorElement euler_map(const Poly& p);

// Psi(sum_j P_j (x) Q_j) = sum_j sum_i Q_j(d)(P_j * x_i) (x) d_i.
// Requires xdeg >= ddeg - 1.
TensorElement psi_map(const TensorElement& t);

}  // namespace kwb
