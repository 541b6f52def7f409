#include "kwb/poly.hpp"

#include <algorithm>

namespace kwb {

Poly Poly::constant(int nvars, const Rat& c, bool laurent) {
    Poly p(nvars, laurent);
    p.add_term(ExpVec(nvars, 0), c);
    return p;
}

Poly Poly::variable(int nvars, int var, bool laurent) {
    if (var < 0 || var >= nvars)
        throw DimensionError("variable index out of range");
    Poly p(nvars, laurent);
    ExpVec e(nvars, 0);
    e[var] = 1;
    p.add_term(e, 1);
    return p;
}

Poly Poly::monomial(const ExpVec& e, const Rat& c, bool laurent) {
    Poly p(static_cast<int>(e.size()), laurent);
    p.add_term(e, c);
    return p;
}

void Poly::add_term(const ExpVec& e, const Rat& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw DimensionError("exponent vector length does not match variable count");
    if (!laurent_) {
        for (int x : e)
            if (x < 0)
                throw DomainError("negative exponent in non-Laurent polynomial");
    }
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat Poly::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat Poly::constant_term() const { return coeff(ExpVec(nvars_, 0)); }

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.begin()->first);  // leading term has max degree
}

int Poly::low_degree() const {
    if (terms_.empty()) return 0;
    return total_degree(terms_.rbegin()->first);
}

bool Poly::is_homogeneous() const {
    return terms_.empty() || degree() == low_degree();
}

void Poly::check_compatible(const Poly& o) const {
    if (nvars_ != o.nvars_)
        throw DimensionError("variable-count mismatch between polynomials");
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_compatible(o);
    laurent_ = laurent_ || o.laurent_;
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly& Poly::operator-=(const Poly& o) {
    check_compatible(o);
    laurent_ = laurent_ || o.laurent_;
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly Poly::operator-() const {
    Poly r(nvars_, laurent_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_compatible(o);
    Poly r(nvars_, laurent_ || o.laurent_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            ExpVec e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    Poly r(nvars_, laurent_);
    if (c == 0) return r;
    for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
    return r;
}

Poly partial_derive(const Poly& p, int var, int order) {
    if (p.laurent())
        throw DomainError("differentiation of Laurent polynomials is unsupported");
    if (var < 0 || var >= p.nvars())
        throw DimensionError("variable index out of range");
    if (order < 0) throw DomainError("negative derivative order");
    Poly r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e[var] < order) continue;
        Rat factor = 1;
        for (int k = 0; k < order; ++k) factor *= e[var] - k;
        ExpVec d = e;
        d[var] -= order;
        r.add_term(d, c * factor);
    }
    return r;
}

Poly partial_derive_multi(const Poly& p, const ExpVec& alpha) {
    if (static_cast<int>(alpha.size()) != p.nvars())
        throw DimensionError("multi-index length does not match variable count");
    Poly r = p;
    for (int i = 0; i < p.nvars() && !r.is_zero(); ++i)
        if (alpha[i] > 0) r = partial_derive(r, i, alpha[i]);
    return r;
}

Poly homogeneous_component(const Poly& p, int k) {
    Poly r(p.nvars(), p.laurent());
    for (const auto& [e, c] : p.terms())
        if (total_degree(e) == k) r.add_term(e, c);
    return r;
}

Poly truncate(const Poly& p, int maxdeg) {
    Poly r(p.nvars(), p.laurent());
    for (const auto& [e, c] : p.terms())
        if (total_degree(e) <= maxdeg) r.add_term(e, c);
    return r;
}

Poly pow_trunc(const Poly& p, int e, int trunc) {
    if (e < 0) throw DomainError("negative exponent in pow_trunc");
    Poly r = Poly::constant(p.nvars(), 1, p.laurent());
    Poly base = trunc >= 0 ? truncate(p, trunc) : p;
    for (int i = 0; i < e; ++i) {
        r = r * base;
        if (trunc >= 0) r = truncate(r, trunc);
    }
    return r;
}

Poly substitute(const Poly& p, const std::vector<Poly>& images, int trunc) {
    if (static_cast<int>(images.size()) != p.nvars())
        throw DimensionError("substitute: image count does not match variable count");
    if (p.laurent())
        throw DomainError("substitute on Laurent polynomials is unsupported");
    int m = images.empty() ? 0 : images[0].nvars();
    for (const auto& q : images)
        if (q.nvars() != m)
            throw DimensionError("substitute: images disagree on variable count");
    Poly r(m);
    for (const auto& [e, c] : p.terms()) {
        Poly term = Poly::constant(m, c);
        for (int i = 0; i < p.nvars() && !term.is_zero(); ++i)
            if (e[i] > 0) term = truncate(term * pow_trunc(images[i], e[i], trunc), trunc);
        r += term;
    }
    return r;
}

Rat constant_term(const Poly& p) { return p.constant_term(); }

Rat evaluate(const Poly& p, const std::vector<Rat>& point) {
    if (static_cast<int>(point.size()) != p.nvars())
        throw DimensionError("evaluation point length does not match variable count");
    Rat total = 0;
    for (const auto& [e, c] : p.terms()) {
        Rat v = c;
        for (int i = 0; i < p.nvars(); ++i) {
            if (e[i] == 0) continue;
            if (e[i] < 0) {
                if (point[i] == 0) throw DomainError("evaluation at a pole");
                Rat inv = 1 / point[i];
                for (int k = 0; k < -e[i]; ++k) v *= inv;
            } else {
                for (int k = 0; k < e[i]; ++k) v *= point[i];
            }
        }
        total += v;
    }
    return total;
}

Poly divide_exact(const Poly& p, const Poly& q) {
    if (p.nvars() != q.nvars())
        throw DimensionError("variable-count mismatch in division");
    if (q.is_zero()) throw DomainError("division by zero polynomial");
    Poly rem = p;
    Poly quot(p.nvars(), p.laurent());
    const auto& [lq, cq] = *q.terms().begin();
    while (!rem.is_zero()) {
        const auto& [lr, cr] = *rem.terms().begin();
        ExpVec e(p.nvars());
        for (int i = 0; i < p.nvars(); ++i) {
            e[i] = lr[i] - lq[i];
            if (e[i] < 0 && !p.laurent())
                throw DomainError("polynomial division is not exact");
        }
        Rat c = cr / cq;
        quot.add_term(e, c);
        rem -= q * Poly::monomial(e, c, p.laurent());
    }
    return quot;
}

Poly swap_vars(const Poly& p, int var_a, int var_b) {
    Poly r(p.nvars(), p.laurent());
    for (const auto& [e, c] : p.terms()) {
        ExpVec s = e;
        std::swap(s[var_a], s[var_b]);
        r.add_term(s, c);
    }
    return r;
}

}  // namespace kwb
