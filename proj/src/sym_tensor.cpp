#include "kwb/sym_tensor.hpp"

#include <cctype>
#include <sstream>

namespace kwb {

namespace {

// a!/(a-b)! as an exact integer; caller guarantees a >= b >= 0.
Int falling_factorial(int a, int b) {
    Int r = 1;
    for (int k = 0; k < b; ++k) r *= a - k;
    return r;
}

}  // namespace

TensorElement::TensorElement(int n, int xdeg, int ddeg)
    : n_(n), xdeg_(xdeg), ddeg_(ddeg) {
    if (n < 1) throw DimensionError("tensor element needs at least one variable");
    if (xdeg < 0 || ddeg < 0) throw DomainError("negative bi-degree");
}

TensorElement TensorElement::term(int n, const ExpVec& a, const ExpVec& b,
                                  const Rat& c) {
    TensorElement t(n, total_degree(a), total_degree(b));
    t.add_term(a, b, c);
    return t;
}

TensorElement TensorElement::from_poly(const Poly& p, const ExpVec& b) {
    if (p.laurent()) throw DomainError("Laurent polynomials cannot enter tensors");
    if (!p.is_homogeneous()) throw DomainError("tensor factor must be homogeneous");
    TensorElement t(p.nvars(), std::max(p.degree(), 0), total_degree(b));
    for (const auto& [a, c] : p.terms()) t.add_term(a, b, c);
    return t;
}

void TensorElement::add_term(const ExpVec& a, const ExpVec& b, const Rat& c) {
    if (static_cast<int>(a.size()) != n_ || static_cast<int>(b.size()) != n_)
        throw DimensionError("exponent length does not match variable count");
    for (int x : a)
        if (x < 0) throw DomainError("negative exponent in tensor element");
    for (int x : b)
        if (x < 0) throw DomainError("negative exponent in tensor element");
    if (total_degree(a) != xdeg_ || total_degree(b) != ddeg_)
        throw DomainError("term violates bi-homogeneity");
    if (c == 0) return;
    Key k{a, b};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(std::move(k), c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    if (n_ != o.n_) throw DimensionError("tensor rank mismatch");
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) {
        *this = o;
        return *this;
    }
    if (xdeg_ != o.xdeg_ || ddeg_ != o.ddeg_)
        throw DomainError("bi-degree mismatch in tensor addition");
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
    TensorElement r = *this;
    r += o;
    return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
    return *this + o * Rat(-1);
}

TensorElement TensorElement::operator*(const Rat& c) const {
    TensorElement r(n_, xdeg_, ddeg_);
    if (c == 0) return r;
    for (const auto& [k, coef] : terms_) r.terms_.emplace(k, coef * c);
    return r;
}

TensorElement tensor_mul(const TensorElement& s, const TensorElement& t) {
    if (s.n() != t.n()) throw DimensionError("tensor rank mismatch");
    TensorElement r(s.n(), s.xdeg() + t.xdeg(), s.ddeg() + t.ddeg());
    for (const auto& [ks, cs] : s.terms()) {
        for (const auto& [kt, ct] : t.terms()) {
            ExpVec a(s.n()), b(s.n());
            for (int m = 0; m < s.n(); ++m) {
                a[m] = ks.first[m] + kt.first[m];
                b[m] = ks.second[m] + kt.second[m];
            }
            r.add_term(a, b, cs * ct);
        }
    }
    return r;
}

std::vector<LieBasisElem> sl_basis(int n) {
    std::vector<LieBasisElem> out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) out.push_back(LieBasisElem::off_diag(i, j));
    for (int i = 1; i < n; ++i) out.push_back(LieBasisElem::cartan(i));
    return out;
}

TensorElement lie_act(const LieBasisElem& X, const TensorElement& t) {
    TensorElement r(t.n(), t.xdeg(), t.ddeg());
    for (const auto& [k, c] : t.terms()) {
        const ExpVec& a = k.first;
        const ExpVec& b = k.second;
        if (X.kind == LieBasisElem::Kind::OffDiag) {
            int i = X.i - 1, j = X.j - 1;
            // E_ij acts as x_i d/dx_j on the x-part ...
            if (a[j] > 0) {
                ExpVec a2 = a;
                --a2[j];
                ++a2[i];
                r.add_term(a2, b, c * a[j]);
            }
            // ... and sends d_i to -d_j on the d-part (derivation).
            if (b[i] > 0) {
                ExpVec b2 = b;
                --b2[i];
                ++b2[j];
                r.add_term(a, b2, -c * b[i]);
            }
        } else {
            // E_ii - E_{i+1,i+1}: diagonal with integer eigenvalue.
            int i = X.i - 1;
            long eig = (a[i] - a[i + 1]) - (b[i] - b[i + 1]);
            if (eig != 0) r.add_term(a, b, c * eig);
        }
    }
    return r;
}

Poly lie_act_poly(const LieBasisElem& X, const Poly& p) {
    if (p.laurent()) throw DomainError("Lie action on Laurent polynomials is unsupported");
    Poly r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (X.kind == LieBasisElem::Kind::OffDiag) {
            int i = X.i - 1, j = X.j - 1;
            if (e[j] > 0) {
                ExpVec e2 = e;
                --e2[j];
                ++e2[i];
                r.add_term(e2, c * e[j]);
            }
        } else {
            int i = X.i - 1;
            long eig = e[i] - e[i + 1];
            if (eig != 0) r.add_term(e, c * eig);
        }
    }
    return r;
}

Poly div_map(const TensorElement& t) {
    Poly r(t.n());
    if (t.xdeg() < t.ddeg()) return r;  // S^{k-l} is zero for k < l
    for (const auto& [k, c] : t.terms()) {
        const ExpVec& a = k.first;
        const ExpVec& b = k.second;
        bool ok = true;
        Int factor = 1;
        ExpVec e(t.n());
        for (int m = 0; m < t.n(); ++m) {
            if (a[m] < b[m]) {
                ok = false;
                break;
            }
            factor *= falling_factorial(a[m], b[m]);
            e[m] = a[m] - b[m];
        }
        if (ok) r.add_term(e, c * Rat(factor));
    }
    return r;
}

TensorElement euler_map(const Poly& p) {
    if (p.laurent()) throw DomainError("Euler map rejects Laurent input");
    if (!p.is_homogeneous()) throw DomainError("Euler map requires homogeneous input");
    int n = p.nvars();
    int k = std::max(p.degree(), 0);
    TensorElement r(n, k + 1, 1);
    for (const auto& [e, c] : p.terms()) {
        for (int i = 0; i < n; ++i) {
            ExpVec a = e;
            ++a[i];
            ExpVec b(n, 0);
            b[i] = 1;
            r.add_term(a, b, c);
        }
    }
    return r;
}

TensorElement psi_map(const TensorElement& t) {
    int k = t.xdeg(), l = t.ddeg();
    if (k < l - 1) throw DomainError("psi requires xdeg >= ddeg - 1");
    int n = t.n();
    TensorElement r(n, k - l + 1, 1);
    for (const auto& [key, c] : t.terms()) {
        const ExpVec& a = key.first;
        const ExpVec& b = key.second;
        for (int i = 0; i < n; ++i) {
            // Apply Q(d) = d^b to the polynomial x^a * x_i.
            ExpVec a2 = a;
            ++a2[i];
            bool ok = true;
            Int factor = 1;
            ExpVec e(n);
            for (int m = 0; m < n; ++m) {
                if (a2[m] < b[m]) {
                    ok = false;
                    break;
                }
                factor *= falling_factorial(a2[m], b[m]);
                e[m] = a2[m] - b[m];
            }
            if (!ok) continue;
            ExpVec d(n, 0);
            d[i] = 1;
            r.add_term(e, d, c * Rat(factor));
        }
    }
    return r;
}

namespace {

// Parses a juxtaposed monomial like "x1^2x2" (or "1") with the given
// variable letter; returns the exponent vector.
ExpVec parse_side_monomial(const std::string& s, int n, char letter) {
    ExpVec e(n, 0);
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    skip_ws();
    if (pos < s.size() && s[pos] == '1' &&
        (pos + 1 == s.size() || std::isspace(static_cast<unsigned char>(s[pos + 1])))) {
        return e;  // empty monomial written as "1"
    }
    while (pos < s.size()) {
        skip_ws();
        if (pos == s.size()) break;
        if (s[pos] != letter)
            throw ParseError(std::string("expected '") + letter + "' in tensor monomial",
                             1, static_cast<int>(pos) + 1);
        ++pos;
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos)
            throw ParseError("expected variable index", 1, static_cast<int>(pos) + 1);
        int idx = std::stoi(s.substr(start, pos - start));
        if (idx < 1 || idx > n)
            throw ParseError("variable index out of range", 1, static_cast<int>(start) + 1);
        int exp = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos)
                throw ParseError("expected exponent", 1, static_cast<int>(pos) + 1);
            exp = std::stoi(s.substr(start, pos - start));
        }
        e[idx - 1] += exp;
    }
    return e;
}

void print_side_monomial(std::ostream& os, const ExpVec& e, char letter) {
    bool any = false;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        any = true;
        os << letter << (i + 1);
        if (e[i] != 1) os << '^' << e[i];
    }
    if (!any) os << '1';
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

std::string TensorElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rat_to_string(c) << '*';
        print_side_monomial(os, k.first, 'x');
        os << '|';
        print_side_monomial(os, k.second, 'd');
    }
    return os.str();
}

TensorElement TensorElement::parse(const std::string& text, int n) {
    std::string body = trim(text);
    if (body == "0" || body.empty()) return TensorElement(n, 0, 0);
    TensorElement out;
    bool have_degree = false;
    size_t pos = 0;
    while (pos <= body.size()) {
        size_t next = body.find(" + ", pos);
        std::string chunk = trim(next == std::string::npos ? body.substr(pos)
                                                           : body.substr(pos, next - pos));
        if (chunk.empty())
            throw ParseError("empty tensor term", 1, static_cast<int>(pos) + 1);
        size_t star = chunk.find('*');
        if (star == std::string::npos)
            throw ParseError("tensor term needs 'coef*'", 1, static_cast<int>(pos) + 1);
        Rat c;
        try {
            c = rat_from_string(trim(chunk.substr(0, star)));
        } catch (const std::exception&) {
            throw ParseError("malformed tensor coefficient", 1, static_cast<int>(pos) + 1);
        }
        size_t bar = chunk.find('|', star);
        if (bar == std::string::npos)
            throw ParseError("tensor term needs '|'", 1, static_cast<int>(pos) + 1);
        ExpVec a = parse_side_monomial(trim(chunk.substr(star + 1, bar - star - 1)), n, 'x');
        ExpVec b = parse_side_monomial(trim(chunk.substr(bar + 1)), n, 'd');
        if (!have_degree) {
            out = TensorElement(n, total_degree(a), total_degree(b));
            have_degree = true;
        }
        out.add_term(a, b, c);
        if (next == std::string::npos) break;
        pos = next + 3;
    }
    return out;
}

}  // namespace kwb
