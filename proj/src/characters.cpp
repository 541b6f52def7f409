#include "kwb/characters.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <numeric>
#include <sstream>

namespace kwb {

namespace {

constexpr int kMaxCharDegree = 40;

void check_degree_guard(int deg) {
    if (deg > kMaxCharDegree)
        throw ResourceError("character degree guard: total degree <= 40");
}

bool is_symmetric(const Poly& p, int n) {
    for (int i = 0; i + 1 < n; ++i)
        if (!(swap_vars(p, i, i + 1) == p)) return false;
    return true;
}

// Subtracts the per-poly minimal exponent column (x_1...x_N)^c so the
// canonical representative has minimal exponent 0.
Poly column_normalize(const Poly& p, int n) {
    if (p.is_zero()) return p;
    int c = INT_MAX;
    for (const auto& [e, coef] : p.terms())
        c = std::min(c, *std::min_element(e.begin(), e.end()));
    if (c == 0) return p;
    Poly r(n);
    for (const auto& [e, coef] : p.terms()) {
        ExpVec s = e;
        for (int& x : s) x -= c;
        r.add_term(s, coef);
    }
    return r;
}

// Schur polynomial of an arbitrary partition (weakly decreasing, entries
// >= 0, length N) by the alternant ratio: the antisymmetrized monomial
// x^(p+delta) divided exactly by the Vandermonde.
Poly schur_of_partition(int n, const std::vector<long>& p) {
    long size = std::accumulate(p.begin(), p.end(), 0L);
    check_degree_guard(static_cast<int>(size));
    // Shifted exponents q = p + delta, delta = (N-1, ..., 1, 0).
    std::vector<int> q(n);
    for (int i = 0; i < n; ++i) q[i] = static_cast<int>(p[i]) + (n - 1 - i);
    Poly numerator(n);
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end());
    do {
        // Parity of the permutation idx.
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (idx[i] > idx[j]) ++inversions;
        ExpVec e(n);
        for (int i = 0; i < n; ++i) e[i] = q[idx[i]];
        numerator.add_term(e, (inversions % 2 == 0) ? 1 : -1);
    } while (std::next_permutation(idx.begin(), idx.end()));
    // Divide by the Vandermonde, one binomial x_i - x_j at a time.
    Poly result = numerator;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Poly binom = Poly::variable(n, i) - Poly::variable(n, j);
            result = divide_exact(result, binom);
        }
    }
    return result;
}

}  // namespace

CharClassFn character_of(const RootSystemA& rs, const Weight& lambda) {
    if (!rs.is_dominant(lambda))
        throw DomainError("character requires a dominant weight");
    std::vector<long> p = rs.to_partition(lambda);
    return CharClassFn{rs.N(), schur_of_partition(rs.N(), p)};
}

CharClassFn char_one(int n) { return CharClassFn{n, Poly::constant(n, 1)}; }

CharClassFn char_mul(const CharClassFn& a, const CharClassFn& b) {
    if (a.n != b.n) throw DimensionError("class-function rank mismatch");
    Poly prod = a.poly * b.poly;
    check_degree_guard(prod.degree());
    return CharClassFn{a.n, column_normalize(prod, a.n)};
}

CharClassFn char_add(const CharClassFn& a, const CharClassFn& b) {
    if (a.n != b.n) throw DimensionError("class-function rank mismatch");
    return CharClassFn{a.n, column_normalize(a.poly + b.poly, a.n)};
}

CharClassFn char_scale(const Rat& c, const CharClassFn& a) {
    return CharClassFn{a.n, a.poly * c};
}

SchurExpansion schur_decompose(const CharClassFn& f) {
    int n = f.n;
    if (!is_symmetric(f.poly, n))
        throw DomainError("decomposition requires a symmetric polynomial");
    check_degree_guard(std::max(f.poly.degree(), 0));
    RootSystemA rs(n);
    SchurExpansion out;
    Poly rem = f.poly;
    while (!rem.is_zero()) {
        const auto& [lead, c] = *rem.terms().begin();
        std::vector<long> p(lead.begin(), lead.end());
        if (!std::is_sorted(p.rbegin(), p.rend()) || p.back() < 0)
            throw DomainError("leading monomial is not a partition; input is not symmetric");
        Weight w = rs.from_partition(p);
        out[w] += c;
        if (out[w] == 0) out.erase(w);
        rem -= schur_of_partition(n, p) * c;
    }
    return out;
}

SchurExpansion tensor_decompose(const RootSystemA& rs, const Weight& lambda,
                                const Weight& mu) {
    if (lambda.rank() != rs.rank() || mu.rank() != rs.rank())
        throw DimensionError("weight rank does not match root system");
    if (!rs.is_dominant(lambda) || !rs.is_dominant(mu))
        throw DomainError("tensor decomposition requires dominant weights");
    return schur_decompose(char_mul(character_of(rs, lambda), character_of(rs, mu)));
}

std::map<Weight, Int> weight_multiplicities(const RootSystemA& rs,
                                            const Weight& lambda) {
    CharClassFn ch = character_of(rs, lambda);
    std::map<Weight, Int> out;
    for (const auto& [e, c] : ch.poly.terms()) {
        std::vector<long> p(e.begin(), e.end());
        Weight w = rs.from_partition(p);
        if (c.get_den() != 1 || c < 0)
            throw DomainError("non-integer weight multiplicity");
        out[w] += Int(c.get_num());
    }
    return out;
}

Rat haar_integral_class(const CharClassFn& f) {
    SchurExpansion e = schur_decompose(f);
    auto it = e.find(Weight::zero(f.n - 1));
    return it == e.end() ? Rat(0) : it->second;
}

CharClassFn expansion_to_class_fn(const RootSystemA& rs, const SchurExpansion& e) {
    CharClassFn total{rs.N(), Poly(rs.N())};
    for (const auto& [w, c] : e) {
        if (w.rank() != rs.rank())
            throw DimensionError("weight rank does not match root system");
        total = char_add(total, char_scale(c, character_of(rs, w)));
    }
    return total;
}

ScanReport mathieu_scan_class(const RootSystemA& rs, const SchurExpansion& f,
                              const SchurExpansion& h, int nmax) {
    if (nmax < 1) throw DomainError("scan horizon must be >= 1");
    CharClassFn fc = expansion_to_class_fn(rs, f);
    CharClassFn hc = expansion_to_class_fn(rs, h);
    ScanReport rep;
    rep.nmax = nmax;
    CharClassFn power = char_one(rs.N());
    for (int n = 1; n <= nmax; ++n) {
        power = char_mul(power, fc);
        rep.a.push_back(haar_integral_class(power));
        rep.b.push_back(haar_integral_class(char_mul(power, hc)));
    }
    rep.hypothesis_holds =
        std::all_of(rep.a.begin(), rep.a.end(), [](const Rat& r) { return r == 0; });
    int n0 = nmax + 1;
    for (int n = nmax; n >= 1 && rep.b[n - 1] == 0; --n) n0 = n;
    if (n0 <= nmax) rep.first_all_zero_b = n0;
    return rep;
}

SchurExpansion parse_char_combo(const std::string& text, int rank) {
    SchurExpansion out;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& msg) -> void {
        throw ParseError(msg, 1, static_cast<int>(pos) + 1);
    };
    skip_ws();
    if (pos == text.size()) fail("empty character combination");
    bool first = true;
    while (pos < text.size()) {
        skip_ws();
        Rat sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = -1;
            ++pos;
            skip_ws();
        } else if (!first) {
            fail("expected '+' or '-' between terms");
        }
        first = false;
        // Optional rational coefficient followed by '*'.
        Rat coef = 1;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            size_t start = pos;
            while (pos < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
                ++pos;
            try {
                coef = rat_from_string(text.substr(start, pos - start));
            } catch (const std::exception&) {
                fail("malformed coefficient");
            }
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
            }
        }
        if (pos >= text.size() || text[pos] != '[') fail("expected '['");
        size_t close = text.find(']', pos);
        if (close == std::string::npos) fail("unterminated '['");
        Weight w = Weight::parse(text.substr(pos + 1, close - pos - 1));
        if (w.rank() != rank)
            throw ParseError("weight rank does not match --n", 1, static_cast<int>(pos) + 1);
        pos = close + 1;
        out[w] += sign * coef;
        if (out[w] == 0) out.erase(w);
        skip_ws();
    }
    return out;
}

std::string print_char_combo(const SchurExpansion& e) {
    if (e.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : e) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << '-'; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1) os << rat_to_string(a) << '*';
        os << '[' << w.str() << ']';
    }
    return os.str();
}

}  // namespace kwb
