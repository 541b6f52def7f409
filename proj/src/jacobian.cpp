#include "kwb/jacobian.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "kwb/poly_io.hpp"

namespace kwb {

namespace {

constexpr int kMaxPipelineDegree = 64;

// Enumerates all alpha in N_0^n with |alpha| = k.
void for_each_multi_index(int n, int k, ExpVec& cur, int pos,
                          const std::function<void(const ExpVec&)>& fn) {
    if (pos == n - 1) {
        cur[pos] = k;
        fn(cur);
        return;
    }
    for (int v = 0; v <= k; ++v) {
        cur[pos] = v;
        for_each_multi_index(n, k - v, cur, pos + 1, fn);
    }
}

void for_each_multi_index(int n, int k, const std::function<void(const ExpVec&)>& fn) {
    ExpVec cur(n, 0);
    if (n == 0) return;
    for_each_multi_index(n, k, cur, 0, fn);
}

Rat inv_multi_factorial(const ExpVec& alpha) {
    Int f = 1;
    for (int a : alpha) f *= factorial(static_cast<unsigned>(a));
    return Rat(1) / Rat(f);
}

Poly det_recursive(const std::vector<std::vector<Poly>>& m, std::vector<int> cols,
                   int row) {
    int n = static_cast<int>(m.size());
    if (row == n) return Poly::constant(m[0][0].nvars(), 1);
    Poly acc(m[0][0].nvars());
    for (size_t ci = 0; ci < cols.size(); ++ci) {
        const Poly& entry = m[row][cols[ci]];
        if (entry.is_zero()) continue;
        std::vector<int> rest;
        for (size_t cj = 0; cj < cols.size(); ++cj)
            if (cj != ci) rest.push_back(cols[cj]);
        Poly minor = det_recursive(m, rest, row + 1);
        Poly term = entry * minor;
        acc += (ci % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace

PolyMap make_poly_map(int n, int d, std::vector<Poly> h) {
    if (n < 1) throw DimensionError("map dimension must be >= 1");
    if (d < 2) throw DomainError("homogeneity degree must be >= 2");
    if (static_cast<int>(h.size()) != n)
        throw DimensionError("component count does not match dimension");
    for (const Poly& hi : h) {
        if (hi.nvars() != n)
            throw DimensionError("component variable count does not match dimension");
        if (hi.laurent()) throw DomainError("map components must not be Laurent");
        if (!hi.is_zero() && (!hi.is_homogeneous() || hi.degree() != d))
            throw DomainError("each h_i must be zero or homogeneous of degree d");
    }
    return PolyMap{n, d, std::move(h)};
}

Poly map_component(const PolyMap& f, int i) {
    return Poly::variable(f.n, i) - f.h[i];
}

std::vector<Poly> map_components(const PolyMap& f) {
    std::vector<Poly> out;
    out.reserve(f.n);
    for (int i = 0; i < f.n; ++i) out.push_back(map_component(f, i));
    return out;
}

Poly jacobian_det(const PolyMap& f) {
    std::vector<std::vector<Poly>> J(f.n, std::vector<Poly>(f.n));
    for (int i = 0; i < f.n; ++i)
        for (int j = 0; j < f.n; ++j) J[i][j] = partial_derive(map_component(f, i), j);
    std::vector<int> cols(f.n);
    for (int j = 0; j < f.n; ++j) cols[j] = j;
    return det_recursive(J, cols, 0);
}

FormalInverse formal_inverse(const PolyMap& f, int D) {
    if (D < 1) throw DomainError("truncation degree must be >= 1");
    std::vector<Poly> G;
    for (int i = 0; i < f.n; ++i) G.push_back(Poly::variable(f.n, i));
    // Each pass is exact one degree further; D passes reach stability.
    for (int pass = 0; pass <= D; ++pass) {
        std::vector<Poly> next;
        next.reserve(f.n);
        bool stable = true;
        for (int i = 0; i < f.n; ++i) {
            Poly gi = Poly::variable(f.n, i) + substitute(f.h[i], G, D);
            stable = stable && gi == G[i];
            next.push_back(std::move(gi));
        }
        G = std::move(next);
        if (stable) break;
    }
    // Verify both compositions before handing the inverse out.
    std::vector<Poly> fc = map_components(f);
    for (int i = 0; i < f.n; ++i) {
        Poly xi = Poly::variable(f.n, i);
        if (!(substitute(fc[i], G, D) == xi) || !(substitute(G[i], fc, D) == xi))
            throw Error("formal inverse failed its composition check");
    }
    return FormalInverse{f.n, D, std::move(G)};
}

FormalInverse abcw_inverse(const PolyMap& f, int D) {
    if (D < 1) throw DomainError("truncation degree must be >= 1");
    int n = f.n, d = f.d;
    // Precompute the powers h_m^j that any alpha below the bound can use.
    int kbound = (D - 1) / (d - 1);
    std::vector<std::vector<Poly>> hpow(n);
    for (int m = 0; m < n; ++m) {
        hpow[m].push_back(Poly::constant(n, 1));
        for (int j = 1; j <= kbound; ++j) hpow[m].push_back(hpow[m][j - 1] * f.h[m]);
    }
    std::vector<Poly> F;
    for (int i = 0; i < n; ++i) {
        Poly Fi(n);
        for (int k = 0; k * (d - 1) + 1 <= D; ++k) {
            for_each_multi_index(n, k, [&](const ExpVec& alpha) {
                Poly prod = Poly::variable(n, i);
                for (int m = 0; m < n && !prod.is_zero(); ++m)
                    if (alpha[m] > 0) prod = prod * hpow[m][alpha[m]];
                if (prod.is_zero()) return;
                Fi += partial_derive_multi(prod, alpha) * inv_multi_factorial(alpha);
            });
        }
        F.push_back(std::move(Fi));
    }
    return FormalInverse{n, D, std::move(F)};
}

Poly bracket_U_f(const Poly& U, const PolyMap& f, int D) {
    if (U.laurent()) throw DomainError("bracket rejects Laurent input");
    if (U.nvars() != f.n) throw DimensionError("variable-count mismatch");
    int n = f.n, d = f.d;
    int degU = std::max(U.degree(), 0);
    // U(f) and det J(f) are plain polynomials; compose exactly.
    Poly Uf = substitute(U, map_components(f), degU * d + 1);
    Poly jf = jacobian_det(f);
    Poly base = Uf * jf;
    // Terms with |alpha| = k live in degrees >= k(d-1); anything beyond the
    // bound below cannot reach degree D.
    int kbound = (D + degU) / (d - 1);
    std::vector<std::vector<Poly>> hpow(n);
    for (int m = 0; m < n; ++m) {
        hpow[m].push_back(Poly::constant(n, 1));
        for (int j = 1; j <= kbound; ++j) hpow[m].push_back(hpow[m][j - 1] * f.h[m]);
    }
    Poly total(n);
    for (int k = 0; k <= kbound; ++k) {
        for_each_multi_index(n, k, [&](const ExpVec& alpha) {
            Poly prod = base;
            for (int m = 0; m < n && !prod.is_zero(); ++m)
                if (alpha[m] > 0) prod = prod * hpow[m][alpha[m]];
            if (prod.is_zero()) return;
            total += partial_derive_multi(prod, alpha) * inv_multi_factorial(alpha);
        });
    }
    return truncate(total, D);
}

TensorElement build_Q(const PolyMap& f) {
    TensorElement q(f.n, f.d, 1);
    for (int i = 0; i < f.n; ++i) {
        if (f.h[i].is_zero()) continue;
        ExpVec b(f.n, 0);
        b[i] = 1;
        q += TensorElement::from_poly(f.h[i], b);
    }
    return q;
}

PipelineReport q_pipeline(const PolyMap& f, int kmax) {
    if (kmax < 1) throw DomainError("kmax must be >= 1");
    if (kmax * (f.d - 1) + 1 > kMaxPipelineDegree)
        throw ResourceError("pipeline degree guard: kmax(d-1)+1 <= 64");
    Poly det = jacobian_det(f);
    if (!(det == Poly::constant(f.n, 1)))
        throw PreconditionError("map is not Keller: det J(f) = " + print_poly(det));
    int D = kmax * (f.d - 1) + 1;
    FormalInverse inv = formal_inverse(f, D);
    PipelineReport rep;
    rep.det = "1";
    TensorElement Q = build_Q(f);
    TensorElement Qk(f.n, 0, 0);
    bool have_qk = false;
    for (int k = 1; k <= kmax; ++k) {
        Qk = have_qk ? tensor_mul(Qk, Q) : Q;
        have_qk = true;
        PipelineRecord rec;
        rec.k = k;
        rec.div_zero = div_map(Qk).is_zero();
        TensorElement psi = psi_map(Qk);
        int deg = k * (f.d - 1) + 1;
        TensorElement expected(f.n, deg, 1);
        Rat kfact(factorial(static_cast<unsigned>(k)));
        for (int i = 0; i < f.n; ++i) {
            Poly comp = homogeneous_component(inv.F[i], deg);
            if (comp.is_zero()) continue;
            ExpVec b(f.n, 0);
            b[i] = 1;
            expected += TensorElement::from_poly(comp * kfact, b);
        }
        rec.psi_matches_inverse = psi == expected;
        rec.psi_is_zero = psi.is_zero();
        rep.records.push_back(rec);
    }
    return rep;
}

PolyMap random_tame_map(int n, int d, std::uint64_t seed) {
    if (n < 2) throw DomainError("triangular maps need n >= 2");
    if (d < 2) throw DomainError("homogeneity degree must be >= 2");
    std::mt19937_64 rng(seed);
    std::vector<Poly> h;
    for (int i = 0; i < n; ++i) {
        Poly hi(n);
        // h_i draws monomials of degree d in the later variables only.
        int later = n - 1 - i;
        if (later > 0) {
            for_each_multi_index(later, d, [&](const ExpVec& alpha) {
                long c = static_cast<long>(rng() % 7) - 3;  // uniform in [-3, 3]
                if (c == 0) return;
                ExpVec e(n, 0);
                for (int m = 0; m < later; ++m) e[i + 1 + m] = alpha[m];
                hi.add_term(e, c);
            });
        }
        h.push_back(std::move(hi));
    }
    return make_poly_map(n, d, std::move(h));
}

PolyMap parse_map_file(const std::string& content) {
    std::istringstream is(content);
    std::string line;
    int lineno = 0;
    int n = -1, d = -1;
    std::vector<std::pair<int, std::pair<std::string, int>>> hlines;  // (index, (rhs, line))
    while (std::getline(is, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        line = line.substr(a, b - a + 1);
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = value'", lineno, 1);
        std::string key = line.substr(0, eq);
        while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back())))
            key.pop_back();
        std::string value = line.substr(eq + 1);
        if (key == "n" || key == "d") {
            int v;
            try {
                v = std::stoi(value);
            } catch (const std::exception&) {
                throw ParseError("malformed integer for '" + key + "'", lineno, 1);
            }
            (key == "n" ? n : d) = v;
        } else if (key.size() >= 2 && key[0] == 'h') {
            int idx;
            try {
                idx = std::stoi(key.substr(1));
            } catch (const std::exception&) {
                throw ParseError("unknown key '" + key + "'", lineno, 1);
            }
            hlines.emplace_back(idx, std::make_pair(value, lineno));
        } else {
            throw ParseError("unknown key '" + key + "'", lineno, 1);
        }
    }
    if (n < 1) throw ParseError("missing or invalid 'n'", lineno, 1);
    if (d < 2) throw ParseError("missing or invalid 'd'", lineno, 1);
    std::vector<Poly> h(n, Poly(n));
    for (const auto& [idx, rhs] : hlines) {
        if (idx < 1 || idx > n)
            throw ParseError("component index out of range in 'h" + std::to_string(idx) + "'",
                             rhs.second, 1);
        try {
            h[idx - 1] = parse_poly(rhs.first, n);
        } catch (const ParseError& e) {
            throw ParseError(std::string("in h") + std::to_string(idx) + ": " + e.what(),
                             rhs.second, e.col);
        }
    }
    return make_poly_map(n, d, std::move(h));
}

PolyMap load_map_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open map file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_map_file(ss.str());
}

}  // namespace kwb
