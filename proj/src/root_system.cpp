#include "kwb/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace kwb {

Weight Weight::fundamental(int rank, int j) {
    if (j < 1 || j > rank) throw DimensionError("fundamental-weight index out of range");
    std::vector<long> l(rank, 0);
    l[j - 1] = 1;
    return Weight(std::move(l));
}

Weight Weight::parse(const std::string& text) {
    std::vector<long> labels;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        size_t used = 0;
        long v;
        try {
            v = std::stol(tok, &used);
        } catch (const std::exception&) {
            throw ParseError("malformed weight label '" + tok + "'", 1, 1);
        }
        while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
        if (used != tok.size())
            throw ParseError("malformed weight label '" + tok + "'", 1, 1);
        labels.push_back(v);
    }
    if (labels.empty()) throw ParseError("empty weight", 1, 1);
    return Weight(std::move(labels));
}

std::string Weight::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i) os << ',';
        os << labels[i];
    }
    return os.str();
}

Weight operator+(const Weight& a, const Weight& b) {
    if (a.rank() != b.rank()) throw DimensionError("weight rank mismatch");
    Weight r = a;
    for (int i = 0; i < a.rank(); ++i) r.labels[i] += b.labels[i];
    return r;
}

Weight operator-(const Weight& a, const Weight& b) {
    if (a.rank() != b.rank()) throw DimensionError("weight rank mismatch");
    Weight r = a;
    for (int i = 0; i < a.rank(); ++i) r.labels[i] -= b.labels[i];
    return r;
}

Weight operator*(long k, const Weight& a) {
    Weight r = a;
    for (auto& l : r.labels) l *= k;
    return r;
}

std::string PosRoot::str() const {
    std::ostringstream os;
    os << "a[" << lo << ".." << hi << "]";
    return os.str();
}

RootSystemA::RootSystemA(int N) : n_(N) {
    if (N < 2) throw DomainError("A_{N-1} requires N >= 2");
    if (N > 8) throw ResourceError("rank guard: N <= 8");
    for (int i = 1; i <= N - 1; ++i)
        for (int j = i; j <= N - 1; ++j) pos_roots_.push_back({i, j});
    // Exact inverse of the A_{N-1} Cartan matrix:
    // (M^-1)_{ij} = min(i,j) * (N - max(i,j)) / N.
    int r = N - 1;
    inv_cartan_.assign(r, std::vector<Rat>(r));
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j)
            inv_cartan_[i - 1][j - 1] =
                make_rat(std::min(i, j) * (N - std::max(i, j)), N);
}

Weight RootSystemA::simple_root(int i) const {
    if (i < 1 || i > rank()) throw DimensionError("simple-root index out of range");
    std::vector<long> l(rank(), 0);
    l[i - 1] = 2;
    if (i - 2 >= 0) l[i - 2] = -1;
    if (i < rank()) l[i] = -1;
    return Weight(std::move(l));
}

void RootSystemA::check_rank(const Weight& w) const {
    if (w.rank() != rank()) throw DimensionError("weight rank does not match root system");
}

long RootSystemA::pairing(const Weight& lambda, const PosRoot& beta) const {
    check_rank(lambda);
    if (beta.lo < 1 || beta.hi > rank() || beta.lo > beta.hi)
        throw DimensionError("positive-root interval out of range");
    long s = 0;
    for (int k = beta.lo; k <= beta.hi; ++k) s += lambda.labels[k - 1];
    return s;
}

bool RootSystemA::is_dominant(const Weight& lambda) const {
    check_rank(lambda);
    return std::all_of(lambda.labels.begin(), lambda.labels.end(),
                       [](long l) { return l >= 0; });
}

bool RootSystemA::preceq(const Weight& mu, const Weight& lambda) const {
    check_rank(mu);
    check_rank(lambda);
    Weight d = lambda - mu;
    for (int i = 0; i < rank(); ++i) {
        Rat c = 0;
        for (int j = 0; j < rank(); ++j) c += inv_cartan_[i][j] * Rat(d.labels[j]);
        if (c < 0 || c.get_den() != 1) return false;
    }
    return true;
}

std::vector<long> RootSystemA::to_partition(const Weight& lambda) const {
    check_rank(lambda);
    std::vector<long> p(n_, 0);
    for (int i = n_ - 2; i >= 0; --i) p[i] = p[i + 1] + lambda.labels[i];
    return p;
}

Weight RootSystemA::from_partition(const std::vector<long>& p) const {
    if (static_cast<int>(p.size()) != n_)
        throw DimensionError("partition length does not match N");
    std::vector<long> l(rank());
    for (int i = 0; i < rank(); ++i) l[i] = p[i] - p[i + 1];
    return Weight(std::move(l));
}

std::vector<Weight> RootSystemA::weyl_orbit(const Weight& lambda) const {
    check_rank(lambda);
    std::vector<long> p = to_partition(lambda);
    std::sort(p.begin(), p.end());
    std::set<Weight> orbit;
    do {
        orbit.insert(from_partition(p));
    } while (std::next_permutation(p.begin(), p.end()));
    return std::vector<Weight>(orbit.begin(), orbit.end());
}

bool RootSystemA::is_minuscule(const Weight& lambda) const {
    if (!is_dominant(lambda)) throw DomainError("minuscule test requires a dominant weight");
    if (lambda.is_zero()) return false;
    for (const PosRoot& beta : pos_roots_) {
        long v = pairing(lambda, beta);
        if (v != 0 && v != 1) return false;
    }
    return true;
}

Int RootSystemA::weyl_dim(const Weight& lambda) const {
    if (!is_dominant(lambda))
        throw DomainError("Weyl dimension formula requires a dominant weight");
    Weight shifted = lambda + rho();
    Int num = 1, den = 1;
    for (const PosRoot& beta : pos_roots_) {
        num *= pairing(shifted, beta);
        den *= pairing(rho(), beta);
    }
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw DomainError("Weyl dimension formula did not divide exactly");
    return q;
}

Weight RootSystemA::dual_weight(const Weight& lambda) const {
    check_rank(lambda);
    Weight r = lambda;
    std::reverse(r.labels.begin(), r.labels.end());
    return r;
}

}  // namespace kwb
