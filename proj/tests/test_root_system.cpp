#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "kwb/root_system.hpp"
#include "test_util.hpp"

using namespace kwb;

namespace {

Weight W(std::vector<long> l) { return Weight(std::move(l)); }

// All dominant weights of the given rank with label sum <= maxsum.
std::vector<Weight> dominant_weights(int rank, long maxsum) {
    std::vector<Weight> out;
    std::vector<long> cur(rank, 0);
    auto rec = [&](auto&& self, int pos, long left) -> void {
        if (pos == rank) {
            out.push_back(Weight(cur));
            return;
        }
        for (long v = 0; v <= left; ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, maxsum);
    return out;
}

Weight random_weight(std::mt19937_64& rng, int rank, long lo, long hi) {
    std::vector<long> l(rank);
    for (auto& v : l) v = lo + static_cast<long>(rng() % (hi - lo + 1));
    return Weight(std::move(l));
}

}  // namespace

TEST_CASE("pairing examples") {
    RootSystemA rs(3);
    CHECK(rs.pairing(Weight::fundamental(2, 1), PosRoot{1, 1}) == 1);
    CHECK(rs.pairing(rs.simple_root(1), PosRoot{1, 1}) == 2);
    CHECK(rs.pairing(W({1, 1}), PosRoot{1, 2}) == 2);
}

TEST_CASE("fundamental weights pair to Kronecker delta on simple roots") {
    for (int N = 2; N <= 6; ++N) {
        RootSystemA rs(N);
        for (int j = 1; j <= rs.rank(); ++j)
            for (int i = 1; i <= rs.rank(); ++i)
                CHECK(rs.pairing(Weight::fundamental(rs.rank(), j), PosRoot{i, i}) ==
                      (i == j ? 1 : 0));
    }
}

TEST_CASE("dominance flag") {
    RootSystemA rs(3);
    CHECK(rs.is_dominant(Weight::fundamental(2, 1)));
    CHECK_FALSE(rs.is_dominant(rs.simple_root(1)));  // labels (2,-1)
    CHECK(rs.is_dominant(Weight::zero(2)));
}

TEST_CASE("partial order examples") {
    RootSystemA rs(3);
    Weight w1 = Weight::fundamental(2, 1);
    CHECK(rs.preceq(w1, w1));
    CHECK_FALSE(rs.preceq(rs.simple_root(1), W({2, 0})));
    CHECK(rs.preceq(w1 - rs.simple_root(1), w1));
}

TEST_CASE("partial order axioms on randomized triples") {
    std::mt19937_64 rng(41);
    RootSystemA rs(4);
    for (int t = 0; t < 200; ++t) {
        Weight a = random_weight(rng, 3, -3, 3);
        Weight b = random_weight(rng, 3, -3, 3);
        Weight c = random_weight(rng, 3, -3, 3);
        CHECK(rs.preceq(a, a));
        if (rs.preceq(a, b) && rs.preceq(b, a)) CHECK(a == b);
        if (rs.preceq(a, b) && rs.preceq(b, c)) CHECK(rs.preceq(a, c));
    }
}

TEST_CASE("Weyl images of a dominant weight stay below it") {
    std::mt19937_64 rng(42);
    for (int N = 2; N <= 5; ++N) {
        RootSystemA rs(N);
        for (int t = 0; t < 10; ++t) {
            Weight lam = random_weight(rng, rs.rank(), 0, 2);
            for (const Weight& mu : rs.weyl_orbit(lam)) CHECK(rs.preceq(mu, lam));
        }
    }
}

TEST_CASE("orbit of zero is a point") {
    RootSystemA rs(4);
    auto orbit = rs.weyl_orbit(Weight::zero(3));
    CHECK(orbit.size() == 1);
    CHECK(orbit[0] == Weight::zero(3));
}

TEST_CASE("orbit of the first fundamental weight lists the standard weights") {
    RootSystemA rs(3);
    Weight w1 = Weight::fundamental(2, 1);
    auto orbit = rs.weyl_orbit(w1);
    CHECK(orbit.size() == 3);
    auto contains = [&](const Weight& w) {
        return std::find(orbit.begin(), orbit.end(), w) != orbit.end();
    };
    CHECK(contains(w1));
    CHECK(contains(w1 - rs.simple_root(1)));
    CHECK(contains(w1 - rs.simple_root(1) - rs.simple_root(2)));
}

TEST_CASE("orbit of rho has full Weyl-group size") {
    RootSystemA rs(3);
    CHECK(rs.weyl_orbit(rs.rho()).size() == 6);
}

TEST_CASE("minuscule classification in small rank") {
    for (int N = 2; N <= 6; ++N) {
        RootSystemA rs(N);
        for (int j = 1; j <= rs.rank(); ++j)
            CHECK(rs.is_minuscule(Weight::fundamental(rs.rank(), j)));
        CHECK_FALSE(rs.is_minuscule(Weight::zero(rs.rank())));
        CHECK_FALSE(rs.is_minuscule(W(std::vector<long>(rs.rank(), 0)) +
                                    2 * Weight::fundamental(rs.rank(), 1)));
    }
    RootSystemA rs3(3);
    CHECK_THROWS_AS(rs3.is_minuscule(rs3.simple_root(1)), DomainError);
}

TEST_CASE("dimension formula examples") {
    RootSystemA rs(3);
    CHECK(rs.weyl_dim(W({1, 1})) == 8);
    CHECK(rs.weyl_dim(Weight::zero(2)) == 1);
    CHECK(rs.weyl_dim(W({2, 0})) == 6);
    CHECK_THROWS_AS(rs.weyl_dim(rs.simple_root(1)), DomainError);
}

TEST_CASE("symmetric power dimensions") {
    for (int N = 2; N <= 6; ++N) {
        RootSystemA rs(N);
        for (long k = 1; k <= 8; ++k) {
            Weight lam = k * Weight::fundamental(rs.rank(), 1);
            CHECK(rs.weyl_dim(lam) == binomial(N + k - 1, k));
        }
    }
}

TEST_CASE("denominator of the dimension formula is a superfactorial") {
    for (int N = 2; N <= 6; ++N) {
        RootSystemA rs(N);
        Int prod = 1;
        for (const PosRoot& b : rs.positive_roots()) {
            CHECK(rs.pairing(rs.rho(), b) == b.hi - b.lo + 1);
            prod *= rs.pairing(rs.rho(), b);
        }
        Int expected = 1;
        for (int m = 2; m <= N - 1; ++m) expected *= factorial(m);
        CHECK(prod == expected);
    }
}

TEST_CASE("dual weight") {
    RootSystemA rs(4);
    CHECK(rs.dual_weight(Weight::fundamental(3, 1)) == Weight::fundamental(3, 3));
    CHECK(rs.dual_weight(Weight::zero(3)) == Weight::zero(3));
    CHECK(rs.dual_weight(W({3, 0, 0})) == W({0, 0, 3}));
    std::mt19937_64 rng(43);
    for (int t = 0; t < 20; ++t) {
        Weight lam = random_weight(rng, 3, 0, 3);
        CHECK(rs.dual_weight(rs.dual_weight(lam)) == lam);
        CHECK(rs.weyl_dim(lam) == rs.weyl_dim(rs.dual_weight(lam)));
    }
}

TEST_CASE("partition coordinates round-trip") {
    RootSystemA rs(4);
    for (const Weight& w : dominant_weights(3, 4)) {
        auto p = rs.to_partition(w);
        CHECK(p.back() == 0);
        CHECK(std::is_sorted(p.rbegin(), p.rend()));
        CHECK(rs.from_partition(p) == w);
    }
}

TEST_CASE("weight serialization") {
    CHECK(Weight::parse("1,0,1") == W({1, 0, 1}));
    CHECK(Weight::parse("-2, 3") == W({-2, 3}));
    CHECK(W({1, 0, 1}).str() == "1,0,1");
    CHECK_THROWS_AS(Weight::parse("1,,2"), ParseError);
    CHECK_THROWS_AS(Weight::parse("a"), ParseError);
    CHECK(PosRoot{1, 3}.str() == "a[1..3]");
}

TEST_CASE("rank guards") {
    CHECK_THROWS_AS(RootSystemA(1), DomainError);
    CHECK_THROWS_AS(RootSystemA(9), ResourceError);
}

TEST_CASE("positive root count") {
    for (int N = 2; N <= 8; ++N)
        CHECK(static_cast<int>(RootSystemA(N).positive_roots().size()) ==
              N * (N - 1) / 2);
}
