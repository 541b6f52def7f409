#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kwb/poly.hpp"
#include "test_util.hpp"

using namespace kwb;

namespace {

Poly x(int nvars, int i) { return Poly::variable(nvars, i); }

// Independent brute-force product: expand into a flat list of (exponent,
// coefficient) pairs and re-collect without going through Poly::operator*.
Poly naive_mul(const Poly& p, const Poly& q) {
    std::vector<std::pair<ExpVec, Rat>> raw;
    for (const auto& [ea, ca] : p.terms())
        for (const auto& [eb, cb] : q.terms()) {
            ExpVec e(ea.size());
            for (size_t i = 0; i < ea.size(); ++i) e[i] = ea[i] + eb[i];
            raw.emplace_back(e, ca * cb);
        }
    Poly out(p.nvars(), p.laurent() || q.laurent());
    for (const auto& [e, c] : raw) out.add_term(e, c);
    return out;
}

}  // namespace

TEST_CASE("product of sum and difference") {
    Poly p = (x(2, 0) + x(2, 1)) * (x(2, 0) - x(2, 1));
    Poly expected = x(2, 0) * x(2, 0) - x(2, 1) * x(2, 1);
    CHECK(p == expected);
}

TEST_CASE("multiplicative identity") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 10; ++t) {
        Poly p = testutil::random_poly(rng, 3, 4);
        CHECK(p * Poly::constant(3, 1) == p);
    }
}

TEST_CASE("elementary symmetric product collapses to seven monomials") {
    Poly e1 = x(3, 0) + x(3, 1) + x(3, 2);
    Poly e2 = x(3, 0) * x(3, 1) + x(3, 0) * x(3, 2) + x(3, 1) * x(3, 2);
    Poly prod = e1 * e2;
    CHECK(prod.terms().size() == 7);
    CHECK(prod == naive_mul(e1, e2));
    ExpVec all_ones{1, 1, 1};
    CHECK(prod.coeff(all_ones) == 3);
}

TEST_CASE("product matches brute-force oracle") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 25; ++t) {
        Poly p = testutil::random_poly(rng, 3, 4);
        Poly q = testutil::random_poly(rng, 3, 4);
        CHECK(p * q == naive_mul(p, q));
    }
}

TEST_CASE("ring axioms on randomized triples") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 20; ++t) {
        Poly p = testutil::random_poly(rng, 2, 3);
        Poly q = testutil::random_poly(rng, 2, 3);
        Poly r = testutil::random_poly(rng, 2, 3);
        CHECK((p + q) * r == p * r + q * r);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
    }
}

TEST_CASE("degree additivity") {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 20; ++t) {
        Poly p = testutil::random_poly(rng, 2, 3);
        Poly q = testutil::random_poly(rng, 2, 3);
        if (p.is_zero() || q.is_zero()) continue;
        CHECK((p * q).degree() <= p.degree() + q.degree());
        // Leading terms cannot cancel between distinct monomial products of
        // the leading forms unless those forms multiply to zero, which they
        // cannot over an integral domain.
        CHECK((p * q).degree() == p.degree() + q.degree());
    }
}

TEST_CASE("variable-count mismatch is rejected") {
    CHECK_THROWS_AS(x(2, 0) * x(3, 0), DimensionError);
}

TEST_CASE("iterated partial derivative") {
    Poly p = pow_trunc(x(1, 0), 3);  // x^3
    Poly d = partial_derive(p, 0, 2);
    CHECK(d == x(1, 0) * Rat(6));
}

TEST_CASE("derivative in an absent variable vanishes") {
    Poly p = pow_trunc(x(2, 0), 3);
    CHECK(partial_derive(p, 1).is_zero());
}

TEST_CASE("term-wise differentiation") {
    // d/dx1 (x1^2 x2 - x2^3) = 2 x1 x2
    Poly p = x(2, 0) * x(2, 0) * x(2, 1) - pow_trunc(x(2, 1), 3);
    CHECK(partial_derive(p, 0) == x(2, 0) * x(2, 1) * Rat(2));
}

TEST_CASE("derivative rejects Laurent input") {
    Poly z = Poly::variable(1, 0, true);
    Poly zi = Poly::monomial(ExpVec{-1}, 1, true);
    CHECK_THROWS_AS(partial_derive(z + zi, 0), DomainError);
}

TEST_CASE("Leibniz rule on randomized pairs") {
    std::mt19937_64 rng(15);
    for (int t = 0; t < 20; ++t) {
        Poly p = testutil::random_poly(rng, 2, 3);
        Poly q = testutil::random_poly(rng, 2, 3);
        for (int v = 0; v < 2; ++v) {
            CHECK(partial_derive(p * q, v) ==
                  partial_derive(p, v) * q + p * partial_derive(q, v));
        }
    }
}

TEST_CASE("homogeneous component filter") {
    Poly p = Poly::constant(2, 1) + x(2, 0) + x(2, 0) * x(2, 1);
    CHECK(homogeneous_component(p, 2) == x(2, 0) * x(2, 1));
    CHECK(homogeneous_component(p, 5).is_zero());
}

TEST_CASE("components partition the polynomial") {
    std::mt19937_64 rng(16);
    for (int t = 0; t < 20; ++t) {
        Poly p = testutil::random_poly(rng, 3, 5);
        Poly sum(3);
        for (int k = 0; k <= p.degree(); ++k) sum += homogeneous_component(p, k);
        CHECK(sum == p);
    }
}

TEST_CASE("catalan truncation component") {
    // F = x + x^2 + 2x^3: the degree-3 component is 2x^3.
    Poly F = x(1, 0) + pow_trunc(x(1, 0), 2) + pow_trunc(x(1, 0), 3) * Rat(2);
    CHECK(homogeneous_component(F, 3) == pow_trunc(x(1, 0), 3) * Rat(2));
}

TEST_CASE("binomial substitution") {
    Poly p = pow_trunc(x(1, 0), 2);
    Poly image = x(2, 0) + x(2, 1);
    Poly got = substitute(p, {image}, 10);
    Poly expected = x(2, 0) * x(2, 0) + x(2, 0) * x(2, 1) * Rat(2) + x(2, 1) * x(2, 1);
    CHECK(got == expected);
}

TEST_CASE("identity substitution") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 10; ++t) {
        Poly p = testutil::random_poly(rng, 2, 4);
        std::vector<Poly> id{x(2, 0), x(2, 1)};
        CHECK(substitute(p, id, 100) == p);
    }
}

TEST_CASE("inverse composition truncates to the identity") {
    // f = x - x^2 composed with F = x + x^2 + 2x^3 + 5x^4, truncated at 4.
    Poly f = x(1, 0) - pow_trunc(x(1, 0), 2);
    Poly F = x(1, 0) + pow_trunc(x(1, 0), 2) + pow_trunc(x(1, 0), 3) * Rat(2) +
             pow_trunc(x(1, 0), 4) * Rat(5);
    CHECK(substitute(f, {F}, 4) == x(1, 0));
}

TEST_CASE("substitute agrees with naive expansion below a loose bound") {
    std::mt19937_64 rng(18);
    for (int t = 0; t < 10; ++t) {
        Poly p = testutil::random_poly(rng, 2, 3);
        std::vector<Poly> images{testutil::random_poly(rng, 2, 2),
                                 testutil::random_poly(rng, 2, 2)};
        // Naive expansion: exact term-by-term power products.
        Poly naive(2);
        for (const auto& [e, c] : p.terms()) {
            Poly term = Poly::constant(2, c);
            for (int i = 0; i < 2; ++i)
                for (int k = 0; k < e[i]; ++k) term = term * images[i];
            naive += term;
        }
        CHECK(substitute(p, images, 1000) == naive);
    }
}

TEST_CASE("constant term of Laurent polynomials") {
    Poly z = Poly::variable(1, 0, true);
    Poly zi = Poly::monomial(ExpVec{-1}, 1, true);
    CHECK(constant_term(z + zi) == 0);
    CHECK(constant_term((z + zi) * (z + zi)) == 2);
    CHECK(constant_term(Poly::constant(1, Rat(7, 3))) == Rat(7, 3));
}

TEST_CASE("exact division inverts multiplication") {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 15; ++t) {
        Poly p = testutil::random_poly(rng, 2, 3);
        Poly q = testutil::random_poly(rng, 2, 3);
        if (q.is_zero()) continue;
        CHECK(divide_exact(p * q, q) == p);
    }
}

TEST_CASE("inexact division is rejected") {
    CHECK_THROWS_AS(divide_exact(x(2, 0), x(2, 1)), DomainError);
}

TEST_CASE("negative exponents need the Laurent flag") {
    CHECK_THROWS_AS(Poly::monomial(ExpVec{-1}, 1, false), DomainError);
}
