#include <doctest.h>

#include <random>

#include "glab/sequences.hpp"
#include "glab/series.hpp"
#include "glab/stirling.hpp"

using glab::Rational;
using glab::SeriesPoly;

TEST_CASE("series arithmetic basics") {
    SeriesPoly a(4), b(4);
    a.coeff(0) = 1;
    a.coeff(1) = 2;
    b.coeff(1) = 1;
    b.coeff(3) = Rational(1, 2);
    auto sum = a + b;
    CHECK(sum.coeff(1) == 3);
    auto prod = a * b;  // (1 + 2x)(x + x^3/2) = x + 2x^2 + x^3/2 + ...
    CHECK(prod.coeff(0) == 0);
    CHECK(prod.coeff(1) == 1);
    CHECK(prod.coeff(2) == 2);
    CHECK(prod.coeff(3) == Rational(1, 2));
    CHECK_THROWS_AS(a + SeriesPoly(5), std::domain_error);
    CHECK_THROWS_AS(SeriesPoly(0), std::domain_error);
}

TEST_CASE("reciprocal inverts unit series") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        SeriesPoly f(12);
        f.coeff(0) = Rational(static_cast<long long>(rng() % 9) + 1);
        for (long long i = 1; i < 12; ++i)
            f.coeff(i) = Rational(static_cast<long long>(rng() % 11) - 5,
                                  static_cast<long long>(rng() % 4) + 1);
        auto prod = f * f.reciprocal();
        CHECK(prod.coeff(0) == 1);
        for (long long i = 1; i < 12; ++i) CHECK(prod.coeff(i) == 0);
    }
    SeriesPoly nonunit(4);
    CHECK_THROWS_AS(nonunit.reciprocal(), std::domain_error);
}

TEST_CASE("compose requires zero constant term") {
    SeriesPoly outer(4), inner(4);
    inner.coeff(0) = 1;
    CHECK_THROWS_AS(outer.compose(inner), std::domain_error);
}

TEST_CASE("compose against hand expansion") {
    // (1 + y)^2 at y = x + x^2: 1 + 2x + 3x^2 + 2x^3 + x^4
    SeriesPoly outer(5), inner(5);
    outer.coeff(0) = 1;
    outer.coeff(1) = 2;
    outer.coeff(2) = 1;
    inner.coeff(1) = 1;
    inner.coeff(2) = 1;
    auto c = outer.compose(inner);
    CHECK(c.coeff(0) == 1);
    CHECK(c.coeff(1) == 2);
    CHECK(c.coeff(2) == 3);
    CHECK(c.coeff(3) == 2);
    CHECK(c.coeff(4) == 1);
}

TEST_CASE("a-egf opening coefficients") {
    auto s = glab::a_egf(3);
    CHECK(s.coeff(0) == 0);
    CHECK(s.coeff(1) == 1);
    CHECK(s.coeff(2) == 1);  // a_2 = 2! * 1 = 2
}

TEST_CASE("genocchi-egf opening coefficients") {
    auto s = glab::genocchi_egf(4);
    CHECK(s.coeff(0) == 0);
    CHECK(s.coeff(1) == 1);                 // G_1 = 1
    CHECK(s.coeff(2) == Rational(-1, 2));   // G_2/2! = -1/2
    CHECK(s.coeff(3) == 0);                 // G_3 = 0
}

TEST_CASE("bernoulli-egf matches the recurrence") {
    auto s = glab::bernoulli_egf(16);
    for (long long n = 0; n < 16; ++n)
        REQUIRE(s.coeff(n) * glab::factorial(n) == glab::bernoulli(n));
}

TEST_CASE("log powers reproduce first-kind Stirling numbers") {
    for (long long k = 0; k <= 6; ++k) {
        auto s = glab::log_power(k, 20);
        auto sm = glab::log_power(k, 20, /*minus_x=*/true);
        for (long long n = 0; n < 20; ++n) {
            Rational expected = n < k ? Rational(0)
                                      : Rational(glab::stirling_first(n, k), glab::factorial(n));
            REQUIRE(s.coeff(n) == expected);
            REQUIRE(sm.coeff(n) == (n % 2 == 0 ? expected : -expected));
        }
    }
}

TEST_CASE("a-egf equals minus genocchi-egf composed with log(1-x)") {
    const long long order = 20;
    auto lhs = glab::a_egf(order);
    auto rhs = -glab::genocchi_egf(order).compose(glab::log1m_series(order));
    for (long long n = 0; n < order; ++n) REQUIRE(lhs.coeff(n) == rhs.coeff(n));
}
