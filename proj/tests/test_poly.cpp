#include <doctest.h>

#include <random>

#include "galepoly/poly.hpp"
#include "test_util.hpp"

using namespace galepoly;
using testutil::poly;
using testutil::random_poly;

TEST_CASE("addition") {
    CHECK(poly({1, 2}) + poly({0, 1}) == poly({1, 3}));
    IntPoly p = poly({3, 0, 7});
    CHECK(p + IntPoly() == p);
    CHECK(poly({1, 1}) + poly({-1, -1}) == IntPoly());
    CHECK((poly({1, 1}) + poly({-1, -1})).is_zero());
}

TEST_CASE("multiplication") {
    CHECK(poly({1, 1}) * poly({1, 1}) == poly({1, 2, 1}));
    IntPoly p = poly({-2, 5, 1});
    CHECK(p * poly({1}) == p);
    IntPoly cube = p_poly(2) * p_poly(2) * p_poly(2);
    CHECK(cube == poly({1, 3, 3, 1}));
    CHECK((p * IntPoly()).is_zero());
}

TEST_CASE("shift") {
    CHECK(shift(poly({3, 2}), Int(-1)) == poly({1, 2}));
    IntPoly p = poly({4, -1, 0, 2});
    CHECK(shift(p, Int(0)) == p);
    CHECK(shift(poly({0, 0, 1}), Int(1)) == poly({1, 2, 1}));
}

TEST_CASE("shift round-trip") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        IntPoly p = random_poly(rng);
        long a = static_cast<long>(rng() % 11) - 5;
        CHECK(shift(shift(p, Int(a)), Int(-a)) == p);
    }
}

TEST_CASE("ring laws") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 100; ++i) {
        IntPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("p_poly") {
    CHECK(p_poly(1) == poly({1}));
    CHECK(p_poly(3) == poly({1, 1, 1}));
    CHECK(p_poly(0).is_zero());
}

TEST_CASE("palindromic") {
    CHECK(is_palindromic(poly({1, 3, 3, 1})));
    CHECK_FALSE(is_palindromic(poly({1, 2})));
    CHECK(is_palindromic(IntPoly()));
}

TEST_CASE("g_from_h") {
    CHECK(g_from_h(poly({1, 3, 3, 1}), 3) == poly({1, 2}));
    CHECK(g_from_h(poly({1}), 0) == poly({1}));
    CHECK(g_from_h(poly({1, 2, 1}), 2) == poly({1, 1}));
    CHECK_THROWS_AS(g_from_h(poly({1, 1, 1}), 1), std::invalid_argument);
}

TEST_CASE("degree and coefficients") {
    IntPoly p = poly({0, 0, 5});
    CHECK(p.degree() == 2);
    CHECK(p.coeff(2) == 5);
    CHECK(p.coeff(7) == 0);
    CHECK(p.coeff(-1) == 0);
    CHECK(IntPoly(std::vector<Int>{Int(0), Int(0)}).is_zero());
}

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(4, -1) == 0);
}
