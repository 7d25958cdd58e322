#include <doctest.h>

#include "cy3/poly.hpp"

using namespace cy3;

TEST_CASE("grevlex print order") {
    // x1^2 > x1 x2 > x2^2 > x1 x3 > x2 x3 > x3^2
    CHECK(grevlex_before({2, 0, 0}, {1, 1, 0}));
    CHECK(grevlex_before({1, 1, 0}, {0, 2, 0}));
    CHECK(grevlex_before({0, 2, 0}, {1, 0, 1}));
    CHECK(grevlex_before({1, 0, 1}, {0, 1, 1}));
    CHECK(grevlex_before({0, 1, 1}, {0, 0, 2}));
    CHECK(grevlex_before({2, 0, 0}, {1, 0, 0}));  // higher degree first
    CHECK_FALSE(grevlex_before({1, 1, 0}, {2, 0, 0}));
}

TEST_CASE("arithmetic and normalization") {
    SparsePoly x = SparsePoly::variable(2, 3, 0);
    SparsePoly y = SparsePoly::variable(2, 3, 1);
    SparsePoly s = x + y;
    SparsePoly cube = s.pow(3);
    // freshman's dream mod 3
    CHECK(cube == x.pow(3) + y.pow(3));
    CHECK((s - s).is_zero());
    CHECK(s.scaled(3).is_zero());
    CHECK(s.degree() == 1);
    CHECK(cube.is_homogeneous());
}

TEST_CASE("frobenius scales exponents") {
    SparsePoly x = SparsePoly::variable(2, 3, 0);
    SparsePoly y = SparsePoly::variable(2, 3, 1);
    SparsePoly f = x * y + x.pow(2);
    CHECK(f.frobenius() == f.pow(3));
}

TEST_CASE("evaluation") {
    SparsePoly q(3, 5);
    q.add_term({1, 1, 0}, 2);
    q.add_term({0, 0, 2}, 4);
    CHECK(q.eval({1, 1, 1}) == 1);  // 2 + 4 = 6 = 1 mod 5
    CHECK(q.eval({0, 3, 2}) == 1);  // 4*4 = 16 = 1
}

TEST_CASE("exact division and its failure") {
    SparsePoly x = SparsePoly::variable(2, 5, 0);
    SparsePoly y = SparsePoly::variable(2, 5, 1);
    SparsePoly g = x + y.scaled(2);
    SparsePoly f = g * g * (x + y);
    SparsePoly q = divide_exact(f, g);
    CHECK(q * g == f);
    CHECK_THROWS_AS(divide_exact(x * x + y, g), std::domain_error);
    CHECK_THROWS_AS(divide_exact(x, SparsePoly(2, 5)), std::domain_error);
}

TEST_CASE("canonical printing follows grevlex") {
    SparsePoly f(2, 3);
    f.add_term({0, 2}, 1);
    f.add_term({2, 0}, 2);
    f.add_term({1, 1}, 1);
    CHECK(f.str() == "2*x1^2 + x1*x2 + x2^2");
}
