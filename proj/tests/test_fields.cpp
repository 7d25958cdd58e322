#include <doctest.h>

#include "cy3/fields.hpp"

using namespace cy3;

TEST_CASE("prime field arithmetic is exact") {
    Field f3 = Field::prime(3);
    CHECK(f3.inv(1) == 1);
    Field f7 = Field::prime(7);
    CHECK(f7.inv(3) == 5);  // 3*5 = 15 = 1 mod 7
    for (int p : {2, 3, 5, 7, 11}) {
        Field f = Field::prime(p);
        for (int a = 1; a < p; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    }
}

TEST_CASE("composite characteristic is rejected") {
    CHECK_THROWS_AS(Field::prime(4), std::invalid_argument);
    CHECK_THROWS_AS(Field::prime(6), std::invalid_argument);
    CHECK_THROWS_AS(Field::prime(1), std::invalid_argument);
    CHECK_THROWS_AS(Field::extension(9, 2), std::invalid_argument);
    CHECK_THROWS_AS(Field::extension(3, 4), std::invalid_argument);
}

TEST_CASE("inversion of zero is a domain error") {
    Field f = Field::prime(5);
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
}

TEST_CASE("F4: zeta^3 = 1 and frobenius sends t to t+1") {
    Field f4 = Field::extension(2, 2);
    int zeta = f4.from_coords({0, 1});  // t
    CHECK(zeta != 0);
    CHECK(f4.pow(zeta, 3) == 1);
    CHECK(f4.frobenius(zeta) == f4.from_coords({1, 1}));  // t^2 = t + 1
}

TEST_CASE("F9 with t^2 = -1: frobenius conjugates") {
    Field f9 = Field::extension(3, 2);
    CHECK(f9.modulus_reduction() == std::vector<int>{2, 0});  // t^2 = 2 = -1
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            int a = f9.from_coords({x, y});
            int conj = f9.from_coords({x, (3 - y) % 3});
            CHECK(f9.frobenius(a) == conj);
        }
}

TEST_CASE("fixed quadratic moduli per p") {
    CHECK(Field::extension(2, 2).modulus_reduction() == std::vector<int>{1, 1});  // t^2+t+1
    CHECK(Field::extension(3, 2).modulus_reduction() == std::vector<int>{2, 0});  // t^2+1
    CHECK(Field::extension(5, 2).modulus_reduction() == std::vector<int>{2, 0});  // t^2-2
    CHECK(Field::extension(7, 2).modulus_reduction() == std::vector<int>{3, 0});  // t^2-3
}

TEST_CASE("frobenius fixes exactly the prime subfield") {
    for (auto [p, k] : {std::pair{2, 2}, {3, 2}, {5, 2}, {7, 2}, {2, 3}, {3, 3}}) {
        Field f = Field::extension(p, k);
        int fixed = 0;
        for (int a = 0; a < f.q(); ++a) {
            if (f.frobenius(a) == a) ++fixed;
            if (f.in_prime_field(a)) CHECK(f.frobenius(a) == a);
        }
        CHECK(fixed == p);
    }
}

TEST_CASE("frobenius is a field automorphism, involutive for k = 2") {
    for (int p : {2, 3, 5, 7}) {
        Field f = Field::extension(p, 2);
        for (int a = 0; a < f.q(); ++a) {
            CHECK(f.frobenius(f.frobenius(a)) == a);
            for (int b = 0; b < f.q(); ++b) {
                CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
                CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
            }
        }
    }
}

TEST_CASE("multiplicative group has order q - 1 (exhaustive, q <= 49)") {
    for (auto [p, k] : {std::pair{2, 2}, {3, 2}, {5, 2}, {7, 2}, {2, 3}, {3, 3}}) {
        Field f = Field::extension(p, k);
        if (f.q() > 49) continue;
        for (int a = 1; a < f.q(); ++a) CHECK(f.pow(a, f.q() - 1) == 1);
    }
}

TEST_CASE("F27 arithmetic is consistent") {
    Field f = Field::extension(3, 3);
    CHECK(f.q() == 27);
    for (int a = 1; a < 27; ++a) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.pow(a, 26) == 1);
        // frobenius has order 3 on the cubic extension
        CHECK(f.frobenius(f.frobenius(f.frobenius(a))) == a);
    }
}

TEST_CASE("element strings") {
    Field f9 = Field::extension(3, 2);
    CHECK(f9.to_string(f9.from_coords({1, 2})) == "1+2*t");
    CHECK(Field::prime(7).to_string(5) == "5");
}
