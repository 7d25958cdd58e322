#include <doctest.h>

#include <sstream>

#include "cy3/matfp.hpp"
#include "cy3/rng.hpp"

using namespace cy3;

namespace {

MatFp random_matrix(Rng& rng, int rows, int cols, int p) {
    MatFp m(rows, cols, p);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, rng.below(p));
    return m;
}

}  // namespace

TEST_CASE("rref of identity and zero") {
    for (int p : {2, 3, 7}) {
        auto rr = rref(MatFp::identity(4, p));
        CHECK(rr.rank == 4);
        CHECK(rr.r == MatFp::identity(4, p));
        CHECK(rr.pivots == std::vector<int>{0, 1, 2, 3});
        auto zz = rref(MatFp(2, 3, p));
        CHECK(zz.rank == 0);
        CHECK(zz.pivots.empty());
        CHECK(zz.r == MatFp(2, 3, p));
    }
}

TEST_CASE("rref is idempotent and deterministic") {
    Rng rng(7);
    for (int p : {2, 3, 5, 7}) {
        for (int t = 0; t < 20; ++t) {
            MatFp m = random_matrix(rng, 6, 9, p);
            auto r1 = rref(m);
            CHECK(rref(r1.r).r == r1.r);
            CHECK(rref(m).r == r1.r);  // two runs, identical bytes
        }
    }
}

TEST_CASE("kernel dimensions and annihilation") {
    CHECK(kernel_basis(MatFp::identity(5, 3)).rows() == 0);
    CHECK(kernel_basis(MatFp(2, 3, 3)).rows() == 3);
    Rng rng(11);
    for (int p : {2, 3, 5}) {
        for (int t = 0; t < 25; ++t) {
            MatFp m = random_matrix(rng, 5, 8, p);
            MatFp k = kernel_basis(m);
            CHECK(rank_of(m) + k.rows() == m.cols());
            CHECK((m * k.transposed()).is_zero());
        }
    }
}

TEST_CASE("kernel basis has an identity block on the free columns") {
    MatFp m(1, 3, 5);
    m.set(0, 0, 1);
    m.set(0, 1, 2);
    m.set(0, 2, 3);
    MatFp k = kernel_basis(m);
    REQUIRE(k.rows() == 2);
    // free columns 1 and 2; the free-column block is the identity
    CHECK(k.at(0, 1) == 1);
    CHECK(k.at(0, 2) == 0);
    CHECK(k.at(1, 1) == 0);
    CHECK(k.at(1, 2) == 1);
    CHECK(k.at(0, 0) == 3);  // -2 mod 5
    CHECK(k.at(1, 0) == 2);  // -3 mod 5
}

TEST_CASE("row space canonical form decides subspace equality") {
    Rng rng(3);
    MatFp m = random_matrix(rng, 4, 6, 3);
    MatFp shuffled(4, 6, 3);
    // reorder rows and add one row to another: same row space
    for (int j = 0; j < 6; ++j) {
        shuffled.set(0, j, m.at(2, j));
        shuffled.set(1, j, m.at(0, j));
        shuffled.set(2, j, (m.at(1, j) + m.at(3, j)) % 3);
        shuffled.set(3, j, m.at(3, j));
    }
    CHECK(row_space_canonical(m) == row_space_canonical(shuffled));
}

TEST_CASE("kron dimensions and identities") {
    CHECK(kron(MatFp::identity(2, 3), MatFp::identity(3, 3)) == MatFp::identity(6, 3));
    Rng rng(19);
    MatFp a = random_matrix(rng, 2, 2, 5), b = random_matrix(rng, 3, 3, 5);
    MatFp k = kron(a, b);
    CHECK(k.rows() == 6);
    CHECK(k.cols() == 6);
    CHECK(kron(a, MatFp::identity(3, 5)) * kron(MatFp::identity(2, 5), b) == k);
}

TEST_CASE("rank of kron is the product of ranks") {
    Rng rng(23);
    for (int p : {3, 5}) {
        for (int t = 0; t < 10; ++t) {
            MatFp a = random_matrix(rng, 3, 3, p), b = random_matrix(rng, 3, 3, p);
            CHECK(rank_of(kron(a, b)) == rank_of(a) * rank_of(b));
        }
    }
}

TEST_CASE("modulus mismatch is a usage error") {
    CHECK_THROWS_AS(kron(MatFp(2, 2, 3), MatFp(2, 2, 5)), std::invalid_argument);
    CHECK_THROWS_AS(MatFp(2, 2, 3) * MatFp(2, 2, 5), std::invalid_argument);
    CHECK_THROWS_AS(MatFp(2, 3, 3) * MatFp(2, 3, 3), std::invalid_argument);
}

TEST_CASE("elimination requires a prime modulus") {
    CHECK_THROWS_AS(rref(MatFp(2, 2, 9)), std::invalid_argument);
}

TEST_CASE("matrix text format is bit-exact") {
    Rng rng(31);
    MatFp m = random_matrix(rng, 4, 7, 7);
    std::ostringstream os;
    write_matrix(os, m);
    std::istringstream is(os.str());
    CHECK(read_matrix(is) == m);
    std::ostringstream os2;
    write_matrix(os2, m);
    CHECK(os.str() == os2.str());
}
