#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mdcrt/int_matrix.hpp"
#include "test_util.hpp"

using namespace mdcrt;
using namespace mdcrt::testutil;

TEST_CASE("determinant") {
    CHECK(det(IntMatrix::identity(2)) == 1);
    CHECK(det(IntMatrix{{4, 0}, {1, 4}}) == 16);
    CHECK(det(IntMatrix{{3, 0}, {0, 12}}) == 36);
    CHECK(det(IntMatrix{{1, 2}, {2, 4}}) == 0);
    CHECK(det(IntMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(det(IntMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}) == -1);
}

TEST_CASE("determinant agrees with cofactor expansion on random 3x3") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
        IntMatrix m = random_matrix(rng, 3);
        Int byrow = 0;
        for (std::size_t j = 0; j < 3; ++j) {
            IntMatrix minor(2, 2);
            std::size_t cc = 0;
            for (std::size_t c = 0; c < 3; ++c) {
                if (c == j) continue;
                minor.at(0, cc) = m.at(1, c);
                minor.at(1, cc) = m.at(2, c);
                ++cc;
            }
            Int term = m.at(0, j) * det(minor);
            byrow += (j % 2) ? -term : term;
        }
        CHECK(det(m) == byrow);
    }
}

TEST_CASE("adjugate identities") {
    CHECK(adjugate(IntMatrix::identity(2)) == IntMatrix::identity(2));
    CHECK(adjugate(IntMatrix{{3, 0}, {1, 3}}) == IntMatrix{{3, 0}, {-1, 3}});

    IntMatrix singular{{1, 2}, {2, 4}};
    IntMatrix z = singular * adjugate(singular);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(z.at(i, j) == 0);

    std::mt19937_64 rng(2);
    for (int t = 0; t < 100; ++t) {
        std::size_t n = 1 + t % 4;
        IntMatrix m = random_matrix(rng, n);
        IntMatrix prod = m * adjugate(m);
        Int d = det(m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) CHECK(prod.at(i, j) == (i == j ? d : Int(0)));
    }
}

TEST_CASE("hnf canonical form") {
    CHECK(hnf(IntMatrix::identity(2)).hnf == IntMatrix::identity(2));
    CHECK(hnf(IntMatrix{{9, 0}, {0, 9}}).hnf == IntMatrix{{9, 0}, {0, 9}});
    // column reduction by hand: diagonal (3, 48), subdiagonal -20 mod 48 = 28
    CHECK(hnf(IntMatrix{{3, 0}, {-20, 48}}).hnf == IntMatrix{{3, 0}, {28, 48}});
    CHECK_THROWS_AS(hnf(IntMatrix{{1, 2}, {2, 4}}), SingularMatrix);
}

TEST_CASE("hnf invariants on random input") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 150; ++t) {
        std::size_t n = 2 + t % 3;
        IntMatrix m = random_nonsingular(rng, n);
        HnfResult r = hnf(m);
        CHECK(is_unimodular(r.transform));
        CHECK(m * r.transform == r.hnf);
        Int dprod = 1;
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(r.hnf.at(i, i) > 0);
            dprod *= r.hnf.at(i, i);
            for (std::size_t j = i + 1; j < n; ++j) CHECK(r.hnf.at(i, j) == 0);
            for (std::size_t j = 0; j < i; ++j) {
                CHECK(r.hnf.at(i, j) >= 0);
                CHECK(r.hnf.at(i, j) < r.hnf.at(i, i));
            }
        }
        CHECK(dprod == abs(det(m)));
        // idempotence and lattice preservation under a unimodular factor
        CHECK(hnf(r.hnf).hnf == r.hnf);
        IntMatrix u = random_unimodular(rng, n);
        CHECK(hnf(m * u).hnf == r.hnf);
    }
}

TEST_CASE("snf examples") {
    CHECK(snf(IntMatrix::identity(2)).snf == IntMatrix::identity(2));
    CHECK(snf(IntMatrix{{3, 0}, {0, 9}}).snf == IntMatrix{{3, 0}, {0, 9}});
    CHECK(snf(IntMatrix{{2, 1}, {0, 2}}).snf == IntMatrix{{1, 0}, {0, 4}});
}

TEST_CASE("snf invariants on random input") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 150; ++t) {
        std::size_t n = 1 + t % 4;
        IntMatrix m = random_matrix(rng, n);
        SnfResult s = snf(m);
        CHECK(is_unimodular(s.left));
        CHECK(is_unimodular(s.right));
        CHECK(s.left * m * s.right == s.snf);
        Int dprod = 1;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) CHECK(s.snf.at(i, j) == 0);
            CHECK(s.snf.at(i, i) >= 0);
            if (i + 1 < n && s.snf.at(i, i) != 0 && s.snf.at(i + 1, i + 1) != 0)
                CHECK(s.snf.at(i + 1, i + 1) % s.snf.at(i, i) == 0);
            dprod *= s.snf.at(i, i);
        }
        CHECK(dprod == abs(det(m)));
    }
}

TEST_CASE("is_unimodular") {
    CHECK(is_unimodular(IntMatrix::identity(2)));
    CHECK_FALSE(is_unimodular(IntMatrix{{3, 0}, {1, 3}}));
    CHECK(is_unimodular(IntMatrix{{2, 1}, {1, 1}}));
}

TEST_CASE("integer kernel") {
    CHECK(integer_kernel(IntMatrix::identity(2)).empty());

    IntMatrix m{{3, 0, -3, 0}, {1, 3, 0, -3}};
    auto basis = integer_kernel(m);
    REQUIRE(basis.size() == 2);
    for (const IntVector& z : basis) {
        IntVector mz = m * z;
        for (const Int& x : mz) CHECK(x == 0);
    }
    // primitive basis: the stacked basis matrix has SNF diagonal all ones
    IntMatrix stacked(4, 2);
    for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t r = 0; r < 4; ++r) stacked.at(r, c) = basis[c][r];
    SnfResult s = snf(stacked);
    CHECK(s.snf.at(0, 0) == 1);
    CHECK(s.snf.at(1, 1) == 1);
}

TEST_CASE("kernel of [M | -M] has rank D and contains the paired span") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        std::size_t n = 2 + t % 2;
        IntMatrix m = random_nonsingular(rng, n);
        IntMatrix block(n, 2 * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                block.at(i, j) = m.at(i, j);
                block.at(i, n + j) = -m.at(i, j);
            }
        auto basis = integer_kernel(block);
        CHECK(basis.size() == n);
        for (const IntVector& z : basis) {
            IntVector bz = block * z;
            for (const Int& x : bz) CHECK(x == 0);
        }
        // (e_i; e_i) solves the system and must lie in the kernel lattice:
        // check by solving the stacked basis against it via SNF-free test
        // m*(x) = m*(y) forces x = y, so kernel = {(x; x)} exactly
        for (const IntVector& z : basis) {
            IntVector x(z.begin(), z.begin() + n), y(z.begin() + n, z.end());
            CHECK(x == y);
        }
    }
}
