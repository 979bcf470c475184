#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "mdcrt/lattice.hpp"
#include "test_util.hpp"

using namespace mdcrt;
using namespace mdcrt::testutil;

namespace {

// Independent oracle for the remainder: f - M * floor(M^{-1} f), evaluated
// in exact rationals. The production path goes through the adjugate formula.
IntVector naive_remainder(const IntVector& f, const IntMatrix& m) {
    const std::size_t n = f.size();
    IntMatrix adj = adjugate(m);
    mpq_class d(det(m));
    IntVector q(n);
    for (std::size_t i = 0; i < n; ++i) {
        mpq_class xi = 0;
        for (std::size_t j = 0; j < n; ++j) xi += mpq_class(adj.at(i, j)) * mpq_class(f[j]);
        xi /= d;
        xi.canonicalize();
        Int fl;
        mpz_fdiv_q(fl.get_mpz_t(), xi.get_num_mpz_t(), xi.get_den_mpz_t());
        q[i] = fl;
    }
    IntVector mq = m * q;
    IntVector r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = f[i] - mq[i];
    return r;
}

// Oracle membership in N(M): M^{-1} p componentwise in [0,1) as rationals.
bool in_fpd_rational(const IntVector& p, const IntMatrix& m) {
    IntMatrix adj = adjugate(m);
    Int d = det(m);
    IntVector x = adj * p;
    for (const Int& xi : x) {
        if (d > 0 && (xi < 0 || xi >= d)) return false;
        if (d < 0 && (xi > 0 || xi <= d)) return false;
    }
    return true;
}

const IntMatrix kM1{{3, 0}, {1, 3}};
const IntMatrix kM2{{3, 1}, {0, 3}};
const IntMatrix kM3{{4, 0}, {1, 4}};
const IntMatrix kM4{{4, 1}, {0, 4}};

}  // namespace

TEST_CASE("lattice_of canonicalizes") {
    CHECK(Lattice::of(IntMatrix::identity(2)).basis() == IntMatrix::identity(2));
    std::mt19937_64 rng(11);
    IntMatrix d39{{3, 0}, {0, 9}};
    for (int t = 0; t < 20; ++t) {
        IntMatrix u = random_unimodular(rng, 2);
        CHECK(Lattice::of(d39 * u).basis() == d39);
    }
    Lattice l = Lattice::of(IntMatrix{{12, -5}, {0, 12}});
    CHECK(abs(det(l.basis())) == 144);
    CHECK_THROWS_AS(Lattice::of(IntMatrix{{1, 2}, {2, 4}}), SingularMatrix);
}

TEST_CASE("lattice equality") {
    Lattice a = Lattice::of(IntMatrix{{9, 0}, {0, 9}});
    CHECK(lattice_equal(a, a));
    Lattice b = Lattice::of(IntMatrix{{9, 0}, {0, 9}} * IntMatrix{{1, 1}, {0, 1}});
    CHECK(lattice_equal(a, b));
    // column permutation preserves the lattice; swapping the diagonal does not
    CHECK(lattice_equal(Lattice::of(IntMatrix{{3, 0}, {0, 9}}),
                        Lattice::of(IntMatrix{{0, 3}, {9, 0}})));
    Lattice d39 = Lattice::of(IntMatrix{{3, 0}, {0, 9}});
    Lattice d93 = Lattice::of(IntMatrix{{9, 0}, {0, 3}});
    CHECK_FALSE(lattice_equal(d39, d93));
    // mutual-membership oracle agrees: (0,3) generates d93 but is not in d39
    CHECK(d39.contains(vec({9, 0})));
    CHECK_FALSE(d39.contains(vec({0, 3})));
}

TEST_CASE("contains") {
    Lattice l = Lattice::of(IntMatrix{{3, 0}, {0, 12}});
    CHECK(l.contains(vec({0, 0})));
    CHECK(l.contains(vec({3, 12})));
    CHECK_FALSE(l.contains(vec({1, 0})));
}

TEST_CASE("intersect and lcrm on the worked moduli") {
    Lattice a = Lattice::of(IntMatrix{{3, 0}, {0, 4}});
    Lattice b = Lattice::of(IntMatrix{{3, 0}, {0, 3}});
    CHECK(intersect(a, b).basis() == IntMatrix{{3, 0}, {0, 12}});
    CHECK(intersect(a, a) == a);

    CHECK(lcrm({kM1, kM2}) == IntMatrix{{9, 0}, {0, 9}});
    CHECK(lcrm({kM1, kM2, kM3, kM4}) == IntMatrix{{144, 0}, {0, 144}});
    CHECK(lcrm({IntMatrix{{3, 0}, {-20, 48}}}) == IntMatrix{{3, 0}, {28, 48}});

    IntMatrix m5{{5, 0}, {1, 5}}, m6{{5, 1}, {0, 5}};
    CHECK(lcrm({kM1, kM2, kM3, kM4, m5, m6}) == IntMatrix{{3600, 0}, {0, 3600}});

    // the four two-vector example moduli
    CHECK(lcrm({IntMatrix{{4, 1}, {1, 1}}, IntMatrix{{3, 3}, {1, 2}}, IntMatrix{{2, 1}, {0, 2}},
                IntMatrix{{5, 1}, {1, 1}}}) == IntMatrix{{12, 0}, {0, 12}});
}

TEST_CASE("lcrm is a right multiple of each modulus and Prop-2 membership holds") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 200; ++t) {
        std::size_t n = 2 + t % 2;
        IntMatrix a = random_nonsingular(rng, n, -4, 4, 60);
        IntMatrix b = random_nonsingular(rng, n, -4, 4, 60);
        IntMatrix r = lcrm({a, b});
        // r = a * P with P integral: adj(a) * r divisible by det(a)
        for (const IntMatrix& m : {a, b}) {
            IntMatrix p = adjugate(m) * r;
            Int d = det(m);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    CHECK(mpz_divisible_p(p.at(i, j).get_mpz_t(), d.get_mpz_t()));
        }
        Lattice lr = Lattice::of(r), la = Lattice::of(a), lb = Lattice::of(b);
        for (int k = 0; k < 10; ++k) {
            IntVector v = random_vector(rng, n, -40, 40);
            CHECK(lr.contains(v) == (la.contains(v) && lb.contains(v)));
        }
        // order independence
        CHECK(lcrm({b, a}) == r);
    }
}

TEST_CASE("vector_remainder worked values") {
    CHECK(vector_remainder(vec({2, 4}), kM1).remainder == vec({2, 1}));
    CHECK(vector_remainder(vec({10, 7}), IntMatrix{{3, 3}, {1, 2}}).remainder == vec({4, 2}));
    DivisionResult z = vector_remainder(vec({0, 0}), kM3);
    CHECK(z.remainder == vec({0, 0}));
    CHECK(z.quotient == vec({0, 0}));
}

TEST_CASE("vector_remainder round trip and oracle agreement") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 1000; ++t) {
        std::size_t n = 1 + t % 3;
        IntMatrix m = random_nonsingular(rng, n);
        IntVector f = random_vector(rng, n, -200, 200);
        DivisionResult r = vector_remainder(f, m);
        IntVector back = m * r.quotient;
        for (std::size_t i = 0; i < n; ++i) CHECK(back[i] + r.remainder[i] == f[i]);
        CHECK(in_fpd_rational(r.remainder, m));
        CHECK(r.remainder == naive_remainder(f, m));
    }
}

TEST_CASE("fpd worked examples") {
    Fpd f1 = fpd(IntMatrix{{3, 0}, {0, 9}});
    CHECK(f1.size() == 27);
    std::set<IntVector> got(f1.points().begin(), f1.points().end());
    std::set<IntVector> expect;
    for (long a = 0; a < 3; ++a)
        for (long b = 0; b < 9; ++b) expect.insert(vec({a, b}));
    CHECK(got == expect);

    Fpd fi = fpd(IntMatrix::identity(2));
    CHECK(fi.size() == 1);
    CHECK(fi.points() == std::vector<IntVector>{vec({0, 0})});

    Fpd f3 = fpd(kM1);
    CHECK(f3.size() == 9);
    // bounding-box scan oracle
    std::set<IntVector> scan;
    for (long a = -6; a <= 6; ++a)
        for (long b = -6; b <= 6; ++b)
            if (in_fpd_rational(vec({a, b}), kM1)) scan.insert(vec({a, b}));
    CHECK(std::set<IntVector>(f3.points().begin(), f3.points().end()) == scan);
}

TEST_CASE("fpd cardinality, distinctness and self-remainder on random moduli") {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 200; ++t) {
        std::size_t n = 1 + t % 3;
        IntMatrix m = random_nonsingular(rng, n, -5, 5, 200);
        Fpd f = fpd(m);
        const auto& pts = f.points();
        CHECK(Int(pts.size()) == f.size());
        std::set<IntVector> uniq(pts.begin(), pts.end());
        CHECK(uniq.size() == pts.size());
        for (std::size_t i = 0; i < pts.size(); i += 7) {
            CHECK(in_fpd_rational(pts[i], m));
            CHECK(vector_remainder(pts[i], m).remainder == pts[i]);
        }
    }
}

TEST_CASE("half lattice") {
    IntMatrix e1{{4, 1}, {1, 1}}, e2{{3, 3}, {1, 2}}, e3{{2, 1}, {0, 2}}, e4{{5, 1}, {1, 1}};
    for (const IntMatrix& m : {e1, e2, e3, e4}) {
        CHECK(in_half_lattice(vec({0, 0}), m));
        CHECK_FALSE(in_half_lattice(vec({2, 1}), m));
    }
    CHECK(in_half_lattice(vec({2, 0}), IntMatrix{{4, 0}, {0, 4}}));

    std::mt19937_64 rng(15);
    for (int t = 0; t < 200; ++t) {
        IntMatrix m = random_nonsingular(rng, 2);
        IntVector v = random_vector(rng, 2, -20, 20);
        CHECK(in_half_lattice(v, m) == in_half_lattice(neg(v), m));
    }
}

TEST_CASE("shifted lattice sum membership (worked example)") {
    Lattice r = Lattice::of(IntMatrix{{3, 0}, {0, 12}});
    std::vector<IntVector> shifts;
    for (long a = 0; a < 3; ++a)
        for (long b = 0; b < 3; ++b) shifts.push_back(vec({a, b}));
    CHECK(in_shifted_lattice_sum(vec({1, 0}), r, shifts));
    CHECK(in_shifted_lattice_sum(vec({0, 1}), r, shifts));
    CHECK(in_shifted_lattice_sum(vec({-1, 0}), r, shifts));
    CHECK_FALSE(in_shifted_lattice_sum(vec({0, -1}), r, shifts));
    CHECK(in_shifted_lattice_sum(vec({2, 1}), r, {vec({2, 1})}));
}
