#pragma once

#include <random>

#include "mdcrt/int_matrix.hpp"

namespace mdcrt::testutil {

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long lo = -5, long hi = 5) {
    std::uniform_int_distribution<long> dist(lo, hi);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = dist(rng);
    return m;
}

inline IntMatrix random_nonsingular(std::mt19937_64& rng, std::size_t n, long lo = -5,
                                    long hi = 5, long max_abs_det = 0) {
    while (true) {
        IntMatrix m = random_matrix(rng, n, lo, hi);
        Int d = det(m);
        if (d == 0) continue;
        if (max_abs_det > 0 && abs(d) > max_abs_det) continue;
        return m;
    }
}

// product of random elementary column operations, |det| = 1
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 6) {
    std::uniform_int_distribution<long> coef(-2, 2);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    IntMatrix u = IntMatrix::identity(n);
    for (int s = 0; s < steps; ++s) {
        std::size_t i = pick(rng), j = pick(rng);
        if (i == j) continue;
        long k = coef(rng);
        for (std::size_t r = 0; r < n; ++r) u.at(r, i) += k * u.at(r, j);
        if (rng() & 1)
            for (std::size_t r = 0; r < n; ++r) std::swap(u.at(r, i), u.at(r, j));
    }
    return u;
}

inline IntVector random_vector(std::mt19937_64& rng, std::size_t n, long lo = -50, long hi = 50) {
    std::uniform_int_distribution<long> dist(lo, hi);
    IntVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = dist(rng);
    return v;
}

inline IntVector vec(std::initializer_list<long> xs) {
    IntVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace mdcrt::testutil
