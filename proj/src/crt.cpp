#include "mdcrt/crt.hpp"

#include <utility>

namespace mdcrt {

Congruence merge_pair(const Congruence& a, const Congruence& b) {
    const std::size_t n = a.residue.size();
    if (b.residue.size() != n || a.modulus.rows() != n || b.modulus.rows() != n)
        throw DimensionMismatch("merge_pair");

    IntMatrix block(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            block.at(i, j) = a.modulus.at(i, j);
            block.at(i, n + j) = -b.modulus.at(i, j);
        }
    IntVector d = sub(b.residue, a.residue);

    // particular solution of block * x = d through the Smith form
    SnfResult s = snf(block);
    IntVector y = s.left * d;
    IntVector t(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const Int& si = s.snf.at(i, i);
        if (si == 0) {
            if (y[i] != 0) throw NoSolution();
        } else {
            if (!mpz_divisible_p(y[i].get_mpz_t(), si.get_mpz_t())) throw NoSolution();
            t[i] = y[i] / si;
        }
    }
    IntVector x = s.right * t;
    IntVector n1(x.begin(), x.begin() + n);
    IntVector f = a.modulus * n1;
    for (std::size_t i = 0; i < n; ++i) f[i] += a.residue[i];

    IntMatrix combined = intersect(Lattice::of(a.modulus), Lattice::of(b.modulus)).basis();
    IntVector r = vector_remainder(f, combined).remainder;
    return {std::move(combined), std::move(r)};
}

CrtSolution solve(const std::vector<Congruence>& system) {
    if (system.empty()) throw DimensionMismatch("empty congruence system");
    const std::size_t dim = system.front().residue.size();
    for (const Congruence& c : system)
        if (c.residue.size() != dim || c.modulus.rows() != dim || !c.modulus.square())
            throw DimensionMismatch("congruence dims differ");

    IntMatrix m0 = hnf(system.front().modulus).hnf;
    Congruence acc{std::move(m0), {}};
    acc.residue = vector_remainder(system.front().residue, acc.modulus).remainder;
    for (std::size_t i = 1; i < system.size(); ++i) acc = merge_pair(acc, system[i]);
    return {std::move(acc.residue), std::move(acc.modulus)};
}

}  // namespace mdcrt
