#include "mdcrt/lattice.hpp"

#include <utility>

namespace mdcrt {

Lattice Lattice::of(const IntMatrix& m) {
    if (!m.square()) throw DimensionMismatch("lattice basis must be square");
    return Lattice(hnf(m).hnf);
}

bool Lattice::contains(const IntVector& v) const {
    if (v.size() != dim()) throw DimensionMismatch("lattice membership");
    Int d = det(basis_);
    IntVector x = adjugate(basis_) * v;
    for (const Int& xi : x)
        if (!mpz_divisible_p(xi.get_mpz_t(), d.get_mpz_t())) return false;
    return true;
}

bool lattice_equal(const Lattice& a, const Lattice& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("lattice equality");
    return a == b;
}

Lattice intersect(const Lattice& a, const Lattice& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("lattice intersection");
    const std::size_t n = a.dim();
    IntMatrix block(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            block.at(i, j) = a.basis().at(i, j);
            block.at(i, n + j) = -b.basis().at(i, j);
        }
    std::vector<IntVector> ker = integer_kernel(block);
    // non-singular bases give a rank-D kernel; its x-parts span the intersection
    IntMatrix X(n, ker.size());
    for (std::size_t c = 0; c < ker.size(); ++c)
        for (std::size_t r = 0; r < n; ++r) X.at(r, c) = ker[c][r];
    return Lattice::of(a.basis() * X);
}

IntMatrix lcrm(const std::vector<IntMatrix>& moduli) {
    if (moduli.empty()) throw DimensionMismatch("lcrm of empty list");
    Lattice acc = Lattice::of(moduli.front());
    for (std::size_t i = 1; i < moduli.size(); ++i) {
        if (moduli[i].rows() != acc.dim()) throw DimensionMismatch("lcrm dims");
        acc = intersect(acc, Lattice::of(moduli[i]));
    }
    return acc.basis();
}

DivisionResult vector_remainder(const IntVector& f, const IntMatrix& m) {
    if (!m.square() || m.rows() != f.size()) throw DimensionMismatch("vector_remainder");
    Int d = det(m);
    if (d == 0) throw SingularMatrix();
    IntVector x = adjugate(m) * f;  // det * m^{-1} f
    const std::size_t n = f.size();
    IntVector q(n);
    for (std::size_t i = 0; i < n; ++i) q[i] = floor_div(x[i], d);
    IntVector mq = m * q;
    IntVector r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = f[i] - mq[i];
    return {std::move(q), std::move(r)};
}

Fpd::Fpd(IntMatrix modulus) : modulus_(std::move(modulus)) {
    if (!modulus_.square()) throw DimensionMismatch("fpd modulus must be square");
    size_ = abs(det(modulus_));
    if (size_ == 0) throw SingularMatrix();
}

const std::vector<IntVector>& Fpd::points() const {
    if (!points_.empty() || size_ == 0) return points_;
    const std::size_t n = modulus_.rows();
    SnfResult s = snf(modulus_);
    IntMatrix linv = unimodular_inverse(s.left);
    // Z^D / LAT(M) is componentwise Z/d_i after the left transform; walk the
    // diagonal ranges lexicographically and reduce each representative.
    IntVector c(n, 0);
    points_.reserve(size_.fits_ulong_p() ? size_.get_ui() : 0);
    while (true) {
        points_.push_back(vector_remainder(linv * c, modulus_).remainder);
        std::size_t i = n;
        while (i > 0) {
            --i;
            c[i] += 1;
            if (c[i] < s.snf.at(i, i)) break;
            c[i] = 0;
            if (i == 0) return points_;
        }
        if (n == 0) return points_;
    }
}

bool Fpd::contains(const IntVector& v) const {
    return vector_remainder(v, modulus_).remainder == v;
}

Fpd fpd(const IntMatrix& m) { return Fpd(m); }

bool in_half_lattice(const IntVector& v, const IntMatrix& m) {
    if (!m.square() || m.rows() != v.size()) throw DimensionMismatch("in_half_lattice");
    Int d = det(m);
    if (d == 0) throw SingularMatrix();
    IntVector twice(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) twice[i] = 2 * v[i];
    IntVector x = adjugate(m) * twice;
    for (const Int& xi : x)
        if (!mpz_divisible_p(xi.get_mpz_t(), d.get_mpz_t())) return false;
    return true;
}

bool in_shifted_lattice_sum(const IntVector& v, const Lattice& l,
                            const std::vector<IntVector>& shifts) {
    for (const IntVector& s : shifts)
        if (l.contains(sub(v, s))) return true;
    return false;
}

}  // namespace mdcrt
