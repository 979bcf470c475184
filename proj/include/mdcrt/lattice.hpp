#pragma once

#include <vector>

#include "mdcrt/int_matrix.hpp"

namespace mdcrt {

/// Integer lattice LAT(M) = {M n : n integer}, stored by its canonical HNF
/// basis so structural equality coincides with lattice equality.
class Lattice {
public:
    static Lattice of(const IntMatrix& m);  ///< canonicalizes; throws SingularMatrix

    const IntMatrix& basis() const noexcept { return basis_; }
    std::size_t dim() const noexcept { return basis_.rows(); }

    bool operator==(const Lattice& o) const { return basis_ == o.basis_; }
    bool contains(const IntVector& v) const;

private:
    explicit Lattice(IntMatrix b) : basis_(std::move(b)) {}
    IntMatrix basis_;
};

bool lattice_equal(const Lattice& a, const Lattice& b);

/// LAT(result) = LAT(a) ∩ LAT(b), via the integer kernel of [A | -B].
Lattice intersect(const Lattice& a, const Lattice& b);

/// Canonical least common right multiple of a non-empty modulus list:
/// the HNF basis of the intersection of all their lattices.
IntMatrix lcrm(const std::vector<IntMatrix>& moduli);

struct DivisionResult {
    IntVector quotient;   ///< n with f = M n + r
    IntVector remainder;  ///< r, the unique representative in N(M)
};

/// Division representation f = M n + r with r in the fundamental
/// parallelepiped N(M); exact for either determinant sign.
DivisionResult vector_remainder(const IntVector& f, const IntMatrix& m);

/// The fundamental parallelepiped N(M): all |det(M)| integer points M x with
/// x in [0,1)^D. Enumeration goes through the Smith decomposition, emitting
/// representatives in lexicographic order of the diagonal coordinates.
class Fpd {
public:
    explicit Fpd(IntMatrix modulus);

    const IntMatrix& modulus() const noexcept { return modulus_; }
    const Int& size() const noexcept { return size_; }
    const std::vector<IntVector>& points() const;  ///< materialized on first use
    bool contains(const IntVector& v) const;       ///< exact, no enumeration

private:
    IntMatrix modulus_;
    Int size_;
    mutable std::vector<IntVector> points_;
};

Fpd fpd(const IntMatrix& m);

/// Membership in the half lattice L_{1/2}(M) = {v : 2v in LAT(M)}.
bool in_half_lattice(const IntVector& v, const IntMatrix& m);

/// Membership in LAT(l) + shifts, by direct iteration over the shift set.
bool in_shifted_lattice_sum(const IntVector& v, const Lattice& l,
                            const std::vector<IntVector>& shifts);

}  // namespace mdcrt
