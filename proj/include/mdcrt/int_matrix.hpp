#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "mdcrt/errors.hpp"

namespace mdcrt {

/// Arbitrary-precision integer. All lattice algebra in this library is exact;
/// no floating point appears outside the frequency simulator.
using Int = mpz_class;

using IntVector = std::vector<Int>;

/// Row-major integer matrix. Square in every modulus/basis role; the
/// rectangular shape exists only for integer_kernel-style block systems.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(const IntVector& d);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const IntMatrix& o) const = default;

    IntMatrix operator*(const IntMatrix& o) const;
    IntVector operator*(const IntVector& v) const;
    IntMatrix transposed() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

struct HnfResult {
    IntMatrix hnf;        ///< lower-triangular, positive diagonal, reduced row entries
    IntMatrix transform;  ///< unimodular U with input * U = hnf
};

struct SnfResult {
    IntMatrix snf;    ///< diagonal, nonnegative, divisibility chain
    IntMatrix left;   ///< unimodular row transform
    IntMatrix right;  ///< unimodular column transform, left * input * right = snf
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Int det(const IntMatrix& m);

/// Adjugate: m * adjugate(m) = det(m) * I. adj of a 1x1 matrix is [[1]].
IntMatrix adjugate(const IntMatrix& m);

/// Column-style Hermite normal form. Canonical: lower-triangular, strictly
/// positive diagonal, each entry left of a pivot reduced into [0, pivot) of
/// its row. Throws SingularMatrix when det = 0.
HnfResult hnf(const IntMatrix& m);

/// Smith normal form of a (possibly rectangular) matrix.
SnfResult snf(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);

/// Basis of the integer null space {z : m z = 0}; primitive by construction
/// (columns of the unimodular right transform of the SNF).
std::vector<IntVector> integer_kernel(const IntMatrix& m);

/// Exact inverse of a unimodular matrix (integer entries).
IntMatrix unimodular_inverse(const IntMatrix& u);

Int floor_div(const Int& a, const Int& b);

IntVector sub(const IntVector& a, const IntVector& b);
IntVector neg(const IntVector& a);

}  // namespace mdcrt
