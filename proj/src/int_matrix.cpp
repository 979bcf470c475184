#include "mdcrt/int_matrix.hpp"

#include <algorithm>
#include <utility>

namespace mdcrt {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("ragged initializer");
        for (long x : r) data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const IntVector& d) {
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shapes");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
    if (cols_ != v.size()) throw DimensionMismatch("matrix-vector shapes");
    IntVector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

IntVector sub(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes");
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IntVector neg(const IntVector& a) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

Int det(const IntMatrix& m) {
    if (!m.square()) throw DimensionMismatch("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix w = m;
    Int sign = 1;
    Int prev = 1;  // Bareiss pivot denominator
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && w.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign * w.at(n - 1, n - 1);
}

IntMatrix adjugate(const IntMatrix& m) {
    if (!m.square()) throw DimensionMismatch("adjugate of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 1) {
        IntMatrix r(1, 1);
        r.at(0, 0) = 1;
        return r;
    }
    IntMatrix adj(n, n);
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t rr = 0;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                std::size_t cc = 0;
                for (std::size_t c = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(rr, cc) = m.at(r, c);
                    ++cc;
                }
                ++rr;
            }
            Int cof = det(minor);
            if ((i + j) % 2) cof = -cof;
            adj.at(j, i) = cof;  // transposed cofactor
        }
    }
    return adj;
}

bool is_unimodular(const IntMatrix& m) {
    if (!m.square()) return false;
    Int d = det(m);
    return d == 1 || d == -1;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
    Int d = det(u);
    if (d != 1 && d != -1) throw SingularMatrix("matrix is not unimodular");
    IntMatrix inv = adjugate(u);
    if (d == -1)
        for (std::size_t i = 0; i < inv.rows(); ++i)
            for (std::size_t j = 0; j < inv.cols(); ++j) inv.at(i, j) = -inv.at(i, j);
    return inv;
}

namespace {

// col_i <- p*col_i + q*col_j ; col_j <- -(b/g)*col_i_old + (a/g)*col_j_old.
// The 2x2 transform has determinant +1, so W and U stay column-equivalent.
void gcd_column_step(IntMatrix& W, IntMatrix& U, std::size_t i, std::size_t j,
                     const Int& a, const Int& b) {
    Int g, p, q;
    mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Int bg = b / g, ag = a / g;
    for (IntMatrix* M : {&W, &U}) {
        for (std::size_t r = 0; r < M->rows(); ++r) {
            Int x = M->at(r, i), y = M->at(r, j);
            M->at(r, i) = p * x + q * y;
            M->at(r, j) = ag * y - bg * x;
        }
    }
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
    if (!m.square()) throw DimensionMismatch("hnf of non-square matrix");
    const std::size_t n = m.rows();
    IntMatrix W = m;
    IntMatrix U = IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j)
            if (W.at(i, j) != 0) gcd_column_step(W, U, i, j, W.at(i, i), W.at(i, j));
        if (W.at(i, i) == 0) throw SingularMatrix();
        if (W.at(i, i) < 0)
            for (std::size_t r = 0; r < n; ++r) {
                W.at(r, i) = -W.at(r, i);
                U.at(r, i) = -U.at(r, i);
            }
        for (std::size_t j = 0; j < i; ++j) {
            Int q = floor_div(W.at(i, j), W.at(i, i));
            if (q == 0) continue;
            for (std::size_t r = 0; r < n; ++r) {
                W.at(r, j) -= q * W.at(r, i);
                U.at(r, j) -= q * U.at(r, i);
            }
        }
    }
    return {std::move(W), std::move(U)};
}

SnfResult snf(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMatrix S = m;
    IntMatrix L = IntMatrix::identity(rows);
    IntMatrix R = IntMatrix::identity(cols);

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        for (std::size_t c = 0; c < cols; ++c) std::swap(S.at(a, c), S.at(b, c));
        for (std::size_t c = 0; c < rows; ++c) std::swap(L.at(a, c), L.at(b, c));
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        for (std::size_t r = 0; r < rows; ++r) std::swap(S.at(r, a), S.at(r, b));
        for (std::size_t r = 0; r < cols; ++r) std::swap(R.at(r, a), R.at(r, b));
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t c = 0; c < cols; ++c) S.at(dst, c) += f * S.at(src, c);
        for (std::size_t c = 0; c < rows; ++c) L.at(dst, c) += f * L.at(src, c);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t r = 0; r < rows; ++r) S.at(r, dst) += f * S.at(r, src);
        for (std::size_t r = 0; r < cols; ++r) R.at(r, dst) += f * R.at(r, src);
    };

    const std::size_t mn = std::min(rows, cols);
    std::size_t t = 0;
    while (t < mn) {
        // smallest-magnitude nonzero pivot in the trailing block
        bool found = false;
        std::size_t pi = t, pj = t;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (S.at(i, j) == 0) continue;
                if (!found || cmp(abs(S.at(i, j)), abs(S.at(pi, pj))) < 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        if (pi != t) swap_rows(t, pi);
        if (pj != t) swap_cols(t, pj);

        bool again = true;
        while (again) {
            again = false;
            for (std::size_t i = t + 1; i < rows; ++i)
                if (S.at(i, t) % S.at(t, t) != 0) {
                    add_row(i, t, -floor_div(S.at(i, t), S.at(t, t)));
                    swap_rows(t, i);
                    again = true;
                }
            for (std::size_t j = t + 1; j < cols; ++j)
                if (S.at(t, j) % S.at(t, t) != 0) {
                    add_col(j, t, -floor_div(S.at(t, j), S.at(t, t)));
                    swap_cols(t, j);
                    again = true;
                }
        }
        for (std::size_t i = t + 1; i < rows; ++i)
            if (S.at(i, t) != 0) add_row(i, t, -(S.at(i, t) / S.at(t, t)));
        for (std::size_t j = t + 1; j < cols; ++j)
            if (S.at(t, j) != 0) add_col(j, t, -(S.at(t, j) / S.at(t, t)));

        // divisibility chain: fold any offending entry into row t and redo
        bool redo = false;
        for (std::size_t i = t + 1; i < rows && !redo; ++i)
            for (std::size_t j = t + 1; j < cols && !redo; ++j)
                if (S.at(i, j) % S.at(t, t) != 0) {
                    add_row(t, i, 1);
                    redo = true;
                }
        if (redo) continue;

        if (S.at(t, t) < 0) {
            for (std::size_t c = 0; c < cols; ++c) S.at(t, c) = -S.at(t, c);
            for (std::size_t c = 0; c < rows; ++c) L.at(t, c) = -L.at(t, c);
        }
        ++t;
    }
    return {std::move(S), std::move(L), std::move(R)};
}

std::vector<IntVector> integer_kernel(const IntMatrix& m) {
    SnfResult s = snf(m);
    const std::size_t mn = std::min(m.rows(), m.cols());
    std::vector<IntVector> basis;
    for (std::size_t i = 0; i < m.cols(); ++i) {
        if (i < mn && s.snf.at(i, i) != 0) continue;
        IntVector z(m.cols());
        for (std::size_t r = 0; r < m.cols(); ++r) z[r] = s.right.at(r, i);
        basis.push_back(std::move(z));
    }
    return basis;
}

}  // namespace mdcrt
