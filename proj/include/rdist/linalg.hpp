#pragma once

#include <cstddef>
#include <vector>

#include "rdist/error.hpp"
#include "rdist/matrix.hpp"
#include "rdist/rational.hpp"

namespace rdist {

/// A square matrix split as [[a11, a12], [a21, a22]] with a11 of size p x p
/// and a22 of size q x q.
template <typename T = Rational>
struct PartitionedMatrix {
    Matrix<T> a11, a12, a21, a22;

    std::size_t leading() const noexcept { return a11.rows(); }
    std::size_t trailing() const noexcept { return a22.rows(); }

    void check_shapes() const {
        const std::size_t p = a11.rows(), q = a22.rows();
        const bool ok = a11.cols() == p && a22.cols() == q && a12.rows() == p && a12.cols() == q &&
                        a21.rows() == q && a21.cols() == p;
        if (!ok)
            throw Error(Errc::dim_mismatch, "blocks " + a11.shape() + ", " + a12.shape() + ", " +
                                                a21.shape() + ", " + a22.shape() + " are not conformable");
    }

    Matrix<T> assemble() const {
        check_shapes();
        const std::size_t p = leading(), n = p + trailing();
        Matrix<T> out(n, n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                if (r < p)
                    out(r, c) = c < p ? a11(r, c) : a12(r, c - p);
                else
                    out(r, c) = c < p ? a21(r - p, c) : a22(r - p, c - p);
            }
        }
        return out;
    }

    static PartitionedMatrix split(const Matrix<T>& m, std::size_t p) {
        if (!m.is_square() || p > m.rows())
            throw Error(Errc::dim_mismatch, "cannot split " + m.shape() + " at " + std::to_string(p));
        const std::size_t q = m.rows() - p;
        return {m.block(0, 0, p, p), m.block(0, p, p, q), m.block(p, 0, q, p), m.block(p, p, q, q)};
    }
};

/// Exact inverse by fraction-free Gauss-Jordan elimination.
///
/// Each row is first scaled by the lcm of its denominators so elimination runs
/// over integers. Every update is (pivot * m_ij - m_ik * m_kj) / previous_pivot,
/// which divides exactly because all intermediate entries are minors of the
/// scaled matrix. The pivot for column k is the nonzero entry with the
/// smallest row index at or below k.
inline Matrix<Rational> invert(const Matrix<Rational>& a) {
    if (!a.is_square()) throw Error(Errc::dim_mismatch, "cannot invert non-square " + a.shape());
    const std::size_t n = a.rows();
    const std::size_t width = 2 * n;

    std::vector<Integer> row_scale(n, Integer(1));
    std::vector<Integer> work(n * width, Integer(0));
    auto at = [&](std::size_t r, std::size_t c) -> Integer& { return work[r * width + c]; };

    for (std::size_t r = 0; r < n; ++r) {
        Integer scale = 1;
        for (std::size_t c = 0; c < n; ++c) scale = lcm(scale, denominator_of(a(r, c)));
        row_scale[r] = scale;
        for (std::size_t c = 0; c < n; ++c)
            at(r, c) = numerator_of(a(r, c)) * (scale / denominator_of(a(r, c)));
        at(r, n + r) = 1;
    }

    Integer previous = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot_row = k;
        while (pivot_row < n && at(pivot_row, k) == 0) ++pivot_row;
        if (pivot_row == n) throw Error(Errc::singular, "matrix " + a.shape() + " is singular");
        if (pivot_row != k)
            for (std::size_t c = 0; c < width; ++c) std::swap(at(k, c), at(pivot_row, c));

        const Integer pivot = at(k, k);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const Integer factor = at(i, k);
            for (std::size_t j = 0; j < width; ++j) {
                Integer& target = at(i, j);
                target = (pivot * target - factor * at(k, j)) / previous;
            }
        }
        previous = pivot;
    }

    // Left half is now diag(d, ..., d); the right half holds d * (scaled a)^-1.
    // Undo the row scaling: a^-1 = (diag(s) a)^-1 diag(s).
    Matrix<Rational> out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            out(r, c) = ratio(at(r, n + c) * row_scale[c], at(r, r));
    return out;
}

/// D - C A^-1 B for M = [[A, B], [C, D]].
inline Matrix<Rational> schur_complement(const PartitionedMatrix<Rational>& m) {
    m.check_shapes();
    return m.a22 - m.a21 * invert(m.a11) * m.a12;
}

/// Inverse of a nonsingular partitioned matrix assembled blockwise from the
/// inverses of the leading block and of its Schur complement.
inline Matrix<Rational> block_inverse(const PartitionedMatrix<Rational>& m) {
    m.check_shapes();
    const auto a_inv = invert(m.a11);
    const auto s_inv = invert(m.a22 - m.a21 * a_inv * m.a12);
    const auto a_inv_b = a_inv * m.a12;
    const auto c_a_inv = m.a21 * a_inv;
    PartitionedMatrix<Rational> out{
        a_inv + a_inv_b * s_inv * c_a_inv,
        -(a_inv_b * s_inv),
        -(s_inv * c_a_inv),
        s_inv,
    };
    return out.assemble();
}

/// Group inverse of a symmetric matrix whose kernel is exactly the all-ones
/// line, via the rank-one shift (S + J/N)^-1 - J/N.
///
/// Throws KernelMismatch when S does not annihilate the all-ones vector or the
/// shifted matrix is singular (kernel larger than span(1)).
inline Matrix<Rational> group_inverse_laplacian_like(const Matrix<Rational>& s) {
    if (!s.is_square()) throw Error(Errc::dim_mismatch, "group inverse of non-square " + s.shape());
    const std::size_t n = s.rows();
    if (!row_sums(s).is_zero())
        throw Error(Errc::kernel_mismatch, "row sums are not zero; all-ones vector is not in the kernel");
    const auto shift = all_ones<Rational>(n) * ratio(1, Integer(n));
    try {
        return invert(s + shift) - shift;
    } catch (const Error& e) {
        if (e.code() != Errc::singular) throw;
        throw Error(Errc::kernel_mismatch, "kernel is larger than span(1)");
    }
}

/// AXA = A.
inline bool verify_one_inverse(const Matrix<Rational>& a, const Matrix<Rational>& x) {
    if (x.rows() != a.cols() || x.cols() != a.rows()) return false;
    return a * x * a == a;
}

/// AXA = A, XAX = X and AX = XA.
inline bool verify_group_inverse(const Matrix<Rational>& a, const Matrix<Rational>& x) {
    if (!a.is_square() || !x.is_square() || a.rows() != x.rows()) return false;
    const auto ax = a * x;
    const auto xa = x * a;
    return ax == xa && ax * a == a && x * ax == x;
}

}  // namespace rdist
