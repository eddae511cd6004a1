#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "cmposet/integer.hpp"

namespace cmposet {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = DenseMatrix<std::int64_t>;
using BigMatrix = DenseMatrix<BigInt>;

/// left * M * right = diag(invariants) padded with zeros; invariants are
/// positive and each divides the next. left and right are unimodular.
template <typename Scalar>
struct SmithDecomposition {
    DenseMatrix<Scalar> left;
    DenseMatrix<Scalar> right;
    std::vector<Scalar> invariants;
};

namespace detail {

template <typename Scalar>
void row_axpy(DenseMatrix<Scalar>& m, Eigen::Index dst, Eigen::Index src, const Scalar& q) {
    // row dst -= q * row src
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        if (m(src, j) != 0) m(dst, j) = checked_sub(m(dst, j), checked_mul(q, m(src, j)));
}

template <typename Scalar>
void col_axpy(DenseMatrix<Scalar>& m, Eigen::Index dst, Eigen::Index src, const Scalar& q) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        if (m(i, src) != 0) m(i, dst) = checked_sub(m(i, dst), checked_mul(q, m(i, src)));
}

}  // namespace detail

/// Exact matrix product with overflow checking. Eigen's operator* is avoided
/// because it neither checks int64 overflow nor compiles for cpp_int under
/// C++20 with Boost 1.74.
template <typename Scalar>
DenseMatrix<Scalar> exact_product(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
    DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Zero(a.rows(), b.cols());
    for (Eigen::Index j = 0; j < b.cols(); ++j)
        for (Eigen::Index k = 0; k < a.cols(); ++k)
            if (b(k, j) != 0)
                for (Eigen::Index i = 0; i < a.rows(); ++i)
                    if (a(i, k) != 0) out(i, j) = checked_add(out(i, j), checked_mul(a(i, k), b(k, j)));
    return out;
}

/// Smith normal form by elimination with minimal-magnitude pivots. With
/// `track` false the transforms are left empty.
template <typename Scalar>
SmithDecomposition<Scalar> smith_decomposition(DenseMatrix<Scalar> a, bool track = true) {
    using detail::col_axpy;
    using detail::row_axpy;
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = a.cols();
    SmithDecomposition<Scalar> out;
    DenseMatrix<Scalar> left;
    DenseMatrix<Scalar> right;
    if (track) {
        left = DenseMatrix<Scalar>::Identity(rows, rows);
        right = DenseMatrix<Scalar>::Identity(cols, cols);
    }
    auto swap_rows = [&](Eigen::Index i, Eigen::Index j) {
        if (i == j) return;
        a.row(i).swap(a.row(j));
        if (track) left.row(i).swap(left.row(j));
    };
    auto swap_cols = [&](Eigen::Index i, Eigen::Index j) {
        if (i == j) return;
        a.col(i).swap(a.col(j));
        if (track) right.col(i).swap(right.col(j));
    };

    for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
        // smallest nonzero entry of the trailing block
        Eigen::Index pi = -1;
        Eigen::Index pj = -1;
        Scalar best = 0;
        for (Eigen::Index j = t; j < cols; ++j)
            for (Eigen::Index i = t; i < rows; ++i)
                if (a(i, j) != 0 && (pi < 0 || abs_value(a(i, j)) < best)) {
                    best = abs_value(a(i, j));
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        for (;;) {
            bool clean = true;
            for (Eigen::Index i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                const Scalar q = a(i, t) / a(t, t);
                row_axpy(a, i, t, q);
                if (track) row_axpy(left, i, t, q);
                if (a(i, t) != 0) clean = false;
            }
            for (Eigen::Index j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                const Scalar q = a(t, j) / a(t, t);
                col_axpy(a, j, t, q);
                if (track) col_axpy(right, j, t, q);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) {
                // a remainder smaller than the pivot survived; move it to (t,t)
                Eigen::Index bi = t;
                Eigen::Index bj = t;
                Scalar small = abs_value(a(t, t));
                for (Eigen::Index i = t + 1; i < rows; ++i)
                    if (a(i, t) != 0 && abs_value(a(i, t)) < small) {
                        small = abs_value(a(i, t));
                        bi = i;
                        bj = t;
                    }
                for (Eigen::Index j = t + 1; j < cols; ++j)
                    if (a(t, j) != 0 && abs_value(a(t, j)) < small) {
                        small = abs_value(a(t, j));
                        bi = t;
                        bj = j;
                    }
                swap_rows(t, bi);
                swap_cols(t, bj);
                continue;
            }
            // divisibility of the trailing block by the pivot
            Eigen::Index bad = -1;
            for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i)
                for (Eigen::Index j = t + 1; j < cols; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            row_axpy(a, t, bad, Scalar(-1));
            if (track) row_axpy(left, t, bad, Scalar(-1));
        }
        if (a(t, t) < 0) {
            a.row(t) = -a.row(t);
            if (track) left.row(t) = -left.row(t);
        }
        out.invariants.push_back(a(t, t));
    }
    out.left = std::move(left);
    out.right = std::move(right);
    return out;
}

/// Sparse integer matrix stored by columns; rows inside a column are sorted.
struct SparseIntMatrix {
    struct Entry {
        std::int32_t row;
        std::int64_t value;
    };
    std::int32_t rows = 0;
    std::int32_t cols = 0;
    std::vector<std::vector<Entry>> columns;

    SparseIntMatrix() = default;
    SparseIntMatrix(std::int32_t r, std::int32_t c) : rows(r), cols(c), columns(static_cast<std::size_t>(c)) {}

    std::size_t nonzeros() const;
    IntMatrix to_dense() const;
    static SparseIntMatrix from_dense(const IntMatrix& m);
};

/// Rank and invariant factors of an integer matrix.
struct SmithInvariants {
    std::size_t rank = 0;
    std::vector<BigInt> torsion;  ///< invariant factors > 1, in divisibility order

    /// All nonzero invariants d_1 | d_2 | ... (units first).
    std::vector<BigInt> all() const;
};

/// Sparse elimination on unit pivots followed by a dense pass over what is
/// left. Runs on 64-bit entries and restarts with arbitrary precision if an
/// intermediate value overflows.
SmithInvariants smith_invariants(const SparseIntMatrix& m);

/// Same, through the dense route (used as a cross-check and for small inputs).
SmithInvariants smith_invariants_dense(const IntMatrix& m);

/// Puts a list of diagonal entries into divisibility order via gcd/lcm.
std::vector<BigInt> normalize_diagonal(std::vector<BigInt> diagonal);

/// Re-multiplies a decomposition and checks it (unimodular transforms, exact
/// diagonal, divisibility chain).
template <typename Scalar>
bool verify_smith(const DenseMatrix<Scalar>& m, const SmithDecomposition<Scalar>& d);

}  // namespace cmposet
