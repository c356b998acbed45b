#pragma once

#include "ncparam/error.hpp"
#include "ncparam/polynomial.hpp"

#include <Eigen/Core>

#include <utility>

namespace ncparam {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using PolyMatrix = DenseMatrix<Polynomial>;

/// Exact-ring operations needed by fraction-free elimination.
template <class Ring>
struct RingTraits;

template <>
struct RingTraits<Polynomial> {
    static bool is_zero(const Polynomial& x) { return x.is_zero(); }
    static Polynomial one() { return Polynomial(1); }
    static Polynomial exact_divide(const Polynomial& a, const Polynomial& b) { return a.exact_divide(b); }
};

template <>
struct RingTraits<long long> {
    static bool is_zero(long long x) { return x == 0; }
    static long long one() { return 1; }
    static long long exact_divide(long long a, long long b) {
        if (b == 0 || a % b != 0)
            throw Error("integer division is not exact");
        return a / b;
    }
};

/// Determinant by Bareiss fraction-free elimination with row pivoting.
/// Every division is exact and only ever by a previous, nonzero pivot.
template <class Ring>
Ring bareiss_determinant(DenseMatrix<Ring> m) {
    using Traits = RingTraits<Ring>;
    if (m.rows() != m.cols())
        throw Error("determinant of a non-square matrix");
    const Eigen::Index n = m.rows();
    if (n == 0)
        return Traits::one();
    Ring previous = Traits::one();
    bool negate = false;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (Traits::is_zero(m(k, k))) {
            Eigen::Index pivot = k + 1;
            while (pivot < n && Traits::is_zero(m(pivot, k)))
                ++pivot;
            if (pivot == n)
                return Ring(0) * Traits::one();
            m.row(k).swap(m.row(pivot));
            negate = !negate;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j)
                m(i, j) = Traits::exact_divide(m(k, k) * m(i, j) - m(i, k) * m(k, j), previous);
        }
        previous = m(k, k);
    }
    Ring det = m(n - 1, n - 1);
    return negate ? Ring(0) - det : det;
}

/// Runs `steps` Bareiss steps without pivoting. Afterwards entry (i, j) with
/// i, j >= steps holds the determinant of the leading steps x steps block
/// bordered by row i and column j; diagonal entry (k, k), k < steps, holds the
/// leading principal minor of order k + 1. Throws on a zero pivot.
template <class Ring>
DenseMatrix<Ring> bareiss_eliminate(DenseMatrix<Ring> m, Eigen::Index steps) {
    using Traits = RingTraits<Ring>;
    if (m.rows() != m.cols() || steps > m.rows())
        throw Error("bad elimination request");
    const Eigen::Index n = m.rows();
    Ring previous = Traits::one();
    for (Eigen::Index k = 0; k < steps; ++k) {
        if (Traits::is_zero(m(k, k)))
            throw Error("zero pivot in fraction-free elimination");
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j)
                m(i, j) = Traits::exact_divide(m(k, k) * m(i, j) - m(i, k) * m(k, j), previous);
        }
        previous = m(k, k);
    }
    return m;
}

/// Exact determinant of a polynomial matrix.
inline Polynomial poly_det(const PolyMatrix& m) {
    return bareiss_determinant<Polynomial>(m);
}

} // namespace ncparam
