#pragma once

// Fraction-free (Bareiss) elimination over an exact field.

#include "kzrat/errors.hpp"

#include <Eigen/Core>
#include <utility>

namespace kzrat {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

namespace detail {

/// Runs Bareiss elimination on [A | B] in place. Returns the sign of the row
/// permutation, or 0 if A is singular. On success A is upper triangular and
/// A(n-1, n-1) is det(A) up to that sign.
template <typename Scalar>
int bareiss_eliminate(DenseMatrix<Scalar>& a, DenseMatrix<Scalar>& b) {
    const Eigen::Index n = a.rows();
    int sign = 1;
    Scalar previous(1);
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index pivot = k;
        while (pivot < n && is_zero(a(pivot, k))) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            a.row(k).swap(a.row(pivot));
            b.row(k).swap(b.row(pivot));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / previous;
            }
            for (Eigen::Index j = 0; j < b.cols(); ++j) {
                b(i, j) = (a(k, k) * b(i, j) - a(i, k) * b(k, j)) / previous;
            }
            a(i, k) = Scalar(0);
        }
        previous = a(k, k);
    }
    return sign;
}

}  // namespace detail

/// Exact solution X of A X = B. Throws SingularMatrix if A is singular.
template <typename DerivedA, typename DerivedB>
auto solve_exact(const Eigen::MatrixBase<DerivedA>& a_in, const Eigen::MatrixBase<DerivedB>& b_in) {
    using Scalar = typename DerivedA::Scalar;
    if (a_in.rows() != a_in.cols() || a_in.rows() != b_in.rows()) {
        throw InvalidArgument("solve_exact: dimension mismatch");
    }
    DenseMatrix<Scalar> a = a_in;
    DenseMatrix<Scalar> b = b_in;
    if (detail::bareiss_eliminate(a, b) == 0) {
        throw SingularMatrix("solve_exact: singular matrix");
    }
    const Eigen::Index n = a.rows();
    Eigen::Matrix<Scalar, DerivedB::RowsAtCompileTime, DerivedB::ColsAtCompileTime> x(b.rows(), b.cols());
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
        for (Eigen::Index i = n - 1; i >= 0; --i) {
            Scalar acc = b(i, j);
            for (Eigen::Index k = i + 1; k < n; ++k) acc -= a(i, k) * x(k, j);
            x(i, j) = acc / a(i, i);
        }
    }
    return x;
}

template <typename Derived>
typename Derived::Scalar determinant_exact(const Eigen::MatrixBase<Derived>& a_in) {
    using Scalar = typename Derived::Scalar;
    DenseMatrix<Scalar> a = a_in;
    DenseMatrix<Scalar> none(a.rows(), 0);
    const int sign = detail::bareiss_eliminate(a, none);
    if (sign == 0) return Scalar(0);
    const Scalar det = a(a.rows() - 1, a.cols() - 1);
    return sign > 0 ? det : Scalar(-det);
}

template <typename Derived>
auto inverse_exact(const Eigen::MatrixBase<Derived>& a) {
    using Scalar = typename Derived::Scalar;
    using Square = Eigen::Matrix<Scalar, Derived::RowsAtCompileTime, Derived::ColsAtCompileTime>;
    Square identity = Square::Identity(a.rows(), a.cols());
    return solve_exact(a, identity);
}

}  // namespace kzrat
