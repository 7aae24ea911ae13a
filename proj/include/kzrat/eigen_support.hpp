#pragma once

// Eigen integration for the exact scalar types. Only coefficient-wise
// arithmetic and fixed-size products are used; nothing here relies on
// Eigen's floating-point decompositions.

#include "kzrat/param_scalar.hpp"
#include "kzrat/rational.hpp"

#include <Eigen/Core>

namespace kzrat::detail {

template <typename T>
struct ExactNumTraits : Eigen::GenericNumTraits<T> {
    using Real = T;
    using NonInteger = T;
    using Literal = T;
    using Nested = T;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 50,
        MulCost = 100
    };

    static T epsilon() { return T(0); }
    static T dummy_precision() { return T(0); }
    static int digits10() { return 0; }
};

}  // namespace kzrat::detail

namespace Eigen {

template <>
struct NumTraits<kzrat::Rational> : kzrat::detail::ExactNumTraits<kzrat::Rational> {};

template <>
struct NumTraits<kzrat::ParamScalar> : kzrat::detail::ExactNumTraits<kzrat::ParamScalar> {};

}  // namespace Eigen

namespace kzrat {

template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;
template <typename Scalar>
using Matrix4 = Eigen::Matrix<Scalar, 4, 4>;

using Vec3 = Vector3<ParamScalar>;
using Mat3 = Matrix3<ParamScalar>;

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (!is_zero(m(i, j))) return false;
        }
    }
    return true;
}

/// Entry-wise lift of a rational matrix into the parameter field.
template <typename Derived>
auto lift(const Eigen::MatrixBase<Derived>& m) {
    return m.template cast<ParamScalar>().eval();
}

}  // namespace kzrat
