#pragma once

#include "kzrat/residues.hpp"
#include "kzrat/univariate.hpp"

#include <array>
#include <span>
#include <string>

namespace kzrat {

using ZPoly = Polynomial<ParamScalar>;
/// Rational function of z with coefficients in Q(z1, z2).
using ZFunction = RationalFunction<ParamScalar>;
using ZVector = std::array<ZFunction, 3>;

/// W(z) entry-wise as reduced rational functions of z.
ZVector to_functions(const RationalSolution& w);

/// Term-wise exact derivative dW/dz.
ZVector differentiate(const RationalSolution& w);

struct ResidualReport {
    bool is_zero = false;
    ZVector entries;
};

/// dW/dz - multiplier * A(z) W, computed over the common denominator
/// (z - z1)^3 (z - z2)^3. The poles of w must be those of sys.
ResidualReport residual(const KZSystem& sys, const RationalSolution& w);

struct IndependenceReport {
    bool independent = false;
    ZFunction determinant;
};

/// Determinant of the matrix whose columns are the three solutions.
IndependenceReport independence(std::span<const RationalSolution> solutions);

struct NumericCheck {
    bool passed = false;
    double max_relative_error = 0.0;
    std::size_t steps = 0;
};

/// Integrates the system from `from` to `to` with an adaptive Dormand-Prince
/// 5(4) pair in 64-digit floating point, starting at the exact W(from), and
/// compares against the exact W(to). Components with |W(to)| < 1e-30 are
/// compared absolutely. Throws InvalidPath if [from, to] meets a pole.
NumericCheck numeric_crosscheck(const KZSystem& sys, const RationalSolution& w, const Rational& from,
                                const Rational& to, double tolerance);

}  // namespace kzrat

namespace kzrat {

/// Text form in the variable z with scalar-grammar coefficients,
/// e.g. `(2)*z^2 + (z1 - z2)*z` or `(num)/(den)`.
std::string render_zpoly(const ZPoly& p);
std::string render_zfunction(const ZFunction& f);

}  // namespace kzrat
