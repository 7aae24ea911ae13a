#pragma once

#include "kzrat/param_poly.hpp"
#include "kzrat/param_scalar.hpp"

#include <string>
#include <string_view>

namespace kzrat {

/// Parses the scalar grammar: integers, `+ - * / ^ ( )`, variables z1 and z2.
/// `^` takes a non-negative integer literal. Whitespace is ignored.
/// Throws ParseError (with position) on malformed input or unknown variables.
ParamScalar parse_scalar(std::string_view text);

/// Canonical text: deglex terms with z1 > z2, e.g. `z1^2 - (3/5)*z1*z2 + 2`.
std::string render_poly(const ParamPoly& p);

/// `num` for polynomials, `(num)/(den)` otherwise.
std::string render_scalar(const ParamScalar& s);

/// LaTeX math-mode rendering using `\frac`, `\cdot` and `z_{1}`, `z_{2}`.
std::string render_scalar_latex(const ParamScalar& s);

}  // namespace kzrat
