#pragma once

#include "kzrat/param_poly.hpp"
#include "kzrat/rational.hpp"

#include <iosfwd>
#include <map>
#include <string>

namespace kzrat {

/// Values for the parameters z1, z2.
struct Assignment {
    Rational z1;
    Rational z2;
};

/// Element of the rational function field Q(z1, z2).
///
/// Always stored in canonical form: num and den coprime, den with integer
/// coefficients of content 1 and a positive deglex-leading coefficient.
/// Zero is 0/1. Two scalars are equal iff their representations are identical.
class ParamScalar {
public:
    ParamScalar() : den_(1) {}
    ParamScalar(long value) : num_(value), den_(1) {}                // NOLINT(google-explicit-constructor)
    ParamScalar(const Rational& value) : num_(value), den_(1) {}     // NOLINT(google-explicit-constructor)
    ParamScalar(const ParamPoly& poly) : num_(poly), den_(1) {}      // NOLINT(google-explicit-constructor)
    ParamScalar(const ParamPoly& num, const ParamPoly& den);

    static ParamScalar z1() { return ParamScalar(ParamPoly::z1()); }
    static ParamScalar z2() { return ParamScalar(ParamPoly::z2()); }

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    /// True when the value does not depend on z1, z2.
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// Value of a parameter-free scalar. Throws InvalidArgument otherwise.
    Rational constant_value() const;
    bool is_polynomial() const { return den_.is_constant(); }

    ParamScalar inverse() const;
    ParamScalar pow(long exponent) const;

    Rational evaluate(const Assignment& at) const;
    /// `at` must contain entries named "z1" and "z2".
    Rational evaluate(const std::map<std::string, Rational>& at) const;
    /// Replaces z1, z2 by the given scalars.
    ParamScalar substitute(const ParamScalar& z1, const ParamScalar& z2) const;

    ParamScalar& operator+=(const ParamScalar& rhs);
    ParamScalar& operator-=(const ParamScalar& rhs);
    ParamScalar& operator*=(const ParamScalar& rhs);
    ParamScalar& operator/=(const ParamScalar& rhs);

    friend ParamScalar operator+(ParamScalar lhs, const ParamScalar& rhs) { return lhs += rhs; }
    friend ParamScalar operator-(ParamScalar lhs, const ParamScalar& rhs) { return lhs -= rhs; }
    friend ParamScalar operator*(ParamScalar lhs, const ParamScalar& rhs) { return lhs *= rhs; }
    friend ParamScalar operator/(ParamScalar lhs, const ParamScalar& rhs) { return lhs /= rhs; }
    ParamScalar operator-() const;

    friend bool operator==(const ParamScalar& a, const ParamScalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    struct Canonical {};
    ParamScalar(ParamPoly num, ParamPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

    ParamPoly num_;
    ParamPoly den_;
};

/// Reduces num/den to the canonical representative. Throws DegenerateScalar if den = 0.
ParamScalar canonicalize(const ParamPoly& num, const ParamPoly& den);

inline bool is_zero(const ParamScalar& s) { return s.is_zero(); }

std::ostream& operator<<(std::ostream& os, const ParamScalar& s);

}  // namespace kzrat
