#pragma once

#include "kzrat/rational.hpp"

#include <map>
#include <string>

namespace kzrat {

/// Exponent pair of z1^e1 * z2^e2.
struct Monomial {
    unsigned e1 = 0;
    unsigned e2 = 0;

    unsigned degree() const { return e1 + e2; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Degree-lexicographic order with z1 > z2; greater monomials sort first.
struct DeglexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        return a.e1 > b.e1;
    }
};

/// Polynomial in z1, z2 with rational coefficients. Zero coefficients are never stored.
class ParamPoly {
public:
    using Terms = std::map<Monomial, Rational, DeglexDescending>;

    ParamPoly() = default;
    ParamPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
    ParamPoly(long constant) : ParamPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

    static ParamPoly z1();
    static ParamPoly z2();
    static ParamPoly monomial(const Rational& coefficient, unsigned e1, unsigned e2);

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the constant monomial (0 if absent).
    Rational constant_term() const;
    /// Coefficient of the deglex-greatest monomial; zero polynomial yields 0.
    Rational leading_coefficient() const;
    Monomial leading_monomial() const;
    unsigned total_degree() const;
    unsigned degree_z1() const;
    unsigned degree_z2() const;
    bool is_homogeneous() const;

    Rational evaluate(const Rational& z1, const Rational& z2) const;

    ParamPoly& operator+=(const ParamPoly& rhs);
    ParamPoly& operator-=(const ParamPoly& rhs);
    ParamPoly& operator*=(const ParamPoly& rhs);
    ParamPoly& operator*=(const Rational& rhs);

    friend ParamPoly operator+(ParamPoly lhs, const ParamPoly& rhs) { return lhs += rhs; }
    friend ParamPoly operator-(ParamPoly lhs, const ParamPoly& rhs) { return lhs -= rhs; }
    friend ParamPoly operator*(ParamPoly lhs, const ParamPoly& rhs) { return lhs *= rhs; }
    friend ParamPoly operator*(ParamPoly lhs, const Rational& rhs) { return lhs *= rhs; }
    ParamPoly operator-() const;

    ParamPoly pow(unsigned exponent) const;

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }

private:
    void add_term(const Monomial& m, const Rational& c);

    Terms terms_;
};

/// Monic-normalized greatest common divisor over Q[z1, z2]: the result is
/// scaled so its deglex leading coefficient is 1. gcd(0, 0) = 0.
ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

/// Exact quotient a / b. Throws InvalidArgument if b does not divide a.
ParamPoly exact_divide(const ParamPoly& a, const ParamPoly& b);

/// lcm of coefficient denominators divided by gcd of coefficient numerators,
/// i.e. the positive rational that makes the polynomial primitive over Z.
Rational primitive_scale(const ParamPoly& p);

}  // namespace kzrat
