#pragma once

#include <compare>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <string_view>

namespace kzrat {

using Integer = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(const Integer& value) : value_(value) {}
    Rational(const Integer& numerator, const Integer& denominator);

    /// Accepts `p`, `p/q` and `-p/q` with decimal integers.
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational abs() const;
    Rational inverse() const;
    Rational pow(long exponent) const;

    std::string to_string() const;
    const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace kzrat
