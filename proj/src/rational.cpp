#include "kzrat/rational.hpp"

#include "kzrat/errors.hpp"

#include <cctype>
#include <ostream>

namespace kzrat {

Rational::Rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) {
        throw DivisionByZero("rational with zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

namespace {

Integer parse_integer(std::string_view digits, std::string_view whole) {
    if (digits.empty()) {
        throw ParseError("expected digits in rational literal '" + std::string(whole) + "'", 0);
    }
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
            throw ParseError("invalid character in rational literal '" + std::string(whole) + "'", i);
        }
    }
    return Integer(std::string(digits), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    Integer num;
    Integer den = 1;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = parse_integer(body.substr(0, slash), text);
        den = parse_integer(body.substr(slash + 1), text);
    } else {
        num = parse_integer(body, text);
    }
    if (negative) {
        num = -num;
    }
    return Rational(num, den);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
    if (is_zero()) {
        throw DivisionByZero("inverse of zero");
    }
    return Rational(value_.get_den(), value_.get_num());
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    Integer n;
    Integer d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(n, d);
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw DivisionByZero("rational division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace kzrat
