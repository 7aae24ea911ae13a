#include "kzrat/param_scalar.hpp"

#include "kzrat/errors.hpp"
#include "kzrat/scalar_text.hpp"

#include <ostream>

namespace kzrat {

ParamScalar canonicalize(const ParamPoly& num, const ParamPoly& den) { return ParamScalar(num, den); }

ParamScalar::ParamScalar(const ParamPoly& num, const ParamPoly& den) {
    if (den.is_zero()) {
        throw DegenerateScalar("scalar with zero denominator");
    }
    if (num.is_zero()) {
        den_ = ParamPoly(1);
        return;
    }
    ParamPoly n = num;
    ParamPoly d = den;
    if (!n.is_constant() && !d.is_constant()) {
        const ParamPoly g = gcd(n, d);
        if (!g.is_constant()) {
            n = exact_divide(n, g);
            d = exact_divide(d, g);
        }
    }
    Rational scale = primitive_scale(d);
    if (d.leading_coefficient().sign() < 0) scale = -scale;
    num_ = n * scale;
    den_ = d * scale;
}

Rational ParamScalar::constant_value() const {
    if (!is_constant()) {
        throw InvalidArgument("scalar depends on the parameters");
    }
    return num_.constant_term() / den_.constant_term();
}

ParamScalar ParamScalar::inverse() const {
    if (is_zero()) {
        throw DivisionByZero("inverse of the zero scalar");
    }
    return ParamScalar(den_, num_);
}

ParamScalar ParamScalar::pow(long exponent) const {
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    const auto e = static_cast<unsigned>(exponent);
    return ParamScalar(num_.pow(e), den_.pow(e), Canonical{});
}

Rational ParamScalar::evaluate(const Assignment& at) const {
    const Rational d = den_.evaluate(at.z1, at.z2);
    if (d.is_zero()) {
        throw EvaluationAtPole("scalar " + render_scalar(*this) + " has a pole at z1 = " + at.z1.to_string() +
                               ", z2 = " + at.z2.to_string());
    }
    return num_.evaluate(at.z1, at.z2) / d;
}

Rational ParamScalar::evaluate(const std::map<std::string, Rational>& at) const {
    auto z1 = at.find("z1");
    auto z2 = at.find("z2");
    if (z1 == at.end() || z2 == at.end()) {
        throw InvalidArgument("assignment must cover z1 and z2");
    }
    return evaluate(Assignment{z1->second, z2->second});
}

namespace {

ParamScalar substitute_poly(const ParamPoly& p, const ParamScalar& z1, const ParamScalar& z2) {
    ParamScalar sum;
    for (const auto& [m, c] : p.terms()) {
        sum += ParamScalar(c) * z1.pow(m.e1) * z2.pow(m.e2);
    }
    return sum;
}

}  // namespace

ParamScalar ParamScalar::substitute(const ParamScalar& z1, const ParamScalar& z2) const {
    const ParamScalar d = substitute_poly(den_, z1, z2);
    if (d.is_zero()) {
        throw EvaluationAtPole("substitution hits a pole of " + render_scalar(*this));
    }
    return substitute_poly(num_, z1, z2) / d;
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    if (den_ == rhs.den_) {
        if (den_.is_constant()) {
            num_ += rhs.num_;
            if (num_.is_zero()) den_ = ParamPoly(1);
            return *this;
        }
        return *this = ParamScalar(num_ + rhs.num_, den_);
    }
    return *this = ParamScalar(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& rhs) { return *this += -rhs; }

ParamScalar& ParamScalar::operator*=(const ParamScalar& rhs) {
    if (is_zero() || rhs.is_zero()) return *this = ParamScalar();
    if (den_.is_constant() && rhs.den_.is_constant()) {
        num_ *= rhs.num_;
        return *this;
    }
    // Cross-cancel before multiplying to keep the gcd inputs small.
    const ParamPoly g1 = gcd(num_, rhs.den_);
    const ParamPoly g2 = gcd(rhs.num_, den_);
    ParamPoly n = exact_divide(num_, g1) * exact_divide(rhs.num_, g2);
    ParamPoly d = exact_divide(den_, g2) * exact_divide(rhs.den_, g1);
    Rational scale = primitive_scale(d);
    if (d.leading_coefficient().sign() < 0) scale = -scale;
    num_ = n * scale;
    den_ = d * scale;
    return *this;
}

ParamScalar& ParamScalar::operator/=(const ParamScalar& rhs) {
    if (rhs.is_zero()) {
        throw DivisionByZero("division by the zero scalar");
    }
    return *this *= rhs.inverse();
}

ParamScalar ParamScalar::operator-() const { return ParamScalar(-num_, den_, Canonical{}); }

std::ostream& operator<<(std::ostream& os, const ParamScalar& s) { return os << render_scalar(s); }

}  // namespace kzrat
