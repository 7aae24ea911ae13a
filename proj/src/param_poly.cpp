#include "kzrat/param_poly.hpp"

#include <algorithm>

namespace kzrat {

ParamPoly::ParamPoly(const Rational& constant) {
    if (!constant.is_zero()) {
        terms_.emplace(Monomial{0, 0}, constant);
    }
}

ParamPoly ParamPoly::z1() { return monomial(1, 1, 0); }

ParamPoly ParamPoly::z2() { return monomial(1, 0, 1); }

ParamPoly ParamPoly::monomial(const Rational& coefficient, unsigned e1, unsigned e2) {
    ParamPoly p;
    p.add_term(Monomial{e1, e2}, coefficient);
    return p;
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Rational ParamPoly::constant_term() const {
    auto it = terms_.find(Monomial{0, 0});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational ParamPoly::leading_coefficient() const {
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Monomial ParamPoly::leading_monomial() const {
    return terms_.empty() ? Monomial{} : terms_.begin()->first;
}

unsigned ParamPoly::total_degree() const { return leading_monomial().degree(); }

unsigned ParamPoly::degree_z1() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.e1);
    return d;
}

unsigned ParamPoly::degree_z2() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.e2);
    return d;
}

bool ParamPoly::is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [d = total_degree()](const auto& t) { return t.first.degree() == d; });
}

Rational ParamPoly::evaluate(const Rational& z1, const Rational& z2) const {
    Rational sum = 0;
    for (const auto& [m, c] : terms_) {
        sum += c * z1.pow(m.e1) * z2.pow(m.e2);
    }
    return sum;
}

void ParamPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& rhs) {
    ParamPoly product;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            product.add_term(Monomial{ma.e1 + mb.e1, ma.e2 + mb.e2}, ca * cb);
        }
    }
    terms_ = std::move(product.terms_);
    return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& rhs) {
    if (rhs.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= rhs;
    return *this;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly negated = *this;
    for (auto& [m, c] : negated.terms_) c = -c;
    return negated;
}

ParamPoly ParamPoly::pow(unsigned exponent) const {
    ParamPoly result(1);
    ParamPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

Rational primitive_scale(const ParamPoly& p) {
    Integer num_gcd = 0;
    Integer den_lcm = 1;
    for (const auto& [m, c] : p.terms()) {
        Integer n = c.numerator();
        Integer d = c.denominator();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    if (num_gcd == 0) return Rational(1);
    return Rational(den_lcm, num_gcd);
}

}  // namespace kzrat
