#pragma once

// Dense univariate polynomials and rational functions in z over an exact field F.

#include "kzrat/errors.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace kzrat {

namespace detail {
template <typename F>
bool value_is_zero(const F& v) {
    return is_zero(v);
}
}  // namespace detail

template <typename F>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const F& constant) : coeffs_{constant} { trim(); }  // NOLINT(google-explicit-constructor)
    Polynomial(std::initializer_list<F> ascending) : coeffs_(ascending) { trim(); }
    explicit Polynomial(std::vector<F> ascending) : coeffs_(std::move(ascending)) { trim(); }

    /// The polynomial z - a.
    static Polynomial linear_factor(const F& a) { return Polynomial{-a, F(1)}; }
    static Polynomial monomial(const F& c, int power) {
        std::vector<F> v(static_cast<std::size_t>(power) + 1, F(0));
        v.back() = c;
        return Polynomial(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<F>& coefficients() const { return coeffs_; }
    F coefficient(int power) const {
        return power >= 0 && power <= degree() ? coeffs_[static_cast<std::size_t>(power)] : F(0);
    }
    F leading() const { return coeffs_.empty() ? F(0) : coeffs_.back(); }

    F evaluate(const F& z) const {
        F acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    Polynomial derivative() const {
        std::vector<F> d;
        for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * F(static_cast<long>(i)));
        return Polynomial(std::move(d));
    }

    Polynomial pow(unsigned e) const {
        Polynomial r(F(1));
        for (unsigned i = 0; i < e; ++i) r *= *this;
        return r;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return *this * Polynomial(F(1) / leading());
    }

    /// Euclidean division; divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const {
        if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
        std::vector<F> rem = coeffs_;
        std::vector<F> quot;
        if (degree() >= divisor.degree()) quot.assign(coeffs_.size() - divisor.coeffs_.size() + 1, F(0));
        const F lead_inv = F(1) / divisor.leading();
        while (!rem.empty() && static_cast<int>(rem.size()) - 1 >= divisor.degree()) {
            const std::size_t shift = rem.size() - divisor.coeffs_.size();
            const F t = rem.back() * lead_inv;
            quot[shift] = t;
            for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j) rem[shift + j] -= t * divisor.coeffs_[j];
            rem.pop_back();
            while (!rem.empty() && is_zero_value(rem.back())) rem.pop_back();
        }
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    Polynomial& operator+=(const Polynomial& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), F(0));
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& rhs) { return *this += -rhs; }
    Polynomial& operator*=(const Polynomial& rhs) {
        if (is_zero() || rhs.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        std::vector<F> p(coeffs_.size() + rhs.coeffs_.size() - 1, F(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (is_zero_value(coeffs_[i])) continue;
            for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) p[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
        coeffs_ = std::move(p);
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    Polynomial operator-() const {
        Polynomial n = *this;
        for (auto& c : n.coeffs_) c = -c;
        return n;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    static bool is_zero_value(const F& v) { return detail::value_is_zero(v); }
    void trim() {
        while (!coeffs_.empty() && is_zero_value(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<F> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
template <typename F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Quotient of polynomials in z over F, kept reduced with a monic denominator.
template <typename F>
class RationalFunction {
public:
    RationalFunction() : den_(F(1)) {}
    RationalFunction(const Polynomial<F>& p) : num_(p), den_(F(1)) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(const Polynomial<F>& num, const Polynomial<F>& den) : num_(num), den_(den) { reduce(); }

    /// Skips the gcd; the caller guarantees num and den are coprime.
    static RationalFunction from_coprime(const Polynomial<F>& num, const Polynomial<F>& den) {
        RationalFunction r;
        r.num_ = num;
        r.den_ = den;
        r.normalize();
        return r;
    }

    const Polynomial<F>& num() const { return num_; }
    const Polynomial<F>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    F evaluate(const F& z) const {
        const F d = den_.evaluate(z);
        if (is_zero_value(d)) throw EvaluationAtPole("rational function evaluated at a pole");
        return num_.evaluate(z) / d;
    }

    RationalFunction derivative() const {
        return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    static bool is_zero_value(const F& v) { return detail::value_is_zero(v); }

    void reduce() {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Polynomial<F>(F(1));
            return;
        }
        const Polynomial<F> g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
        normalize();
    }

    void normalize() {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Polynomial<F>(F(1));
            return;
        }
        const F lead = den_.leading();
        num_ = num_ * Polynomial<F>(F(1) / lead);
        den_ = den_ * Polynomial<F>(F(1) / lead);
    }

    Polynomial<F> num_;
    Polynomial<F> den_;
};

}  // namespace kzrat
