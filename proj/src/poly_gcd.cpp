// Bivariate gcd and exact division over Q[z1, z2].
//
// Polynomials are viewed recursively as elements of Q[z2][z1]. The gcd is
// gcd(contents) * gcd(primitive parts), where the primitive parts are
// combined with a primitive pseudo-remainder sequence in z1.
#include "kzrat/errors.hpp"
#include "kzrat/param_poly.hpp"

#include <vector>

namespace kzrat {
namespace {

using UPoly = std::vector<Rational>;  // ascending powers of z2
using RPoly = std::vector<UPoly>;     // ascending powers of z1

void trim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

void trim(RPoly& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }
int degree(const RPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly add(const UPoly& a, const UPoly& b, const Rational& sb = 1) {
    UPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += sb * b[i];
    trim(r);
    return r;
}

UPoly mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

/// Quotient and remainder of univariate division over Q.
std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
    UPoly q;
    if (degree(a) >= degree(b)) q.assign(a.size() - b.size() + 1, Rational(0));
    const Rational lead_inv = b.back().inverse();
    while (!a.empty() && degree(a) >= degree(b)) {
        const std::size_t shift = a.size() - b.size();
        const Rational t = a.back() * lead_inv;
        q[shift] = t;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= t * b[j];
        a.pop_back();
        trim(a);
    }
    trim(q);
    return {q, a};
}

UPoly monic(UPoly p) {
    if (p.empty()) return p;
    const Rational inv = p.back().inverse();
    for (auto& c : p) c *= inv;
    return p;
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a));
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.empty()) throw InvalidArgument("polynomial division is not exact");
    return q;
}

RPoly to_recursive(const ParamPoly& p) {
    RPoly r(p.is_zero() ? 0 : p.degree_z1() + 1);
    for (const auto& [m, c] : p.terms()) {
        if (r[m.e1].size() <= m.e2) r[m.e1].resize(m.e2 + 1, Rational(0));
        r[m.e1][m.e2] = c;
    }
    return r;
}

ParamPoly from_recursive(const RPoly& r) {
    ParamPoly p;
    for (std::size_t i = 0; i < r.size(); ++i) {
        for (std::size_t j = 0; j < r[i].size(); ++j) {
            if (!r[i][j].is_zero()) {
                p += ParamPoly::monomial(r[i][j], static_cast<unsigned>(i), static_cast<unsigned>(j));
            }
        }
    }
    return p;
}

UPoly content(const RPoly& p) {
    UPoly c;
    for (const auto& coeff : p) {
        c = gcd(c, coeff);
        if (c.size() == 1) break;
    }
    return c;
}

RPoly div_coefficients(const RPoly& p, const UPoly& c) {
    RPoly r;
    r.reserve(p.size());
    for (const auto& coeff : p) r.push_back(coeff.empty() ? UPoly{} : exact_div(coeff, c));
    return r;
}

RPoly primitive_part(const RPoly& p) {
    if (p.empty()) return p;
    return div_coefficients(p, content(p));
}

/// lc(b)^k * a reduced modulo b, with k chosen so no division in Q[z2] is needed.
RPoly pseudo_remainder(RPoly a, const RPoly& b) {
    const UPoly& lb = b.back();
    while (!a.empty() && degree(a) >= degree(b)) {
        const std::size_t shift = a.size() - b.size();
        const UPoly la = a.back();
        for (auto& coeff : a) coeff = mul(coeff, lb);
        for (std::size_t j = 0; j < b.size(); ++j) {
            a[shift + j] = add(a[shift + j], mul(la, b[j]), Rational(-1));
        }
        trim(a);
    }
    return a;
}

RPoly gcd(const RPoly& a, const RPoly& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    const UPoly c = gcd(content(a), content(b));
    RPoly x = primitive_part(a);
    RPoly y = primitive_part(b);
    if (degree(x) < degree(y)) std::swap(x, y);
    while (!y.empty()) {
        RPoly r = primitive_part(pseudo_remainder(x, y));
        x = std::move(y);
        y = std::move(r);
    }
    for (auto& coeff : x) coeff = mul(coeff, c);
    trim(x);
    return x;
}

}  // namespace

ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    ParamPoly g;
    if (a.is_constant() && !a.is_zero()) {
        g = ParamPoly(1);
    } else if (b.is_constant() && !b.is_zero()) {
        g = ParamPoly(1);
    } else {
        g = from_recursive(gcd(to_recursive(a), to_recursive(b)));
    }
    return g * g.leading_coefficient().inverse();
}

ParamPoly exact_divide(const ParamPoly& a, const ParamPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (b.is_constant()) return a * b.constant_term().inverse();
    RPoly rem = to_recursive(a);
    const RPoly divisor = to_recursive(b);
    RPoly quotient(rem.size() >= divisor.size() ? rem.size() - divisor.size() + 1 : 0);
    while (!rem.empty() && degree(rem) >= degree(divisor)) {
        const std::size_t shift = rem.size() - divisor.size();
        const UPoly t = exact_div(rem.back(), divisor.back());
        quotient[shift] = t;
        for (std::size_t j = 0; j < divisor.size(); ++j) {
            rem[shift + j] = add(rem[shift + j], mul(t, divisor[j]), Rational(-1));
        }
        trim(rem);
    }
    if (!rem.empty()) throw InvalidArgument("polynomial division is not exact");
    trim(quotient);
    return from_recursive(quotient);
}

}  // namespace kzrat
