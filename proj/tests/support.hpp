#pragma once

#include "kzrat/param_scalar.hpp"
#include "kzrat/scalar_text.hpp"

#include <random>
#include <string_view>

namespace kzrat::testing {

inline ParamScalar S(std::string_view text) { return parse_scalar(text); }

class Rng {
public:
    explicit Rng(unsigned seed) : gen_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

    Rational rational(long bound = 9) {
        return Rational(Integer(integer(-bound, bound)), Integer(integer(1, bound)));
    }

    Rational nonzero_rational(long bound = 9) {
        Rational r;
        while (r.is_zero()) r = rational(bound);
        return r;
    }

    ParamPoly poly(unsigned max_degree = 2, int max_terms = 3) {
        ParamPoly p;
        const int n = static_cast<int>(integer(1, max_terms));
        for (int i = 0; i < n; ++i) {
            const auto e1 = static_cast<unsigned>(integer(0, max_degree));
            const auto e2 = static_cast<unsigned>(integer(0, max_degree - e1));
            p += ParamPoly::monomial(rational(), e1, e2);
        }
        return p;
    }

    ParamPoly nonzero_poly(unsigned max_degree = 2) {
        ParamPoly p;
        while (p.is_zero()) p = poly(max_degree);
        return p;
    }

    ParamScalar scalar() { return ParamScalar(poly(), nonzero_poly()); }

    ParamScalar nonzero_scalar() { return ParamScalar(nonzero_poly(), nonzero_poly()); }

    /// A point (z1, z2) with z1 != z2.
    Assignment distinct_point(long bound = 9) {
        Assignment a{rational(bound), rational(bound)};
        while (a.z1 == a.z2) a.z2 = rational(bound);
        return a;
    }

private:
    std::mt19937 gen_;
};

}  // namespace kzrat::testing
