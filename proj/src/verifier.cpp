#include "kzrat/verifier.hpp"

#include "kzrat/errors.hpp"
#include "kzrat/scalar_text.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <vector>

namespace kzrat {

namespace {

using HighFloat =
    boost::multiprecision::number<boost::multiprecision::cpp_bin_float<64>, boost::multiprecision::et_off>;

ZPoly linear(const ParamScalar& a) { return ZPoly::linear_factor(a); }

/// Numerators of W over (z - z1)^2 (z - z2)^2.
std::array<ZPoly, 3> numerators_order2(const RationalSolution& w) {
    const ZPoly la = linear(w.z1);
    const ZPoly lb = linear(w.z2);
    const ZPoly la2 = la * la;
    const ZPoly lb2 = lb * lb;
    const ZPoly q = la2 * lb2;
    std::array<ZPoly, 3> out;
    for (int i = 0; i < 3; ++i) {
        const ZPoly poly({w.poly[0](i), w.poly[1](i), w.poly[2](i)});
        const auto& r = w.residues.r;
        out[static_cast<std::size_t>(i)] = poly * q + ZPoly(r[0](i)) * lb2 + ZPoly(r[1](i)) * la * lb2 +
                                           ZPoly(r[2](i)) * la2 + ZPoly(r[3](i)) * la2 * lb;
    }
    return out;
}

/// Numerators of dW/dz over (z - z1)^3 (z - z2)^3.
std::array<ZPoly, 3> derivative_numerators(const RationalSolution& w) {
    const ZPoly la = linear(w.z1);
    const ZPoly lb = linear(w.z2);
    const ZPoly la3 = la * la * la;
    const ZPoly lb3 = lb * lb * lb;
    const ZPoly d3 = la3 * lb3;
    std::array<ZPoly, 3> out;
    for (int i = 0; i < 3; ++i) {
        const ZPoly dpoly({w.poly[1](i), ParamScalar(2) * w.poly[2](i)});
        const auto& r = w.residues.r;
        out[static_cast<std::size_t>(i)] = dpoly * d3 - ZPoly(ParamScalar(2) * r[0](i)) * lb3 -
                                           ZPoly(r[1](i)) * la * lb3 - ZPoly(ParamScalar(2) * r[2](i)) * la3 -
                                           ZPoly(r[3](i)) * la3 * lb;
    }
    return out;
}

/// num / ((z - z1)(z - z2))^power, cancelling common linear factors directly.
ZFunction over_poles(ZPoly num, const RationalSolution& w, int power) {
    if (num.is_zero()) return ZFunction();
    ZPoly den(ParamScalar(1));
    for (const ParamScalar* at : {&w.z1, &w.z2}) {
        const ZPoly factor = linear(*at);
        int left = power;
        while (left > 0 && num.evaluate(*at).is_zero()) {
            num = num.divmod(factor).first;
            --left;
        }
        den = den * factor.pow(left);
    }
    return ZFunction::from_coprime(num, den);
}

HighFloat to_high(const Rational& r) {
    return HighFloat(r.numerator().get_str()) / HighFloat(r.denominator().get_str());
}


using State = std::array<HighFloat, 3>;

/// Dormand-Prince 5(4) tableau.
struct Tableau {
    std::array<HighFloat, 7> c;
    std::array<std::array<HighFloat, 6>, 7> a;
    std::array<HighFloat, 7> b;      // fifth order
    std::array<HighFloat, 7> error;  // fifth minus fourth order weights
};

const Tableau& dopri5() {
    static const Tableau t = [] {
        auto q = [](long n, long d) { return HighFloat(n) / HighFloat(d); };
        Tableau tab{};
        tab.c = {0, q(1, 5), q(3, 10), q(4, 5), q(8, 9), 1, 1};
        tab.a[1] = {q(1, 5)};
        tab.a[2] = {q(3, 40), q(9, 40)};
        tab.a[3] = {q(44, 45), q(-56, 15), q(32, 9)};
        tab.a[4] = {q(19372, 6561), q(-25360, 2187), q(64448, 6561), q(-212, 729)};
        tab.a[5] = {q(9017, 3168), q(-355, 33), q(46732, 5247), q(49, 176), q(-5103, 18656)};
        tab.a[6] = {q(35, 384), 0, q(500, 1113), q(125, 192), q(-2187, 6784), q(11, 84)};
        tab.b = {q(35, 384), 0, q(500, 1113), q(125, 192), q(-2187, 6784), q(11, 84), 0};
        const std::array<HighFloat, 7> b4 = {q(5179, 57600),     0,           q(7571, 16695), q(393, 640),
                                             q(-92097, 339200), q(187, 2100), q(1, 40)};
        for (std::size_t i = 0; i < 7; ++i) tab.error[i] = tab.b[i] - b4[i];
        return tab;
    }();
    return t;
}

/// Adaptive integration of x' = f(z, x) from z0 to z1; returns accepted steps.
template <typename Rhs>
std::size_t integrate_dopri5(Rhs&& f, State& x, HighFloat z0, const HighFloat& z1, const HighFloat& atol,
                             const HighFloat& rtol) {
    const Tableau& t = dopri5();
    const HighFloat span = z1 - z0;
    HighFloat h = span / 100;
    std::size_t accepted = 0;
    for (std::size_t attempts = 0; attempts < 1000000; ++attempts) {
        const HighFloat remaining = z1 - z0;
        if (remaining == 0) return accepted;
        if (abs(h) > abs(remaining)) h = remaining;

        std::array<State, 7> k;
        for (std::size_t s = 0; s < 7; ++s) {
            State xs = x;
            for (std::size_t j = 0; j < s; ++j) {
                for (std::size_t i = 0; i < 3; ++i) xs[i] += h * t.a[s][j] * k[j][i];
            }
            k[s] = f(z0 + t.c[s] * h, xs);
        }
        State next = x;
        HighFloat err = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            HighFloat e = 0;
            for (std::size_t s = 0; s < 7; ++s) {
                next[i] += h * t.b[s] * k[s][i];
                e += h * t.error[s] * k[s][i];
            }
            const HighFloat scale = atol + rtol * std::max(abs(x[i]), abs(next[i]));
            err = std::max(err, abs(e) / scale);
        }
        if (err <= 1) {
            z0 += h;
            x = next;
            ++accepted;
        }
        HighFloat factor = err == 0 ? HighFloat(5) : HighFloat(0.9) * pow(err, HighFloat(-0.2));
        factor = std::min(HighFloat(5), std::max(HighFloat(0.2), factor));
        h *= factor;
    }
    throw Error("numeric integration did not converge");
}

}  // namespace

ZVector to_functions(const RationalSolution& w) {
    const auto nums = numerators_order2(w);
    return {over_poles(nums[0], w, 2), over_poles(nums[1], w, 2), over_poles(nums[2], w, 2)};
}

ZVector differentiate(const RationalSolution& w) {
    const auto nums = derivative_numerators(w);
    return {over_poles(nums[0], w, 3), over_poles(nums[1], w, 3), over_poles(nums[2], w, 3)};
}

ResidualReport residual(const KZSystem& sys, const RationalSolution& w) {
    if (!(w.z1 == sys.z1()) || !(w.z2 == sys.z2())) {
        throw InvalidArgument("solution poles differ from the system poles");
    }
    const auto nw = numerators_order2(w);
    auto num = derivative_numerators(w);
    const ParamScalar c(sys.multiplier());
    // D3 * A W = P1 Nw (z - z2) + P2 Nw (z - z1).
    const std::array<ZPoly, 2> other = {linear(sys.z2()), linear(sys.z1())};
    for (std::size_t j = 0; j < 2; ++j) {
        const IntMatrix& p = sys.poles()[j].residue;
        for (int i = 0; i < 3; ++i) {
            ZPoly row;
            for (int k = 0; k < 3; ++k) {
                if (!p(i, k).is_zero()) row += ZPoly(ParamScalar(p(i, k))) * nw[static_cast<std::size_t>(k)];
            }
            num[static_cast<std::size_t>(i)] -= ZPoly(c) * row * other[j];
        }
    }
    ResidualReport report;
    report.is_zero = true;
    for (std::size_t i = 0; i < 3; ++i) {
        report.is_zero = report.is_zero && num[i].is_zero();
        report.entries[i] = over_poles(num[i], w, 3);
    }
    return report;
}

IndependenceReport independence(std::span<const RationalSolution> solutions) {
    if (solutions.size() != 3) {
        throw InvalidArgument("independence needs exactly three solutions");
    }
    for (const auto& w : solutions) {
        if (!(w.z1 == solutions[0].z1) || !(w.z2 == solutions[0].z2)) {
            throw InvalidArgument("solutions have different poles");
        }
    }
    std::array<std::array<ZPoly, 3>, 3> m;  // m[column][row]
    for (std::size_t j = 0; j < 3; ++j) m[j] = numerators_order2(solutions[j]);
    auto at = [&](int row, int col) -> const ZPoly& {
        return m[static_cast<std::size_t>(col)][static_cast<std::size_t>(row)];
    };
    const ZPoly det = at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
                      at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
                      at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    IndependenceReport report;
    report.independent = !det.is_zero();
    report.determinant = over_poles(det, solutions[0], 6);
    return report;
}

NumericCheck numeric_crosscheck(const KZSystem& sys, const RationalSolution& w, const Rational& from,
                                const Rational& to, double tolerance) {
    if (!sys.is_numeric()) {
        throw InvalidArgument("numeric cross-check needs numeric pole locations");
    }
    if (!(w.z1 == sys.z1()) || !(w.z2 == sys.z2())) {
        throw InvalidArgument("solution poles differ from the system poles");
    }
    const Rational lo = std::min(from, to);
    const Rational hi = std::max(from, to);
    for (const auto& p : sys.poles()) {
        const Rational a = p.location.constant_value();
        if (lo <= a && a <= hi) {
            throw InvalidPath("integration path [" + lo.to_string() + ", " + hi.to_string() +
                              "] passes through the pole " + a.to_string());
        }
    }

    const Assignment at{sys.z1().constant_value(), sys.z2().constant_value()};
    const Vector3<Rational> start = w.evaluate(from, at);
    const Vector3<Rational> exact = w.evaluate(to, at);

    struct HighPole {
        HighFloat location;
        IntMatrix residue;
    };
    std::vector<HighPole> poles;
    for (const auto& p : sys.poles()) poles.push_back({to_high(p.location.constant_value()), p.residue});
    const HighFloat c = to_high(sys.multiplier());

    auto rhs = [&](const HighFloat& z, const State& x) {
        State dxdz{};
        for (const auto& p : poles) {
            const HighFloat scale = c / (z - p.location);
            for (int i = 0; i < 3; ++i) {
                for (int k = 0; k < 3; ++k) {
                    if (!p.residue(i, k).is_zero()) {
                        dxdz[static_cast<std::size_t>(i)] +=
                            scale * to_high(p.residue(i, k)) * x[static_cast<std::size_t>(k)];
                    }
                }
            }
        }
        return dxdz;
    };

    State state;
    for (int i = 0; i < 3; ++i) state[static_cast<std::size_t>(i)] = to_high(start(i));
    NumericCheck result;
    result.steps = integrate_dopri5(rhs, state, to_high(from), to_high(to), HighFloat("1e-30"), HighFloat("1e-12"));

    HighFloat worst = 0;
    for (int i = 0; i < 3; ++i) {
        const HighFloat expected = to_high(exact(i));
        const HighFloat diff = abs(state[static_cast<std::size_t>(i)] - expected);
        const HighFloat err = abs(expected) < HighFloat("1e-30") ? diff : diff / abs(expected);
        worst = std::max(worst, err);
    }
    result.max_relative_error = worst.convert_to<double>();
    result.passed = worst <= HighFloat(tolerance);
    return result;
}

}  // namespace kzrat

namespace kzrat {

std::string render_zpoly(const ZPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const ParamScalar& c = p.coefficient(k);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + render_scalar(c) + ")";
        if (k >= 1) out += "*z";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

std::string render_zfunction(const ZFunction& f) {
    if (f.den().degree() == 0) return render_zpoly(f.num());
    return "(" + render_zpoly(f.num()) + ")/(" + render_zpoly(f.den()) + ")";
}

}  // namespace kzrat
