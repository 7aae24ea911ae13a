#include "support.hpp"

#include "kzrat/errors.hpp"
#include "kzrat/verifier.hpp"

#include <doctest.h>

using namespace kzrat;
using kzrat::testing::Rng;
using kzrat::testing::S;

namespace {

const KZSystem sys = build_s3_symbolic();
const ParamScalar z1 = S("z1");
const ParamScalar z2 = S("z2");

Vec3 V(std::string_view a, std::string_view b, std::string_view c) { return Vec3(S(a), S(b), S(c)); }

const Vec3 l1 = V("1", "1", "1");
const Vec3 l3 = V("2", "-1", "-1");

const RationalSolution& basis(SeedName name) {
    static const std::array<RationalSolution, 3> all = {
        build_basis_chain(sys, SeedName::W1, 12).solution,
        build_basis_chain(sys, SeedName::W2, 12).solution,
        build_basis_chain(sys, SeedName::W3, 12).solution,
    };
    return all[static_cast<std::size_t>(name)];
}

RationalSolution blank() {
    RationalSolution w;
    w.z1 = z1;
    w.z2 = z2;
    return w;
}

ZPoly zlin(const ParamScalar& a) { return ZPoly::linear_factor(a); }


}  // namespace

TEST_CASE("differentiate simple terms") {
    RationalSolution w = blank();
    w.residues.r[1] = V("1", "0", "0");
    const ZVector d = differentiate(w);
    CHECK(d[0] == ZFunction(ZPoly(ParamScalar(-1)), zlin(z1).pow(2)));
    CHECK(d[1].is_zero());

    RationalSolution q = blank();
    q.poly[2] = l3;
    const ZVector dq = differentiate(q);
    const ZPoly two_z = ZPoly::monomial(ParamScalar(2), 1);
    for (int i = 0; i < 3; ++i) CHECK(dq[static_cast<std::size_t>(i)] == ZFunction(two_z * ZPoly(l3(i))));
}

TEST_CASE("derivative of the third solution by the chain rule") {
    // f = ((z - z1)(z - z2))^-2, f' = -2 f (1/(z - z1) + 1/(z - z2)) = -2 (2z - z1 - z2) / ((z - z1)(z - z2))^3
    const ZPoly num = ZPoly(ParamScalar(-2)) * (zlin(z1) + zlin(z2));
    const ZFunction expected(num, (zlin(z1) * zlin(z2)).pow(3));
    const ZVector d = differentiate(basis(SeedName::W3));
    for (const auto& e : d) CHECK(e == expected);
    const ZVector f = to_functions(basis(SeedName::W3));
    for (const auto& e : f) CHECK(e == ZFunction(ZPoly(ParamScalar(1)), (zlin(z1) * zlin(z2)).pow(2)));
}

TEST_CASE("basis solutions have zero residual") {
    for (SeedName name : {SeedName::W1, SeedName::W2, SeedName::W3}) {
        const ResidualReport r = residual(sys, basis(name));
        CHECK(r.is_zero);
        for (const auto& e : r.entries) CHECK(e.is_zero());
    }

    RationalSolution closed = blank();
    closed.residues.r = {(S("1/(z1 - z2)^2") * l1).eval(), (S("-2/(z1 - z2)^3") * l1).eval(),
                         (S("1/(z1 - z2)^2") * l1).eval(), (S("2/(z1 - z2)^3") * l1).eval()};
    CHECK(residual(sys, closed).is_zero);
}

TEST_CASE("perturbed solutions have nonzero residual") {
    RationalSolution w = basis(SeedName::W1);
    w.residues.r[0] += l1;
    const ResidualReport r = residual(sys, w);
    CHECK_FALSE(r.is_zero);
    CHECK_FALSE(r.entries[0].is_zero());

    RationalSolution other = basis(SeedName::W2);
    other.z1 = S("z1 + 1");
    CHECK_THROWS_AS(residual(sys, other), InvalidArgument);
}

TEST_CASE("residual is linear") {
    Rng rng(23);
    RationalSolution a = basis(SeedName::W1);
    a.residues.r[1] += V("z1", "0", "1");
    RationalSolution b = basis(SeedName::W2);
    b.poly[0] += V("1", "z2", "0");
    const ResidualReport ra = residual(sys, a);
    const ResidualReport rb = residual(sys, b);
    for (int trial = 0; trial < 3; ++trial) {
        const ParamScalar alpha(rng.nonzero_rational());
        const ParamScalar beta(rng.nonzero_rational());
        const ResidualReport rc = residual(sys, alpha * a + beta * b);
        for (std::size_t i = 0; i < 3; ++i) {
            const ZFunction combo =
                ZFunction(ZPoly(alpha)) * ra.entries[i] + ZFunction(ZPoly(beta)) * rb.entries[i];
            CHECK(rc.entries[i] == combo);
        }
    }
}

TEST_CASE("superpositions of the basis are solutions") {
    Rng rng(41);
    for (int trial = 0; trial < 5; ++trial) {
        const RationalSolution w = ParamScalar(rng.rational()) * basis(SeedName::W1) +
                                   ParamScalar(rng.rational()) * basis(SeedName::W2) +
                                   ParamScalar(rng.rational()) * basis(SeedName::W3);
        CHECK(residual(sys, w).is_zero);
    }
}

TEST_CASE("independence") {
    const std::array<RationalSolution, 3> all = {basis(SeedName::W1), basis(SeedName::W2), basis(SeedName::W3)};
    const IndependenceReport r = independence(all);
    CHECK(r.independent);
    // det' = tr(-2A) det = -2 (1/(z - z1) + 1/(z - z2)) det, so det = c / ((z - z1)(z - z2))^2
    CHECK(r.determinant.num().degree() == 0);
    CHECK(r.determinant.den() == (zlin(z1) * zlin(z2)).pow(2));

    const std::array<RationalSolution, 3> repeated = {basis(SeedName::W1), basis(SeedName::W1), basis(SeedName::W3)};
    CHECK_FALSE(independence(repeated).independent);
    const std::array<RationalSolution, 3> combo = {
        basis(SeedName::W1), ParamScalar(2) * basis(SeedName::W1) + basis(SeedName::W3), basis(SeedName::W3)};
    const IndependenceReport dep = independence(combo);
    CHECK_FALSE(dep.independent);
    CHECK(dep.determinant.is_zero());
    CHECK_THROWS_AS(independence(std::span<const RationalSolution>(all.data(), 2)), InvalidArgument);
}

TEST_CASE("basis solutions are homogeneous") {
    Rng rng(55);
    const std::array<std::pair<SeedName, long>, 3> degrees = {
        std::pair{SeedName::W1, 2L}, {SeedName::W2, -2L}, {SeedName::W3, -4L}};
    for (const auto& [name, degree] : degrees) {
        const RationalSolution& w = basis(name);
        int checked = 0;
        while (checked < 10) {
            const Assignment at = rng.distinct_point();
            const Rational z = rng.rational(15);
            const Rational t = rng.nonzero_rational();
            if (z == at.z1 || z == at.z2) continue;
            const auto base = w.evaluate(z, at);
            const auto scaled = w.evaluate(t * z, Assignment{t * at.z1, t * at.z2});
            CHECK(scaled == (t.pow(degree) * base).eval());
            ++checked;
        }
    }
}

TEST_CASE("derivative agrees with difference quotients") {
    const Assignment at{Rational(0), Rational(1)};
    const Rational z(Integer(7), Integer(3));
    const Rational h(Integer(1), Integer(1000000));
    for (SeedName name : {SeedName::W1, SeedName::W2, SeedName::W3}) {
        const RationalSolution w = basis(name).instantiate(at);
        const ZVector d = differentiate(w);
        const auto w0 = w.evaluate(z, at);
        for (int i = 0; i < 3; ++i) {
            const Rational exact = d[static_cast<std::size_t>(i)].evaluate(ParamScalar(z)).constant_value();
            const Rational e1 = (w.evaluate(z + h, at)(i) - w0(i)) / h - exact;
            const Rational e2 = (w.evaluate(z + h / Rational(2), at)(i) - w0(i)) / (h / Rational(2)) - exact;
            // first-order error: halving h halves the error, and it is small
            CHECK(e1.abs() < Rational(Integer(1), Integer(1000)));
            if (!e1.is_zero()) {
                const Rational ratio = e1 / e2;
                CHECK(ratio > Rational(Integer(19), Integer(10)));
                CHECK(ratio < Rational(Integer(21), Integer(10)));
            }
        }
    }
}

TEST_CASE("numeric cross-check") {
    const KZSystem num = build_s3_system(ParamScalar(0), ParamScalar(1));
    for (SeedName name : {SeedName::W1, SeedName::W2, SeedName::W3}) {
        const RationalSolution w = build_basis_chain(num, name, 12).solution;
        const NumericCheck c = numeric_crosscheck(num, w, Rational(5), Rational(7), 1e-8);
        CHECK(c.passed);
        CHECK(c.max_relative_error < 1e-8);
        CHECK(c.steps > 0);
    }
    const RationalSolution w1 = build_basis_chain(num, SeedName::W1, 12).solution;
    CHECK_THROWS_AS(numeric_crosscheck(num, w1, Rational(-1), Rational(2), 1e-8), InvalidPath);
    CHECK_THROWS_AS(numeric_crosscheck(sys, basis(SeedName::W1), Rational(5), Rational(7), 1e-8), InvalidArgument);

    RationalSolution bad = w1;
    bad.residues.r[0] += Vec3(ParamScalar(1), ParamScalar(1), ParamScalar(1));
    CHECK_FALSE(numeric_crosscheck(num, bad, Rational(5), Rational(7), 1e-8).passed);
}

TEST_CASE("rendering functions of z") {
    const ZFunction f(ZPoly(ParamScalar(6)), (zlin(z1) * zlin(z2)).pow(2));
    CHECK(render_zfunction(ZFunction()) == "0");
    CHECK(render_zfunction(f).find("z^4") != std::string::npos);
}
