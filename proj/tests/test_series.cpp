#include "support.hpp"

#include "kzrat/errors.hpp"
#include "kzrat/series.hpp"

#include <doctest.h>

using namespace kzrat;
using kzrat::testing::Rng;
using kzrat::testing::S;

namespace {

const KZSystem sys = build_s3_symbolic();

Vec3 V(std::string_view a, std::string_view b, std::string_view c) { return Vec3(S(a), S(b), S(c)); }

const Vec3 l1 = V("1", "1", "1");
const Vec3 l2 = V("0", "1", "-1");
const Vec3 l3 = V("2", "-1", "-1");

// T_r = z1^(r+1) P1 + z2^(r+1) P2, written out from the permutation action.
Vec3 apply_t(int r, const Vec3& g) {
    const ParamScalar a = S("z1").pow(r + 1);
    const ParamScalar b = S("z2").pow(r + 1);
    return Vec3(a * g(1) + b * g(2), a * g(0) + b * g(1), a * g(2) + b * g(0));
}

Vec3 apply_level(int m, const Vec3& g) {
    // (m I - 2T) with T = P1 + P2
    const Vec3 tg(g(1) + g(2), g(0) + g(1), g(2) + g(0));
    return (ParamScalar(m) * g - ParamScalar(2) * tg).eval();
}

// h_n = sum_{i=0}^n z1^i z2^(n-i), the coefficients of 1/((z - z1)(z - z2)) at infinity.
ParamScalar complete_symmetric(int n) {
    ParamScalar h;
    for (int i = 0; i <= n; ++i) h += S("z1").pow(i) * S("z2").pow(n - i);
    return h;
}

}  // namespace

TEST_CASE("seed names and canonical seeds") {
    CHECK(parse_seed_name("w1") == SeedName::W1);
    CHECK(to_string(SeedName::W3) == "w3");
    CHECK_THROWS_AS(parse_seed_name("w4"), InvalidArgument);
    const SeedSpec s1 = canonical_seed(sys, SeedName::W1);
    const SeedSpec s2 = canonical_seed(sys, SeedName::W2);
    const SeedSpec s3 = canonical_seed(sys, SeedName::W3);
    CHECK(s1.order == -2);
    CHECK(s1.vector == l3);
    CHECK(s2.order == 2);
    CHECK(s2.vector == l2);
    CHECK(s3.order == 4);
    CHECK(s3.vector == l1);
    for (const auto& s : {s1, s2, s3}) CHECK_NOTHROW(validate_seed(sys, s));
}

TEST_CASE("seed validation rejects non-eigenvectors") {
    CHECK_THROWS_AS(validate_seed(sys, SeedSpec{2, l1}), InvalidSeed);
    CHECK_THROWS_AS(validate_seed(sys, SeedSpec{2, Vec3::Zero()}), InvalidSeed);
    CHECK_THROWS_AS(validate_seed(sys, SeedSpec{3, l1}), InvalidSeed);
    CHECK_THROWS_AS(generate(sys, SeedSpec{-2, l1}, 4), InvalidSeed);
    CHECK_NOTHROW(validate_seed(sys, SeedSpec{2, (S("z1 - z2") * l2).eval()}));
    CHECK_THROWS_AS(generate(sys, canonical_seed(sys, SeedName::W3), 3), InvalidArgument);
}

TEST_CASE("recurrence right-hand side") {
    CoefficientTable t(-2, -2);
    t.set(-2, l3);
    CHECK(recurrence_rhs(sys, -2, t) == V("-2*z1 - 2*z2", "4*z1 - 2*z2", "-2*z1 + 4*z2"));
    CHECK(is_zero_matrix(recurrence_rhs(sys, -4, t)));
    CHECK(is_zero_matrix(recurrence_rhs(sys, -3, t)));

    const CoefficientTable w1 = generate(sys, canonical_seed(sys, SeedName::W1), 4);
    const Vec3 rhs2 = recurrence_rhs(sys, 1, w1);
    CHECK(rhs2 == (S("(z1 - z2)^4") * V("4", "-2", "-2")).eval());
    CHECK(eigen_components(sys, rhs2)(1).is_zero());
    CHECK(eigen_components(sys, recurrence_rhs(sys, 3, w1))(0).is_zero());
}

TEST_CASE("eigen components") {
    const Vec3 v = (ParamScalar(3) * l1 - S("z1") * l2 + S("1/z2") * l3).eval();
    CHECK(eigen_components(sys, v) == Vec3(ParamScalar(3), -S("z1"), S("1/z2")));
}

TEST_CASE("solving single levels") {
    CoefficientTable t(-2, -2);
    t.set(-2, l3);
    const LevelSolution g = solve_level(sys, -1, recurrence_rhs(sys, -2, t));
    CHECK(g.coefficient == V("-2*(z1 + z2)", "2*z2", "2*z1"));
    CHECK_FALSE(g.resonance.has_value());

    const LevelSolution g2 = solve_level(sys, 2, (S("(z1 - z2)^4") * V("4", "-2", "-2")).eval());
    CHECK(g2.coefficient == (S("(z1 - z2)^4") * V("1", "-1/2", "-1/2")).eval());
    REQUIRE(g2.resonance.has_value());
    CHECK(g2.resonance->level == 2);
    CHECK(g2.resonance->kernel == Vector3<Rational>(Rational(0), Rational(1), Rational(-1)));
    CHECK(g2.resonance->free_parameter.is_zero());

    CHECK_THROWS_AS(solve_level(sys, 2, l2), UnsolvableResonance);
    CHECK_THROWS_AS(solve_level(sys, 4, (l1 + l3).eval()), UnsolvableResonance);
    CHECK_THROWS_AS(solve_level(sys, -2, l3), UnsolvableResonance);
    CHECK(solve_level(sys, 4, l3).coefficient == (S("1/6") * l3).eval());
}

TEST_CASE("first chain coefficients") {
    const CoefficientTable w1 = generate(sys, canonical_seed(sys, SeedName::W1), 4);
    CHECK(w1.coeff(-3) == Vec3::Zero());
    CHECK(w1.coeff(-2) == l3);
    CHECK(w1.coeff(-1) == V("-2*(z1 + z2)", "2*z2", "2*z1"));
    CHECK(w1.coeff(0) == V("-z1^2 + 4*z1*z2 - z2^2", "z1*(z1 - 2*z2)", "z2*(-2*z1 + z2)"));
    CHECK(w1.coeff(1) == (ParamScalar(2) * V("0", "(z1 - z2)^3", "-(z1 - z2)^3")).eval());
    CHECK(w1.coeff(2) == (S("(z1 - z2)^4") * V("1", "-1/2", "-1/2")).eval());
    REQUIRE(w1.resonances().size() == 2);
    CHECK(w1.resonances()[0].level == 2);
    CHECK(w1.resonances()[1].level == 4);
}

TEST_CASE("second chain uses the factor 2") {
    const CoefficientTable w2 = generate(sys, canonical_seed(sys, SeedName::W2), 4);
    CHECK(w2.coeff(1) == Vec3::Zero());
    CHECK(w2.coeff(2) == l2);
    CHECK(w2.coeff(3) == (S("2/5") * V("z1 - z2", "2*z1 + 3*z2", "-3*z1 - 2*z2")).eval());
}

TEST_CASE("third chain matches the expansion of l_1/((z - z1)(z - z2))^2") {
    const CoefficientTable w3 = generate(sys, canonical_seed(sys, SeedName::W3), 8);
    for (int k = -2; k < 4; ++k) CHECK(w3.coeff(k) == Vec3::Zero());
    for (int k = 4; k <= 8; ++k) {
        ParamScalar c;
        for (int n = 0; n <= k - 4; ++n) c += complete_symmetric(n) * complete_symmetric(k - 4 - n);
        CHECK(w3.coeff(k) == (c * l1).eval());
    }
}

TEST_CASE("every generated level satisfies the defining identity") {
    for (SeedName name : {SeedName::W1, SeedName::W2, SeedName::W3}) {
        const SeedSpec seed = canonical_seed(sys, name);
        const CoefficientTable t = generate(sys, seed, 10);
        CHECK(t.coeff(seed.order) == seed.vector);
        for (int m = seed.order + 1; m <= 10; ++m) {
            Vec3 rhs = Vec3::Zero();
            for (int s = seed.order; s <= m - 1; ++s) rhs += ParamScalar(2) * apply_t(m - 1 - s, t.coeff(s));
            CHECK(apply_level(m, t.coeff(m)) == rhs);
        }
        for (const auto& r : t.resonances()) {
            CHECK((r.level == -2 || r.level == 2 || r.level == 4));
            CHECK(r.free_parameter.is_zero());
        }
    }
}

TEST_CASE("coefficients are homogeneous of degree k - k0") {
    Rng rng(17);
    for (SeedName name : {SeedName::W1, SeedName::W2, SeedName::W3}) {
        const SeedSpec seed = canonical_seed(sys, name);
        const CoefficientTable table = generate(sys, seed, 9);
        for (int trial = 0; trial < 3; ++trial) {
            const ParamScalar t(rng.nonzero_rational());
            for (int k = seed.order; k <= 9; ++k) {
                const Vec3 g = table.coeff(k);
                for (int i = 0; i < 3; ++i) {
                    CHECK(g(i).substitute(t * S("z1"), t * S("z2")) == t.pow(k - seed.order) * g(i));
                }
            }
        }
    }
}

TEST_CASE("scaled seeds scale the chain") {
    const ParamScalar alpha = S("z1 - 3*z2");
    const CoefficientTable base = generate(sys, canonical_seed(sys, SeedName::W1), 6);
    const CoefficientTable scaled = generate(sys, SeedSpec{-2, (alpha * l3).eval()}, 6);
    for (int k = -2; k <= 6; ++k) CHECK(scaled.coeff(k) == (alpha * base.coeff(k)).eval());
}
