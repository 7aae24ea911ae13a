#include "support.hpp"

#include "kzrat/errors.hpp"
#include "kzrat/exact_linear.hpp"
#include "kzrat/residues.hpp"

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

// Laplace expansion along the first row.
ParamScalar cofactor_det(const Eigen::Matrix<ParamScalar, Eigen::Dynamic, Eigen::Dynamic>& m) {
    const Eigen::Index n = m.rows();
    if (n == 1) return m(0, 0);
    ParamScalar det;
    for (Eigen::Index j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        Eigen::Matrix<ParamScalar, Eigen::Dynamic, Eigen::Dynamic> minor(n - 1, n - 1);
        for (Eigen::Index r = 1; r < n; ++r) {
            for (Eigen::Index c = 0, k = 0; c < n; ++c) {
                if (c != j) minor(r - 1, k++) = m(r, c);
            }
        }
        const ParamScalar term = m(0, j) * cofactor_det(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

Vec3 swap_params(const Vec3& v) {
    Vec3 out;
    for (int i = 0; i < 3; ++i) out(i) = v(i).substitute(z2, z1);
    return out;
}

}  // namespace

TEST_CASE("moment matrix") {
    const MomentMatrix s = build_moment_matrix(z1, z2);
    MomentMatrix expected;
    expected << 0, 1, 0, 1,
                1, z1, 1, z2,
                2 * z1, z1.pow(2), 2 * z2, z2.pow(2),
                3 * z1.pow(2), z1.pow(3), 3 * z2.pow(2), z2.pow(3);
    CHECK(s == expected);

    MomentMatrix numeric;
    numeric << 0, 1, 0, 1,
               1, 0, 1, 1,
               0, 0, 2, 1,
               0, 0, 3, 1;
    CHECK(build_moment_matrix(ParamScalar(0), ParamScalar(1)) == numeric);

    const ParamScalar det = cofactor_det(s);
    CHECK((det == S("(z1 - z2)^4") || det == S("-(z1 - z2)^4")));
    CHECK(determinant_exact(s) == det);
    CHECK_THROWS_AS(build_moment_matrix(ParamScalar(2), ParamScalar(2)), DegenerateConfiguration);
}

TEST_CASE("closed-form inverse of the moment matrix") {
    const MomentMatrix closed = moment_inverse_closed_form(z1, z2);
    CHECK(closed(0, 0) == S("-z1*z2^2/(z1 - z2)^2"));
    CHECK_THROWS_AS(moment_inverse_closed_form(ParamScalar(1), ParamScalar(1)), DegenerateConfiguration);

    // Two entries of the closed form are (3*z1 + z2) where the inverse has 3*(z1 + z2).
    const MomentMatrix exact = inverse_exact(build_moment_matrix(z1, z2));
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const bool misprint = j == 2 && (i == 1 || i == 3);
            CHECK((closed(i, j) == exact(i, j)) != misprint);
        }
    }
    CHECK(exact(1, 2) == S("3*(z1 + z2)/(z1 - z2)^3"));
    CHECK(closed(1, 2) == S("(3*z1 + z2)/(z1 - z2)^3"));
    CHECK(exact(3, 2) == -exact(1, 2));

    const MomentMatrix s = build_moment_matrix(z1, z2);
    CHECK(s * exact == MomentMatrix::Identity());
    CHECK_FALSE(s * closed == MomentMatrix::Identity());
    MomentMatrix repaired = closed;
    repaired(1, 2) = exact(1, 2);
    repaired(3, 2) = exact(3, 2);
    CHECK(s * repaired == MomentMatrix::Identity());
    CHECK(repaired * s == MomentMatrix::Identity());

    const MomentMatrix at01 = moment_inverse_closed_form(ParamScalar(0), ParamScalar(1));
    const MomentMatrix inv01 = inverse_exact(build_moment_matrix(ParamScalar(0), ParamScalar(1)));
    CHECK(at01(0, 0) == inv01(0, 0));
    CHECK(at01(1, 2) == ParamScalar(-1));
    CHECK(inv01(1, 2) == ParamScalar(-3));
}

TEST_CASE("moments of a residue set") {
    ResidueSet r;
    r.r = {V("1", "0", "0"), V("0", "1", "0"), V("0", "0", "1"), V("1", "1", "1")};
    CHECK(moments_from_residues(z1, z2, r, 1) == (r.r[1] + r.r[3]).eval());
    CHECK(moments_from_residues(z1, z2, r, 3) ==
          (2 * z1 * r.r[0] + z1.pow(2) * r.r[1] + 2 * z2 * r.r[2] + z2.pow(2) * r.r[3]).eval());
    CHECK_THROWS_AS(moments_from_residues(z1, z2, r, 0), InvalidArgument);
}

TEST_CASE("residues of the first chain") {
    const BasisChain w1 = build_basis_chain(sys, SeedName::W1, 12);
    const auto& r = w1.residues.r;
    CHECK(r[0] == (S("(3*z1 - 7*z2)*(z1 - z2)^3") * V("1/10", "1/10", "-1/5")).eval());
    CHECK(r[1] == (S("(3*z1 - 7*z2)*(z1 - z2)^2") * V("0", "1/5", "-1/5")).eval());
    CHECK(r[2] == (S("(7*z1 - 3*z2)*(z1 - z2)^3") * V("1/10", "-1/5", "1/10")).eval());
    CHECK(r[3] == (S("(7*z1 - 3*z2)*(z1 - z2)^2") * V("0", "1/5", "-1/5")).eval());
    CHECK(w1.solution.name == "W1");
    CHECK(w1.solution.poly[2] == w1.table.coeff(-2));
    CHECK(w1.solution.poly[1] == w1.table.coeff(-1));
    CHECK(w1.solution.poly[0] == w1.table.coeff(0));
}

TEST_CASE("residues of the second and third chains") {
    const BasisChain w2 = build_basis_chain(sys, SeedName::W2, 12);
    for (const auto& p : w2.solution.poly) CHECK(is_zero_matrix(p));
    CHECK(w2.residues.r[0] == V("1/5", "1/5", "-2/5"));
    CHECK(w2.residues.r[1] == (S("1/(z1 - z2)") * V("0", "2/5", "-2/5")).eval());
    CHECK(w2.residues.r[2] == V("-1/5", "2/5", "-1/5"));
    CHECK(w2.residues.r[3] == (-w2.residues.r[1]).eval());

    const BasisChain w3 = build_basis_chain(sys, SeedName::W3, 12);
    CHECK(w3.residues.r[0] == (S("1/(z1 - z2)^2") * l1).eval());
    CHECK(w3.residues.r[2] == w3.residues.r[0]);
    CHECK(w3.residues.r[1] == (S("2/(z2 - z1)^3") * l1).eval());
    CHECK(w3.residues.r[3] == (-w3.residues.r[1]).eval());

    // coefficient of z^-7 in l_1 / ((z - z1)(z - z2))^2
    ParamScalar c7;
    for (int n = 0; n <= 3; ++n) {
        ParamScalar hn;
        ParamScalar hm;
        for (int i = 0; i <= n; ++i) hn += z1.pow(i) * z2.pow(n - i);
        for (int i = 0; i <= 3 - n; ++i) hm += z1.pow(i) * z2.pow(3 - n - i);
        c7 += hn * hm;
    }
    CHECK(moments_from_residues(z1, z2, w3.residues, 7) == (c7 * l1).eval());
    CHECK_THROWS_AS(build_basis_chain(sys, SeedName::W3, 3), InvalidArgument);
}

TEST_CASE("reconstruction inverts the moment map") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        std::array<Vec3, 4> moments;
        for (auto& m : moments) m = Vec3(ParamScalar(rng.rational()), ParamScalar(rng.rational()), ParamScalar(rng.rational()));
        const ResidueSet r = reconstruct_residues(z1, z2, moments);
        for (int k = 1; k <= 4; ++k) CHECK(moments_from_residues(z1, z2, r, k) == moments[static_cast<std::size_t>(k - 1)]);
    }
    std::array<Vec3, 4> symbolic{V("z1", "1", "0"), V("z2^2", "z1*z2", "1/(z1 + z2)"), V("0", "0", "1"), V("1", "2", "3")};
    const ResidueSet r = reconstruct_residues(z1, z2, symbolic);
    for (int k = 1; k <= 4; ++k) CHECK(moments_from_residues(z1, z2, r, k) == symbolic[static_cast<std::size_t>(k - 1)]);
    CHECK_THROWS_AS(reconstruct_residues(z1, z1, symbolic), DegenerateConfiguration);
}

TEST_CASE("series coefficients past the reconstruction window match the residues") {
    for (SeedName name : {SeedName::W1, SeedName::W2, SeedName::W3}) {
        const BasisChain chain = build_basis_chain(sys, name, 12);
        for (int k = 5; k <= 12; ++k) CHECK(chain.table.coeff(k) == moments_from_residues(z1, z2, chain.residues, k));
    }
}

TEST_CASE("swapping the poles mirrors the first solution") {
    const IntMatrix c = transposition_matrix(2, 3);
    const Mat3 cm = lift(c);
    const auto& r = build_basis_chain(sys, SeedName::W1, 12).residues.r;
    CHECK((cm * swap_params(r[0])).eval() == r[2]);
    CHECK((cm * swap_params(r[1])).eval() == r[3]);
    CHECK((cm * swap_params(r[2])).eval() == r[0]);
    CHECK((cm * swap_params(r[3])).eval() == r[1]);
}

TEST_CASE("assembling and evaluating solutions") {
    const CoefficientTable empty(0, 4);
    const RationalSolution zero = assemble_solution(empty, ResidueSet{}, z1, z2, "zero");
    for (const auto& p : zero.poly) CHECK(is_zero_matrix(p));
    for (const auto& v : zero.residues.r) CHECK(is_zero_matrix(v));

    const RationalSolution w3 = build_basis_chain(sys, SeedName::W3, 12).solution;
    Rng rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        const Assignment at = rng.distinct_point();
        Rational z = rng.rational(20);
        while (z == at.z1 || z == at.z2) z = rng.rational(20);
        const Rational expected = ((z - at.z1) * (z - at.z2)).pow(-2);
        CHECK(w3.evaluate(z, at) == Vector3<Rational>(expected, expected, expected));
        const RationalSolution inst = w3.instantiate(at);
        CHECK(inst.z1 == ParamScalar(at.z1));
        CHECK(inst.evaluate(z, at) == w3.evaluate(z, at));
    }
    CHECK_THROWS_AS(w3.evaluate(Rational(2), Assignment{Rational(2), Rational(3)}), EvaluationAtPole);
}
