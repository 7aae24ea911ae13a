#include "kzrat/residues.hpp"

#include "kzrat/errors.hpp"
#include "kzrat/exact_linear.hpp"
#include "kzrat/scalar_text.hpp"

#include <string_view>

namespace kzrat {

namespace {

void require_distinct(const ParamScalar& z1, const ParamScalar& z2) {
    if ((z1 - z2).is_zero()) {
        throw DegenerateConfiguration("pole locations coincide (z1 = z2)");
    }
}

// Printed closed-form inverse, row by row.
constexpr std::array<std::string_view, 16> kClosedFormInverse = {
    "-z1*z2^2/(z1 - z2)^2",     "z2*(2*z1 + z2)/(z1 - z2)^2", "-(z1 + 2*z2)/(z1 - z2)^2", "1/(z1 - z2)^2",
    "(3*z1 - z2)*z2^2/(z1 - z2)^3", "-6*z1*z2/(z1 - z2)^3",   "(3*z1 + z2)/(z1 - z2)^3",  "2/(-z1 + z2)^3",
    "-z1^2*z2/(z1 - z2)^2",     "z1*(z1 + 2*z2)/(z1 - z2)^2", "-(2*z1 + z2)/(z1 - z2)^2", "1/(z1 - z2)^2",
    "z1^2*(z1 - 3*z2)/(z1 - z2)^3", "6*z1*z2/(z1 - z2)^3",    "-(3*z1 + z2)/(z1 - z2)^3", "2/(z1 - z2)^3",
};

}  // namespace

MomentMatrix build_moment_matrix(const ParamScalar& z1, const ParamScalar& z2) {
    require_distinct(z1, z2);
    MomentMatrix s;
    // clang-format off
    s << 0,               1,          0,               1,
         1,               z1,         1,               z2,
         2 * z1,          z1.pow(2),  2 * z2,          z2.pow(2),
         3 * z1.pow(2),   z1.pow(3),  3 * z2.pow(2),   z2.pow(3);
    // clang-format on
    return s;
}

MomentMatrix moment_inverse_closed_form(const ParamScalar& z1, const ParamScalar& z2) {
    require_distinct(z1, z2);
    MomentMatrix inv;
    for (int i = 0; i < 16; ++i) {
        inv(i / 4, i % 4) = parse_scalar(kClosedFormInverse[static_cast<std::size_t>(i)]).substitute(z1, z2);
    }
    return inv;
}

ResidueSet reconstruct_residues(const ParamScalar& z1, const ParamScalar& z2, const std::array<Vec3, 4>& moments) {
    const MomentMatrix s = build_moment_matrix(z1, z2);
    Eigen::Matrix<ParamScalar, 4, 3> y;
    for (int k = 0; k < 4; ++k) y.row(k) = moments[static_cast<std::size_t>(k)].transpose();
    const Eigen::Matrix<ParamScalar, 4, 3> x = solve_exact(s, y);
    ResidueSet out;
    for (int k = 0; k < 4; ++k) out.r[static_cast<std::size_t>(k)] = x.row(k).transpose();
    return out;
}

Vec3 moments_from_residues(const ParamScalar& z1, const ParamScalar& z2, const ResidueSet& residues, int k) {
    if (k < 1) {
        throw InvalidArgument("moments are defined for k >= 1");
    }
    // 1/(z-a) = sum_k a^(k-1) z^-k and 1/(z-a)^2 = sum_k (k-1) a^(k-2) z^-k.
    Vec3 g = z1.pow(k - 1) * residues.r[1] + z2.pow(k - 1) * residues.r[3];
    if (k >= 2) {
        g += ParamScalar(k - 1) * (z1.pow(k - 2) * residues.r[0] + z2.pow(k - 2) * residues.r[2]);
    }
    return g;
}

RationalSolution assemble_solution(const CoefficientTable& table, const ResidueSet& residues, const ParamScalar& z1,
                                   const ParamScalar& z2, std::string name) {
    RationalSolution w;
    w.name = std::move(name);
    w.z1 = z1;
    w.z2 = z2;
    w.poly = {table.coeff(0), table.coeff(-1), table.coeff(-2)};
    w.residues = residues;
    return w;
}

Vector3<Rational> RationalSolution::evaluate(const Rational& z, const Assignment& at) const {
    const RationalSolution w = instantiate(at);
    const Rational a = w.z1.constant_value();
    const Rational b = w.z2.constant_value();
    if (z == a || z == b) {
        throw EvaluationAtPole("solution evaluated at a pole z = " + z.to_string());
    }
    auto value = [](const Vec3& v) {
        Vector3<Rational> out;
        for (int i = 0; i < 3; ++i) out(i) = v(i).constant_value();
        return out;
    };
    const Rational da = (z - a).inverse();
    const Rational db = (z - b).inverse();
    Vector3<Rational> out = value(w.poly[0]) + z * value(w.poly[1]) + z * z * value(w.poly[2]);
    out += da * da * value(w.residues.r[0]) + da * value(w.residues.r[1]);
    out += db * db * value(w.residues.r[2]) + db * value(w.residues.r[3]);
    return out;
}

RationalSolution RationalSolution::instantiate(const Assignment& at) const {
    auto scalar = [&](const ParamScalar& s) { return ParamScalar(s.evaluate(at)); };
    auto vec = [&](const Vec3& v) { return Vec3(v.unaryExpr(scalar)); };
    RationalSolution w;
    w.name = name;
    w.z1 = scalar(z1);
    w.z2 = scalar(z2);
    for (std::size_t p = 0; p < 3; ++p) w.poly[p] = vec(poly[p]);
    for (std::size_t j = 0; j < 4; ++j) w.residues.r[j] = vec(residues.r[j]);
    return w;
}

RationalSolution operator+(const RationalSolution& a, const RationalSolution& b) {
    if (!(a.z1 == b.z1) || !(a.z2 == b.z2)) {
        throw InvalidArgument("solutions have different poles");
    }
    RationalSolution w = a;
    w.name.clear();
    for (std::size_t p = 0; p < 3; ++p) w.poly[p] += b.poly[p];
    for (std::size_t j = 0; j < 4; ++j) w.residues.r[j] += b.residues.r[j];
    return w;
}

RationalSolution operator*(const ParamScalar& alpha, const RationalSolution& w) {
    RationalSolution out = w;
    out.name.clear();
    for (auto& v : out.poly) v *= alpha;
    for (auto& v : out.residues.r) v *= alpha;
    return out;
}

BasisChain build_basis_chain(const KZSystem& sys, const SeedSpec& seed, int k_max, std::string name) {
    if (k_max < 4) {
        throw InvalidArgument("residue reconstruction needs coefficients up to order 4");
    }
    CoefficientTable table = generate(sys, seed, k_max);
    const std::array<Vec3, 4> moments{table.coeff(1), table.coeff(2), table.coeff(3), table.coeff(4)};
    ResidueSet residues = reconstruct_residues(sys.z1(), sys.z2(), moments);
    RationalSolution solution = assemble_solution(table, residues, sys.z1(), sys.z2(), std::move(name));
    return {seed, std::move(table), std::move(residues), std::move(solution)};
}

BasisChain build_basis_chain(const KZSystem& sys, SeedName seed, int k_max) {
    std::string name = to_string(seed);
    name[0] = 'W';
    return build_basis_chain(sys, canonical_seed(sys, seed), k_max, std::move(name));
}

}  // namespace kzrat
