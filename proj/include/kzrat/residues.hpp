#pragma once

#include "kzrat/series.hpp"

#include <array>

namespace kzrat {

/// Scalar pattern of the block moment matrix; each entry acts as entry * I3.
using MomentMatrix = Matrix4<ParamScalar>;

/// Residue vectors of the partial-fraction ansatz:
/// r1/(z-z1)^2 + r2/(z-z1) + r3/(z-z2)^2 + r4/(z-z2).
struct ResidueSet {
    std::array<Vec3, 4> r{Vec3::Zero(), Vec3::Zero(), Vec3::Zero(), Vec3::Zero()};

    const Vec3& at_z1_order2() const { return r[0]; }
    const Vec3& at_z1_order1() const { return r[1]; }
    const Vec3& at_z2_order2() const { return r[2]; }
    const Vec3& at_z2_order1() const { return r[3]; }

    friend bool operator==(const ResidueSet& a, const ResidueSet& b) { return a.r == b.r; }
};

/// W(z) = residue terms + z^2 poly[2] + z poly[1] + poly[0].
struct RationalSolution {
    std::string name;
    ParamScalar z1;
    ParamScalar z2;
    std::array<Vec3, 3> poly{Vec3::Zero(), Vec3::Zero(), Vec3::Zero()};  // indexed by power of z
    ResidueSet residues;

    /// Exact value at z for the given parameter values (ignored for numeric poles).
    Vector3<Rational> evaluate(const Rational& z, const Assignment& at) const;
    /// Parameter-free instance with z1, z2 replaced by the assignment.
    RationalSolution instantiate(const Assignment& at) const;
};

RationalSolution operator+(const RationalSolution& a, const RationalSolution& b);
RationalSolution operator*(const ParamScalar& alpha, const RationalSolution& w);

/// Rows (0,1,0,1), (1,z1,1,z2), (2z1,z1^2,2z2,z2^2), (3z1^2,z1^3,3z2^2,z2^3).
MomentMatrix build_moment_matrix(const ParamScalar& z1, const ParamScalar& z2);

/// The printed closed-form inverse of the moment matrix, kept as
/// verification data for build_moment_matrix.
MomentMatrix moment_inverse_closed_form(const ParamScalar& z1, const ParamScalar& z2);

/// Solves the moment system for the residues given G_1..G_4.
ResidueSet reconstruct_residues(const ParamScalar& z1, const ParamScalar& z2, const std::array<Vec3, 4>& moments);

/// Coefficient of z^-k (k >= 1) in the expansion of the residue terms at infinity.
Vec3 moments_from_residues(const ParamScalar& z1, const ParamScalar& z2, const ResidueSet& residues, int k);

/// Polynomial part from G_-2, G_-1, G_0 of the table.
RationalSolution assemble_solution(const CoefficientTable& table, const ResidueSet& residues, const ParamScalar& z1,
                                   const ParamScalar& z2, std::string name = {});

/// generate -> reconstruct -> assemble for one seed.
struct BasisChain {
    SeedSpec seed;
    CoefficientTable table;
    ResidueSet residues;
    RationalSolution solution;
};

BasisChain build_basis_chain(const KZSystem& sys, const SeedSpec& seed, int k_max, std::string name = {});
BasisChain build_basis_chain(const KZSystem& sys, SeedName seed, int k_max);

}  // namespace kzrat
