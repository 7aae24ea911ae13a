#pragma once

#include "kzrat/eigen_support.hpp"
#include "kzrat/param_scalar.hpp"
#include "kzrat/rational.hpp"

#include <vector>

namespace kzrat {

/// 3x3 matrix with rational (here always integer-valued) entries.
using IntMatrix = Matrix3<Rational>;

/// Permutation matrix of the transposition (i j), 1-based, i < j <= n.
/// Only n = 3 is supported.
IntMatrix transposition_matrix(int i, int j, int n = 3);

IntMatrix identity_matrix();

struct EigenPair {
    Rational value;
    Vector3<Rational> vector;
};

/// Eigenpairs sorted by decreasing eigenvalue. Vectors are scaled to coprime
/// integers whose first nonzero entry is positive.
struct EigenSystem {
    std::vector<EigenPair> pairs;
};

/// Exact eigensystem of a 3x3 rational matrix with three distinct rational
/// eigenvalues. Throws UnsupportedSpectrum otherwise.
EigenSystem eigensystem(const IntMatrix& m);

struct Pole {
    ParamScalar location;
    IntMatrix residue;
};

/// dW/dz = multiplier * sum_j residue_j / (z - location_j) * W.
class KZSystem {
public:
    KZSystem(std::vector<Pole> poles, Rational multiplier);

    const std::vector<Pole>& poles() const { return poles_; }
    const Rational& multiplier() const { return multiplier_; }
    /// Sum of the residue matrices (the residue at infinity up to sign).
    const IntMatrix& total() const { return total_; }
    const EigenSystem& spectrum() const { return spectrum_; }

    const ParamScalar& z1() const { return poles_[0].location; }
    const ParamScalar& z2() const { return poles_[1].location; }
    /// True when both pole locations are parameter-free.
    bool is_numeric() const;

private:
    std::vector<Pole> poles_;
    Rational multiplier_;
    IntMatrix total_;
    EigenSystem spectrum_;
};

/// The S3 system with poles (z1, P1), (z2, P2) and multiplier -2.
/// Throws DegenerateConfiguration if z1 = z2.
KZSystem build_s3_system(const ParamScalar& z1, const ParamScalar& z2);
KZSystem build_s3_symbolic();

/// T_r = sum_j location_j^(r+1) residue_j for r >= 0.
Mat3 series_matrix(const KZSystem& sys, int r);

}  // namespace kzrat
