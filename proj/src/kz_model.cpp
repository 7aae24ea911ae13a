#include "kzrat/kz_model.hpp"

#include "kzrat/errors.hpp"
#include "kzrat/univariate.hpp"

#include <Eigen/LU>
#include <algorithm>

namespace kzrat {

IntMatrix transposition_matrix(int i, int j, int n) {
    if (n != 3) {
        throw InvalidArgument("only 3x3 permutation matrices are supported");
    }
    if (i < 1 || j > n || i >= j) {
        throw InvalidArgument("transposition indices must satisfy 1 <= i < j <= n");
    }
    IntMatrix p = identity_matrix();
    p.row(i - 1).swap(p.row(j - 1));
    return p;
}

IntMatrix identity_matrix() { return IntMatrix::Identity(); }

namespace {

using RationalPoly = Polynomial<Rational>;

/// det(x I - m) in ascending powers of x.
RationalPoly characteristic_polynomial(const IntMatrix& m) {
    const Rational trace = m.trace();
    const Rational minors = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0) +
                            m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    return RationalPoly{-m.determinant(), minors, -trace, Rational(1)};
}

std::vector<Integer> divisors(Integer n) {
    n = abs(n);
    std::vector<Integer> out;
    if (n > Integer(1000000000)) {
        throw UnsupportedSpectrum("characteristic polynomial coefficients too large for root search");
    }
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    return out;
}

/// All rational roots with multiplicity.
std::vector<Rational> rational_roots(RationalPoly p) {
    std::vector<Rational> roots;
    while (p.degree() > 0 && p.coefficient(0).is_zero()) {
        roots.push_back(Rational(0));
        p = p.divmod(RationalPoly{Rational(0), Rational(1)}).first;
    }
    if (p.degree() <= 0) return roots;

    // Clear denominators to apply the rational root theorem.
    Integer lcm = 1;
    for (const auto& c : p.coefficients()) {
        const Integer d = c.denominator();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    }
    const Integer a0 = (p.coefficient(0) * Rational(lcm)).numerator();
    const Integer an = (p.leading() * Rational(lcm)).numerator();
    for (const auto& num : divisors(a0)) {
        for (const auto& den : divisors(an)) {
            for (int s : {1, -1}) {
                const Rational candidate(num * s, den);
                while (p.degree() > 0 && p.evaluate(candidate).is_zero()) {
                    roots.push_back(candidate);
                    p = p.divmod(RationalPoly::linear_factor(candidate)).first;
                }
            }
        }
    }
    return roots;
}

/// Spanning vector of the one-dimensional kernel of m, via row reduction.
Vector3<Rational> kernel_vector(IntMatrix m) {
    int rank = 0;
    std::vector<int> pivot_cols;
    for (int col = 0; col < 3 && rank < 3; ++col) {
        int pivot = rank;
        while (pivot < 3 && m(pivot, col).is_zero()) ++pivot;
        if (pivot == 3) continue;
        m.row(rank).swap(m.row(pivot));
        const Rational inv = m(rank, col).inverse();
        for (int j = 0; j < 3; ++j) m(rank, j) *= inv;
        for (int i = 0; i < 3; ++i) {
            if (i == rank || m(i, col).is_zero()) continue;
            const Rational f = m(i, col);
            for (int j = 0; j < 3; ++j) m(i, j) -= f * m(rank, j);
        }
        pivot_cols.push_back(col);
        ++rank;
    }
    if (rank != 2) {
        throw UnsupportedSpectrum("eigenspace is not one-dimensional");
    }
    int free_col = 0;
    while (std::find(pivot_cols.begin(), pivot_cols.end(), free_col) != pivot_cols.end()) ++free_col;
    Vector3<Rational> v = Vector3<Rational>::Zero();
    v(free_col) = Rational(1);
    for (int r = 0; r < rank; ++r) v(pivot_cols[r]) = -m(r, free_col);
    return v;
}

Vector3<Rational> normalize_integer(const Vector3<Rational>& v) {
    Integer den_lcm = 1;
    Integer num_gcd = 0;
    for (int i = 0; i < 3; ++i) {
        const Integer d = v(i).denominator();
        const Integer n = v(i).numerator();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    for (int i = 0; i < 3; ++i) {
        if (!v(i).is_zero()) {
            if (v(i).sign() < 0) scale = -scale;
            break;
        }
    }
    return v * scale;
}

}  // namespace

EigenSystem eigensystem(const IntMatrix& m) {
    std::vector<Rational> roots = rational_roots(characteristic_polynomial(m));
    if (roots.size() != 3) {
        throw UnsupportedSpectrum("matrix has irrational eigenvalues");
    }
    std::sort(roots.begin(), roots.end(), std::greater<>());
    if (std::adjacent_find(roots.begin(), roots.end()) != roots.end()) {
        throw UnsupportedSpectrum("matrix has a repeated eigenvalue");
    }
    EigenSystem result;
    for (const auto& value : roots) {
        const IntMatrix shifted = m - value * identity_matrix();
        result.pairs.push_back({value, normalize_integer(kernel_vector(shifted))});
    }
    return result;
}

KZSystem::KZSystem(std::vector<Pole> poles, Rational multiplier)
    : poles_(std::move(poles)), multiplier_(std::move(multiplier)), total_(IntMatrix::Zero()) {
    if (poles_.size() != 2) {
        throw InvalidArgument("exactly two poles are supported");
    }
    if ((poles_[0].location - poles_[1].location).is_zero()) {
        throw DegenerateConfiguration("pole locations coincide (z1 = z2)");
    }
    for (const auto& p : poles_) total_ += p.residue;
    spectrum_ = eigensystem(total_);
}

bool KZSystem::is_numeric() const {
    return std::all_of(poles_.begin(), poles_.end(), [](const Pole& p) { return p.location.is_constant(); });
}

KZSystem build_s3_system(const ParamScalar& z1, const ParamScalar& z2) {
    return KZSystem({{z1, transposition_matrix(1, 2)}, {z2, transposition_matrix(1, 3)}}, Rational(-2));
}

KZSystem build_s3_symbolic() { return build_s3_system(ParamScalar::z1(), ParamScalar::z2()); }

Mat3 series_matrix(const KZSystem& sys, int r) {
    if (r < 0) {
        throw InvalidArgument("series_matrix requires r >= 0; use KZSystem::total() for T");
    }
    Mat3 t = Mat3::Zero();
    for (const auto& p : sys.poles()) {
        t += p.location.pow(r + 1) * lift(p.residue);
    }
    return t;
}

}  // namespace kzrat
