#include "support.hpp"

#include "kzrat/errors.hpp"
#include "kzrat/kz_model.hpp"

#include <doctest.h>

using namespace kzrat;
using kzrat::testing::S;

namespace {

IntMatrix ints(std::initializer_list<long> entries) {
    IntMatrix m;
    int i = 0;
    for (long e : entries) {
        m(i / 3, i % 3) = Rational(e);
        ++i;
    }
    return m;
}

Vector3<Rational> ivec(long a, long b, long c) { return Vector3<Rational>(Rational(a), Rational(b), Rational(c)); }

}  // namespace

TEST_CASE("transposition matrices") {
    CHECK(transposition_matrix(1, 2) == ints({0, 1, 0, 1, 0, 0, 0, 0, 1}));
    CHECK(transposition_matrix(1, 3) == ints({0, 0, 1, 0, 1, 0, 1, 0, 0}));
    CHECK(transposition_matrix(2, 3) == ints({1, 0, 0, 0, 0, 1, 0, 1, 0}));
    CHECK_THROWS_AS(transposition_matrix(2, 2), InvalidArgument);
    CHECK_THROWS_AS(transposition_matrix(2, 1), InvalidArgument);
    CHECK_THROWS_AS(transposition_matrix(0, 2), InvalidArgument);
    CHECK_THROWS_AS(transposition_matrix(1, 4), InvalidArgument);
    CHECK_THROWS_AS(transposition_matrix(1, 2, 4), InvalidArgument);
    CHECK(identity_matrix() == ints({1, 0, 0, 0, 1, 0, 0, 0, 1}));
}

TEST_CASE("permutation matrix structure") {
    for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
        const IntMatrix p = transposition_matrix(i, j);
        for (int r = 0; r < 3; ++r) {
            int row_ones = 0;
            int col_ones = 0;
            for (int c = 0; c < 3; ++c) {
                row_ones += p(r, c) == Rational(1);
                col_ones += p(c, r) == Rational(1);
                CHECK((p(r, c).is_zero() || p(r, c) == Rational(1)));
            }
            CHECK(row_ones == 1);
            CHECK(col_ones == 1);
        }
        CHECK(p * p == identity_matrix());
    }
    const IntMatrix c = transposition_matrix(2, 3);
    CHECK(c * transposition_matrix(1, 2) * c == transposition_matrix(1, 3));
}

TEST_CASE("eigensystem of T") {
    const IntMatrix t = transposition_matrix(1, 2) + transposition_matrix(1, 3);
    const EigenSystem es = eigensystem(t);
    REQUIRE(es.pairs.size() == 3);
    CHECK(es.pairs[0].value == Rational(2));
    CHECK(es.pairs[1].value == Rational(1));
    CHECK(es.pairs[2].value == Rational(-1));
    CHECK(es.pairs[0].vector == ivec(1, 1, 1));
    CHECK(es.pairs[1].vector == ivec(0, 1, -1));
    CHECK(es.pairs[2].vector == ivec(2, -1, -1));
    for (const auto& p : es.pairs) {
        CHECK(t * p.vector == p.value * p.vector);
    }
    std::vector<Rational> doubled;
    for (const auto& p : es.pairs) doubled.push_back(Rational(2) * p.value);
    CHECK(doubled == std::vector<Rational>{Rational(4), Rational(2), Rational(-2)});
}

TEST_CASE("eigensystem normalization") {
    // diag(0, 3/2, -1/2): eigenvectors are unit vectors
    const IntMatrix d = ints({0, 0, 0, 0, 3, 0, 0, 0, -1});
    const EigenSystem es = eigensystem(d * Rational(Integer(1), Integer(2)));
    CHECK(es.pairs[0].value == Rational(Integer(3), Integer(2)));
    CHECK(es.pairs[0].vector == ivec(0, 1, 0));
    CHECK(es.pairs[2].vector == ivec(0, 0, 1));

    const EigenSystem neg = eigensystem(ints({1, 1, 0, 0, 2, 0, 0, 0, 3}));
    CHECK(neg.pairs[1].vector == ivec(1, 1, 0));
}

TEST_CASE("unsupported spectra") {
    CHECK_THROWS_AS(eigensystem(identity_matrix()), UnsupportedSpectrum);
    CHECK_THROWS_AS(eigensystem(transposition_matrix(1, 2)), UnsupportedSpectrum);
    // x^3 - 2 has no rational root
    CHECK_THROWS_AS(eigensystem(ints({0, 0, 2, 1, 0, 0, 0, 1, 0})), UnsupportedSpectrum);
}

TEST_CASE("building the system") {
    const KZSystem sym = build_s3_symbolic();
    CHECK(sym.z1() == S("z1"));
    CHECK(sym.z2() == S("z2"));
    CHECK(sym.multiplier() == Rational(-2));
    CHECK(sym.poles()[0].residue == transposition_matrix(1, 2));
    CHECK(sym.poles()[1].residue == transposition_matrix(1, 3));
    CHECK(sym.total() == transposition_matrix(1, 2) + transposition_matrix(1, 3));
    CHECK_FALSE(sym.is_numeric());

    const KZSystem num = build_s3_system(ParamScalar(0), ParamScalar(1));
    CHECK(num.is_numeric());
    CHECK_THROWS_AS(build_s3_system(ParamScalar(1), ParamScalar(1)), DegenerateConfiguration);
    CHECK_THROWS_AS(build_s3_system(S("z1"), S("z1")), DegenerateConfiguration);
    CHECK_THROWS_AS(KZSystem({Pole{S("z1"), transposition_matrix(1, 2)}}, Rational(-2)), InvalidArgument);
}

TEST_CASE("series matrices") {
    const KZSystem sys = build_s3_symbolic();
    const Mat3 p1 = lift(transposition_matrix(1, 2));
    const Mat3 p2 = lift(transposition_matrix(1, 3));
    CHECK(series_matrix(sys, 0) == (S("z1") * p1 + S("z2") * p2).eval());
    CHECK(series_matrix(sys, 2) == (S("z1^3") * p1 + S("z2^3") * p2).eval());

    const Vec3 l3(ParamScalar(2), ParamScalar(-1), ParamScalar(-1));
    const Vec3 expected(S("-z1 - z2"), S("2*z1 - z2"), S("-z1 + 2*z2"));
    CHECK(series_matrix(sys, 0) * l3 == expected);

    const KZSystem num = build_s3_system(ParamScalar(0), ParamScalar(1));
    CHECK(series_matrix(num, 3) == p2);
    CHECK_THROWS_AS(series_matrix(sys, -1), InvalidArgument);
}
