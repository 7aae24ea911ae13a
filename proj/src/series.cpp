#include "kzrat/series.hpp"

#include "kzrat/errors.hpp"
#include "kzrat/exact_linear.hpp"
#include "kzrat/scalar_text.hpp"

#include <algorithm>

namespace kzrat {

SeedName parse_seed_name(const std::string& name) {
    if (name == "w1") return SeedName::W1;
    if (name == "w2") return SeedName::W2;
    if (name == "w3") return SeedName::W3;
    throw InvalidArgument("unknown seed '" + name + "'");
}

std::string to_string(SeedName name) {
    switch (name) {
        case SeedName::W1: return "w1";
        case SeedName::W2: return "w2";
        case SeedName::W3: return "w3";
    }
    return "?";
}

namespace {

/// Order at which eigenvector l_j of T starts a chain: the eigenvalue of -c T.
Rational seed_level(const KZSystem& sys, const Rational& eigenvalue) { return -sys.multiplier() * eigenvalue; }

Matrix3<Rational> eigenbasis(const KZSystem& sys) {
    Matrix3<Rational> basis;
    for (int j = 0; j < 3; ++j) basis.col(j) = sys.spectrum().pairs[j].vector;
    return basis;
}

}  // namespace

SeedSpec canonical_seed(const KZSystem& sys, SeedName name) {
    // w1, w2, w3 start at the smallest, middle and largest level.
    const auto& pairs = sys.spectrum().pairs;
    std::vector<std::pair<Rational, const EigenPair*>> levels;
    for (const auto& p : pairs) levels.emplace_back(seed_level(sys, p.value), &p);
    std::sort(levels.begin(), levels.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    const auto& [level, pair] = levels[static_cast<std::size_t>(name)];
    if (!level.is_integer()) {
        throw InvalidSeed("seed level " + level.to_string() + " is not an integer");
    }
    return SeedSpec{static_cast<int>(level.numerator().get_si()), lift(pair->vector)};
}

void validate_seed(const KZSystem& sys, const SeedSpec& seed) {
    if (is_zero_matrix(seed.vector)) {
        throw InvalidSeed("seed vector is zero");
    }
    if (!is_zero_matrix((level_matrix(sys, seed.order) * seed.vector).eval())) {
        throw InvalidSeed("seed vector is not an eigenvector of 2T with eigenvalue " +
                          std::to_string(seed.order));
    }
}

Vec3 CoefficientTable::coeff(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Vec3(Vec3::Zero()) : it->second;
}

Mat3 level_matrix(const KZSystem& sys, int m) {
    return lift((Rational(m) * identity_matrix() + sys.multiplier() * sys.total()).eval());
}

Vec3 recurrence_rhs(const KZSystem& sys, int q, const CoefficientTable& table) {
    Vec3 sum = Vec3::Zero();
    for (int s = table.seed_order(); s <= q; ++s) {
        const auto& coeffs = table.coefficients();
        auto it = coeffs.find(s);
        if (it == coeffs.end() || is_zero_matrix(it->second)) continue;
        sum += series_matrix(sys, q - s) * it->second;
    }
    return ParamScalar(-sys.multiplier()) * sum;
}

Vec3 eigen_components(const KZSystem& sys, const Vec3& v) {
    return solve_exact(lift(eigenbasis(sys)), v);
}

LevelSolution solve_level(const KZSystem& sys, int m, const Vec3& rhs) {
    const auto& pairs = sys.spectrum().pairs;
    int kernel = -1;
    for (int j = 0; j < 3; ++j) {
        if (seed_level(sys, pairs[j].value) == Rational(m)) kernel = j;
    }
    if (kernel < 0) {
        return {solve_exact(level_matrix(sys, m), rhs), std::nullopt};
    }

    const Vec3 c = eigen_components(sys, rhs);
    if (!c(kernel).is_zero()) {
        throw UnsolvableResonance("level " + std::to_string(m) + ": right-hand side has component " +
                                  render_scalar(c(kernel)) + " along the kernel eigenvector");
    }
    Vec3 solution = Vec3::Zero();
    for (int j = 0; j < 3; ++j) {
        if (j == kernel) continue;
        const Rational divisor = Rational(m) - seed_level(sys, pairs[j].value);
        solution += (c(j) / ParamScalar(divisor)) * lift(pairs[j].vector);
    }
    return {solution, ResonanceRecord{m, pairs[kernel].vector, ParamScalar(0)}};
}

CoefficientTable generate(const KZSystem& sys, const SeedSpec& seed, int k_max) {
    validate_seed(sys, seed);
    if (k_max < seed.order) {
        throw InvalidArgument("k_max must be at least the seed order");
    }
    CoefficientTable table(seed.order, k_max);
    table.set(seed.order, seed.vector);
    for (int m = seed.order + 1; m <= k_max; ++m) {
        LevelSolution level = solve_level(sys, m, recurrence_rhs(sys, m - 1, table));
        table.set(m, std::move(level.coefficient));
        if (level.resonance) table.add_resonance(std::move(*level.resonance));
    }
    return table;
}

}  // namespace kzrat
