#pragma once

#include "kzrat/kz_model.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kzrat {

/// Lowest nonzero coefficient of an expansion W(z) = sum_k z^-k G_k.
struct SeedSpec {
    int order = 0;
    Vec3 vector = Vec3::Zero();
};

/// The three basis chains: w1 seeds at -2, w2 at 2, w3 at 4.
enum class SeedName { W1, W2, W3 };

SeedName parse_seed_name(const std::string& name);
std::string to_string(SeedName name);

/// Canonical seed built from the eigensystem of T.
SeedSpec canonical_seed(const KZSystem& sys, SeedName name);

/// Throws InvalidSeed unless vector is nonzero and (order I - 2T) vector = 0.
void validate_seed(const KZSystem& sys, const SeedSpec& seed);

/// A level m at which (m I - 2T) is singular.
struct ResonanceRecord {
    int level = 0;
    Vector3<Rational> kernel;
    ParamScalar free_parameter;
};

class CoefficientTable {
public:
    CoefficientTable(int seed_order, int k_max) : seed_order_(seed_order), k_max_(k_max) {}

    int seed_order() const { return seed_order_; }
    int k_max() const { return k_max_; }
    /// G_k, zero for orders that were not generated.
    Vec3 coeff(int k) const;
    const std::map<int, Vec3>& coefficients() const { return coeffs_; }
    const std::vector<ResonanceRecord>& resonances() const { return resonances_; }

    void set(int k, Vec3 value) { coeffs_[k] = std::move(value); }
    void add_resonance(ResonanceRecord r) { resonances_.push_back(std::move(r)); }

private:
    int seed_order_;
    int k_max_;
    std::map<int, Vec3> coeffs_;
    std::vector<ResonanceRecord> resonances_;
};

/// Matrix (m I - c T) of level m, where c = -multiplier.
Mat3 level_matrix(const KZSystem& sys, int m);

/// -multiplier * sum_{r+s=q, r>=0} T_r G_s.
Vec3 recurrence_rhs(const KZSystem& sys, int q, const CoefficientTable& table);

/// Components of v in the eigenbasis of T, in spectrum order.
Vec3 eigen_components(const KZSystem& sys, const Vec3& v);

struct LevelSolution {
    Vec3 coefficient;
    std::optional<ResonanceRecord> resonance;
};

/// Solves (m I - 2T) G = rhs. At resonant levels the component along the
/// kernel is fixed to zero; throws UnsolvableResonance if rhs has a nonzero
/// component along the kernel eigenvector.
LevelSolution solve_level(const KZSystem& sys, int m, const Vec3& rhs);

/// Runs the recurrence from seed.order to k_max (inclusive).
CoefficientTable generate(const KZSystem& sys, const SeedSpec& seed, int k_max);

}  // namespace kzrat
