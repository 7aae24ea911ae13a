#pragma once

#include "kzrat/residues.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kzrat {

enum class Verdict { Match, Scaled, Mismatch };

std::string to_string(Verdict v);

/// Outcome of comparing computed values against printed ones.
/// `ratio` is computed/printed when one common ratio exists; SCALED requires
/// it to be parameter-free and different from 1.
struct Comparison {
    Verdict verdict = Verdict::Mismatch;
    std::optional<ParamScalar> ratio;
};

Comparison compare_values(std::span<const ParamScalar> computed, std::span<const ParamScalar> printed);

struct AuditItem {
    std::string id;     // e.g. "Eq(1.36)"
    std::string label;  // e.g. "L_1"
    std::vector<std::string> computed;
    std::vector<std::string> printed;
    Verdict verdict = Verdict::Mismatch;
    std::optional<std::string> factor;  // set for SCALED
    std::string note;
};

struct AuditReport {
    std::vector<AuditItem> items;

    std::size_t count(Verdict v) const;
    const AuditItem* find(const std::string& id, const std::string& label) const;
};

/// The symbolic system and the three canonical chains (factor-2 recurrence,
/// zero free parameters).
struct AuditInputs {
    KZSystem sys;
    BasisChain w1;
    BasisChain w2;
    BasisChain w3;
};

AuditInputs compute_audit_inputs(int k_max = 12);

/// Compares every embedded printed display against the computed values.
/// Never throws on a mismatch; all outcomes are items of the report.
AuditReport audit_against_paper(const AuditInputs& computed);

}  // namespace kzrat
