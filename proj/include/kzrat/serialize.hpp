#pragma once

#include "kzrat/audit.hpp"
#include "kzrat/residues.hpp"
#include "kzrat/verifier.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace kzrat {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Json, Latex, Text };

OutputFormat parse_format(const std::string& name);

/// A set of solutions of the system with poles z1, z2, as exchanged on disk.
struct SolutionDocument {
    std::string mode;  // "symbolic" or "numeric"
    ParamScalar z1;
    ParamScalar z2;
    std::vector<RationalSolution> solutions;
};

Json to_json(const SolutionDocument& doc);
/// Throws InvalidArgument (or ParseError for bad scalar text) on malformed input.
SolutionDocument solutions_from_json(const Json& j);
std::string to_latex(const SolutionDocument& doc);
std::string to_text(const SolutionDocument& doc);

/// Series table with rows from min(-2, seed order) to k_max.
struct SeriesDocument {
    std::string mode;
    ParamScalar z1;
    ParamScalar z2;
    std::string seed_name;  // empty for explicit seeds
    SeedSpec seed;
    CoefficientTable table;
};

Json to_json(const SeriesDocument& doc);
std::string to_latex(const SeriesDocument& doc);
std::string to_text(const SeriesDocument& doc);

Json to_json(const AuditReport& report);
std::string to_text(const AuditReport& report);
std::string to_latex(const AuditReport& report);

std::string render(const SolutionDocument& doc, OutputFormat format);
std::string render(const SeriesDocument& doc, OutputFormat format);
std::string render(const AuditReport& report, OutputFormat format);

}  // namespace kzrat
