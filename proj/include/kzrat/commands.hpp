#pragma once

#include "kzrat/serialize.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace kzrat {

enum ExitCode : int {
    ExitSuccess = 0,
    ExitUsage = 1,
    ExitVerificationFailure = 2,
    ExitUnsolvableResonance = 3,
    ExitDegenerateConfiguration = 4,
};

struct RunConfig {
    std::optional<std::string> z1;  // both set means numeric mode
    std::optional<std::string> z2;
    int k_max = 12;
    OutputFormat format = OutputFormat::Json;
    std::string seed = "all";
    std::optional<int> order;           // explicit seed for `series`
    std::optional<std::string> vector;  // comma separated scalars
    std::optional<std::string> out;
};

/// Symbolic system, or the numeric one for the configured z1, z2.
KZSystem system_for(const RunConfig& config);

int cmd_basis(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_series(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const std::vector<std::string>& files, const RunConfig& config, std::ostream& out,
               std::ostream& err);
int cmd_audit(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_independence(const std::vector<std::string>& files, const RunConfig& config, std::ostream& out,
                     std::ostream& err);

/// Runs body and maps library exceptions to exit codes, reporting on err.
int run_guarded(const std::function<int()>& body, std::ostream& err);

}  // namespace kzrat
