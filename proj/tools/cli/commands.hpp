#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cli/run_config.hpp"

namespace ckosc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailure = 1;
inline constexpr int kExitUsage = 2;

// Each command writes one table (or report) to out and returns the process exit code.
int cmd_uncertainty(const RunConfig& config, std::ostream& out);
int cmd_wavefunction(const RunConfig& config, std::ostream& out);
int cmd_trajectory(const RunConfig& config, std::ostream& out);
int cmd_hamiltonian(const RunConfig& config, std::ostream& out);
int cmd_validate(const RunConfig& config, std::ostream& out);

/// Full command line: parses args (without the program name), dispatches and maps errors to exit codes.
/// Output goes to --out when given, otherwise to out; diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ckosc::cli
