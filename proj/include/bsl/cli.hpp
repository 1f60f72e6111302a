#pragma once

// Command-line front end. Kept in the library so tests can drive it without
// spawning processes.
//
// Exit codes: 0 ok, 2 usage or parse error, 3 budget exceeded, 1 anything else.

#include "bsl/report.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace bsl {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_budget = 3;

/// Runs one command. `args` excludes the program name. Results go to
/// config.out when set, otherwise to `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Executes a parsed configuration and returns its records.
std::vector<Record> execute(const ExperimentConfig& config);

/// Renders records in config.format.
void render(std::ostream& os, const ExperimentConfig& config, const std::vector<Record>& records);

}  // namespace bsl
