#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shs::cli {

/// Exit codes shared by all commands.
enum ExitCode : int { kSuccess = 0, kCheckFailure = 1, kUsageError = 2, kBlowUp = 3 };

/// Runs the named checks ("all" expands to every registered one), prints one
/// line per check and, when `out` is non-empty, writes the JSON report.
int cmd_verify(const std::vector<std::string>& suites, const std::string& out, std::ostream& log);
/// Integrates the configured run and writes series.csv, snapshot_initial.csv,
/// snapshot_final.csv and summary.json into out_dir.
int cmd_simulate(const std::string& config, const std::string& out_dir, std::ostream& log);
/// Prints a table for verification reports, simulation summaries and series CSVs.
int cmd_report(const std::vector<std::string>& paths, std::ostream& out);

/// Command-line front end; returns the process exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace shs::cli
