#pragma once

// Command implementations behind the `wpd` executable. Each returns the
// process exit code: 0 success, 1 inequality violation, 2 input or I/O
// error, 3 degenerate branch.

#include <filesystem>
#include <iosfwd>
#include <string>

#include "wpd/sweep.hpp"

namespace wpd::cli {

enum ExitCode : int { ok = 0, violation = 1, input_error = 2, degenerate = 3 };

int run_analyze(const std::filesystem::path& path, std::ostream& out, std::ostream& err);

/// Writes out_dir/summary.json and out_dir/instances.csv.
int run_verify(const SweepConfig& cfg, const std::filesystem::path& out_dir, std::ostream& out,
               std::ostream& err, unsigned threads = 0);

/// which is "fig3", "fig4" or "all". Writes out_dir/fig3.csv and/or out_dir/fig4.csv.
int run_figures(const std::string& which, const std::filesystem::path& out_dir, std::ostream& out,
                std::ostream& err, std::size_t fig3_resolution = 101, std::size_t fig4_samples = 201);

/// Parses argv and dispatches.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace wpd::cli
