#include "wpd/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wpd/error.hpp"
#include "wpd/io.hpp"
#include "wpd/measures.hpp"
#include "wpd/sqds.hpp"

namespace wpd::cli {

namespace fs = std::filesystem;

namespace {

bool ensure_directory(const fs::path& dir, std::ostream& err) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    err << "error: cannot create output directory " << dir << ": " << ec.message() << '\n';
    return false;
  }
  return true;
}

bool write_file(const fs::path& path, const std::string& contents, std::ostream& err) {
  std::ofstream file(path, std::ios::binary);
  file << contents;
  file.close();
  if (!file) {
    err << "error: cannot write " << path << '\n';
    return false;
  }
  return true;
}

}  // namespace

int run_analyze(const fs::path& path, std::ostream& out, std::ostream& err) {
  std::ifstream file(path);
  if (!file) {
    err << "error: cannot read " << path << '\n';
    return input_error;
  }
  try {
    const nlohmann::json j = nlohmann::json::parse(file);
    const InterferometerInstance inst = instance_from_json(j);
    const DualityReport rep = hierarchy_report(inst);
    out << report_to_json(rep).dump(2) << '\n';
    return ok;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << '\n';
    return input_error;
  } catch (const DualityError& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::degenerate_branch ? degenerate : input_error;
  }
}

int run_verify(const SweepConfig& cfg, const fs::path& out_dir, std::ostream& out,
               std::ostream& err, unsigned threads) {
  SweepResult result;
  try {
    result = run_sweep(cfg, threads);
  } catch (const DualityError& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }
  if (!ensure_directory(out_dir, err)) return input_error;

  std::ostringstream csv;
  write_instances_csv(csv, result.records);
  const std::string summary = summary_to_json(result.summary).dump(2) + "\n";
  if (!write_file(out_dir / "instances.csv", csv.str(), err) ||
      !write_file(out_dir / "summary.json", summary, err)) {
    return input_error;
  }

  const auto& sum = result.summary;
  out << "instances: " << sum.instance_count << " (degenerate " << sum.degenerate_count << ")\n";
  for (const auto& [name, stat] : sum.checks) {
    out << "  " << name << ": " << (stat.is_residual ? "max residual " : "min slack ")
        << format_number(stat.worst) << ", violations " << stat.violations << '/' << stat.evaluated
        << '\n';
  }
  out << "runtime: " << format_number(sum.runtime_seconds) << " s\n";
  if (sum.violation_count > 0) {
    err << sum.violation_count << " instance(s) violated a check; worst instance " << *sum.worst_index
        << " (" << sum.worst_check << ") serialized in " << (out_dir / "summary.json") << '\n';
    return violation;
  }
  return ok;
}

int run_figures(const std::string& which, const fs::path& out_dir, std::ostream& out,
                std::ostream& err, std::size_t fig3_resolution, std::size_t fig4_samples) {
  if (which != "fig3" && which != "fig4" && which != "all") {
    err << "error: --which must be fig3, fig4 or all\n";
    return input_error;
  }
  if (!ensure_directory(out_dir, err)) return input_error;
  try {
    if (which == "fig3" || which == "all") {
      const auto grid = figure3_grid(fig3_resolution);
      std::ostringstream csv;
      write_fig3_csv(csv, grid);
      if (!write_file(out_dir / "fig3.csv", csv.str(), err)) return input_error;
      const Fig3Point best = locate_max(grid);
      out << "fig3: " << (out_dir / "fig3.csv").string() << "; max delta "
          << format_number(best.delta) << " at s_d_norm " << format_number(best.s_d_norm)
          << ", p_q " << format_number(best.p_q) << '\n';
    }
    if (which == "fig4" || which == "all") {
      std::ostringstream csv;
      write_fig4_csv(csv, figure4_curve(fig4_samples));
      if (!write_file(out_dir / "fig4.csv", csv.str(), err)) return input_error;
      out << "fig4: " << (out_dir / "fig4.csv").string() << '\n';
    }
  } catch (const DualityError& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }
  return ok;
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wave-particle duality measures for two-way interferometers"};
  app.require_subcommand(1);

  std::string instance_path;
  auto* analyze = app.add_subcommand("analyze", "Print the duality report of an instance JSON file");
  analyze->add_option("file", instance_path, "Instance JSON file")->required();

  SweepConfig cfg;
  std::string classes;
  std::string verify_out = "out";
  unsigned threads = 0;
  auto* verify = app.add_subcommand("verify", "Randomized inequality sweep");
  verify->add_option("--seed", cfg.seed, "Generator seed")->capture_default_str();
  verify->add_option("--count", cfg.count, "Number of instances")->capture_default_str();
  verify->add_option("--dims", cfg.dims, "Marker dimensions, 2..8")
      ->delimiter(',')
      ->capture_default_str();
  verify->add_option("--classes", classes,
                     "Comma list from pure,mixed,s_pure,s_mixed,unitary_pair,general_unitary "
                     "(default: all)");
  verify->add_option("--out", verify_out, "Output directory")->capture_default_str();
  verify->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)")
      ->capture_default_str();

  std::string which = "all";
  std::string figures_out = "out";
  std::size_t resolution = kFig3DefaultResolution;
  std::size_t samples = kFig4DefaultSamples;
  auto* figures = app.add_subcommand("figures", "Emit SQDS figure data as CSV");
  figures->add_option("--which", which, "fig3, fig4 or all")->capture_default_str();
  figures->add_option("--out", figures_out, "Output directory")->capture_default_str();
  figures->add_option("--resolution", resolution, "fig3 grid points per axis")->capture_default_str();
  figures->add_option("--samples", samples, "fig4 curve samples")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return ok;
    }
    err << "error: " << e.what() << '\n';
    return input_error;
  }

  if (*analyze) return run_analyze(instance_path, out, err);
  if (*verify) {
    try {
      apply_class_filter(cfg, classes);
    } catch (const DualityError& e) {
      err << "error: " << e.what() << '\n';
      return input_error;
    }
    return run_verify(cfg, verify_out, out, err, threads);
  }
  return run_figures(which, figures_out, out, err, resolution, samples);
}

}  // namespace wpd::cli
