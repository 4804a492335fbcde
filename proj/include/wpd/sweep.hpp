#pragma once

// Randomized verification sweeps over generated interferometer instances.
//
// Instance i of a sweep is drawn from its own generator stream Rng(seed, i),
// so results do not depend on evaluation order or thread count. The class
// combination for instance i cycles through dims x marker state x quanton
// state x block class in that (outer to inner) order.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wpd/interferometer.hpp"
#include "wpd/measures.hpp"

namespace wpd {

enum class MarkerState { pure, mixed };
enum class QuantonState { s_pure, s_mixed };
enum class BlockClass { unitary_pair, general_unitary };

const char* to_string(MarkerState c) noexcept;
const char* to_string(QuantonState c) noexcept;
const char* to_string(BlockClass c) noexcept;

struct SweepConfig {
  std::uint64_t seed = 42;
  std::size_t count = 10000;
  std::vector<std::size_t> dims{2, 3, 4};
  std::vector<MarkerState> marker_states{MarkerState::pure, MarkerState::mixed};
  std::vector<QuantonState> quanton_states{QuantonState::s_pure, QuantonState::s_mixed};
  std::vector<BlockClass> block_classes{BlockClass::unitary_pair, BlockClass::general_unitary};
};

/// Throws out_of_range for count == 0, empty class lists, or dims outside [2, 8].
void validate(const SweepConfig& cfg);

/// Applies a comma-separated class filter such as "pure,s_pure,unitary_pair".
/// Tokens select within their own family; families without a token keep all
/// classes. Throws parse_error on unknown tokens.
void apply_class_filter(SweepConfig& cfg, const std::string& classes);

struct InstanceSpec {
  std::size_t index = 0;
  std::size_t dim = 0;
  MarkerState marker = MarkerState::pure;
  QuantonState quanton = QuantonState::s_pure;
  BlockClass blocks = BlockClass::unitary_pair;
};

InstanceSpec instance_spec(const SweepConfig& cfg, std::size_t index);
InterferometerInstance generate_instance(const SweepConfig& cfg, const InstanceSpec& spec);

/// One evaluated check. Slack checks pass when value >= -tolerance, residual
/// checks when value <= tolerance.
struct CheckResult {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool is_residual = false;

  bool passed() const { return is_residual ? value <= tolerance : value >= -tolerance; }
  /// Distance to failure in units of the tolerance; negative means violated.
  double margin() const { return (is_residual ? tolerance - value : value + tolerance) / tolerance; }
};

struct InstanceRecord {
  InstanceSpec spec;
  double s = 0.0;
  double phi = 0.0;
  bool degenerate = false;
  std::optional<DualityReport> report;
  std::vector<CheckResult> checks;
};

/// All checks applicable to one instance.
InstanceRecord evaluate_instance(const InstanceSpec& spec, const InterferometerInstance& inst);

struct CheckStat {
  bool is_residual = false;
  double tolerance = 0.0;
  double worst = 0.0;  // min slack or max residual
  std::size_t evaluated = 0;
  std::size_t violations = 0;
};

struct SweepSummary {
  std::uint64_t seed = 0;
  std::size_t instance_count = 0;
  std::size_t degenerate_count = 0;
  std::size_t violation_count = 0;
  std::map<std::string, CheckStat> checks;
  std::optional<std::size_t> worst_index;
  std::string worst_check;
  nlohmann::json worst_instance;  // serialized instance for replay
  double runtime_seconds = 0.0;
};

struct SweepResult {
  SweepSummary summary;
  std::vector<InstanceRecord> records;
};

/// Evaluates cfg.count instances on `threads` workers (0 picks the hardware
/// concurrency). Violations are collected, never thrown.
SweepResult run_sweep(const SweepConfig& cfg, unsigned threads = 0);

nlohmann::json summary_to_json(const SweepSummary& summary);
void write_instances_csv(std::ostream& os, const std::vector<InstanceRecord>& records);

}  // namespace wpd
