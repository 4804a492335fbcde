#include "wpd/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include "wpd/error.hpp"
#include "wpd/io.hpp"
#include "wpd/random.hpp"

namespace wpd {

using nlohmann::json;

const char* to_string(MarkerState c) noexcept { return c == MarkerState::pure ? "pure" : "mixed"; }
const char* to_string(QuantonState c) noexcept {
  return c == QuantonState::s_pure ? "s_pure" : "s_mixed";
}
const char* to_string(BlockClass c) noexcept {
  return c == BlockClass::unitary_pair ? "unitary_pair" : "general_unitary";
}

void validate(const SweepConfig& cfg) {
  if (cfg.count == 0) throw DualityError(ErrorKind::out_of_range, "count must be >= 1");
  if (cfg.dims.empty() || cfg.marker_states.empty() || cfg.quanton_states.empty() ||
      cfg.block_classes.empty()) {
    throw DualityError(ErrorKind::out_of_range, "sweep needs at least one dim and one class each");
  }
  for (auto d : cfg.dims) {
    if (d < 2 || d > 8) throw DualityError(ErrorKind::out_of_range, "dims must lie in [2, 8]");
  }
}

void apply_class_filter(SweepConfig& cfg, const std::string& classes) {
  std::vector<MarkerState> markers;
  std::vector<QuantonState> quantons;
  std::vector<BlockClass> blocks;
  std::stringstream ss(classes);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    if (token == "pure") markers.push_back(MarkerState::pure);
    else if (token == "mixed") markers.push_back(MarkerState::mixed);
    else if (token == "s_pure") quantons.push_back(QuantonState::s_pure);
    else if (token == "s_mixed") quantons.push_back(QuantonState::s_mixed);
    else if (token == "unitary_pair") blocks.push_back(BlockClass::unitary_pair);
    else if (token == "general_unitary") blocks.push_back(BlockClass::general_unitary);
    else throw DualityError(ErrorKind::parse_error, "unknown class '" + token + "'");
  }
  if (!markers.empty()) cfg.marker_states = markers;
  if (!quantons.empty()) cfg.quanton_states = quantons;
  if (!blocks.empty()) cfg.block_classes = blocks;
}

InstanceSpec instance_spec(const SweepConfig& cfg, std::size_t index) {
  std::size_t k = index;
  InstanceSpec spec;
  spec.index = index;
  spec.blocks = cfg.block_classes[k % cfg.block_classes.size()];
  k /= cfg.block_classes.size();
  spec.quanton = cfg.quanton_states[k % cfg.quanton_states.size()];
  k /= cfg.quanton_states.size();
  spec.marker = cfg.marker_states[k % cfg.marker_states.size()];
  k /= cfg.marker_states.size();
  spec.dim = cfg.dims[k % cfg.dims.size()];
  return spec;
}

InterferometerInstance generate_instance(const SweepConfig& cfg, const InstanceSpec& spec) {
  // Draw order: s, phi, blocks, marker state.
  Rng rng(cfg.seed, spec.index);
  const std::size_t n = spec.dim;
  InterferometerInstance inst;
  inst.prep.s = spec.quanton == QuantonState::s_pure ? (rng.uniform() < 0.5 ? 1.0 : -1.0)
                                                     : rng.uniform(-1.0, 1.0);
  inst.phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
  if (spec.blocks == BlockClass::unitary_pair) {
    const ComplexMatrix u_plus = haar_random_unitary(n, rng);
    const ComplexMatrix u_minus = haar_random_unitary(n, rng);
    inst.blocks = from_unitary_pair(u_plus, u_minus);
  } else {
    inst.blocks = from_global_unitary(haar_random_unitary(2 * n, rng));
  }
  const std::size_t rank = spec.marker == MarkerState::pure ? 1 : rng.integer(2, n);
  inst.rho_d0 = random_density(n, rank, rng);
  return inst;
}

namespace {

constexpr double kSaturationTol = 1e-10;
constexpr double kOrderTol = 1e-10;

CheckResult slack_check(std::string name, double value, double tol = kSlackTol) {
  return {std::move(name), value, tol, false};
}

CheckResult residual_check(std::string name, double value, double tol) {
  return {std::move(name), value, tol, true};
}

}  // namespace

InstanceRecord evaluate_instance(const InstanceSpec& spec, const InterferometerInstance& inst) {
  InstanceRecord rec;
  rec.spec = spec;
  rec.s = inst.prep.s;
  rec.phi = inst.phi;
  try {
    const DualityReport rep = hierarchy_report(inst);
    auto& checks = rec.checks;
    for (const char* name : {slack::predictability, slack::quality, slack::composite,
                             slack::distinguishability}) {
      checks.push_back(slack_check(name, rep.slacks.at(name)));
    }
    checks.push_back(slack_check("d_dominates_p", rep.d - rep.p, kOrderTol));
    checks.push_back(slack_check("xi_dominates_p_q", rep.xi - std::max(rep.p, rep.q), kOrderTol));

    const bool pure_inversion = spec.quanton == QuantonState::s_pure;
    const bool pure_marker = spec.marker == MarkerState::pure;
    if (pure_inversion && pure_marker) {
      checks.push_back(residual_check("saturation_v2_xi2",
                                      std::abs(rep.v * rep.v + rep.xi * rep.xi - 1.0),
                                      kSaturationTol));
      checks.push_back(residual_check("saturation_d_xi", std::abs(rep.d - rep.xi), kSaturationTol));
      checks.push_back(
          residual_check("pure_identity", pure_state_identity_check(inst).residual, kSlackTol));
    }
    if (pure_inversion) {
      const MixedBoundCheck mix = mixed_state_bound_check(inst);
      checks.push_back(slack_check("mixing_bound", mix.slack));
      checks.push_back(slack_check("mixing_triangle", mix.triangle_slack));
      checks.push_back(
          residual_check("spectral_recomposition", mix.recomposition_residual, kValidationTol));
      const double theta_max = *std::max_element(mix.thetas.begin(), mix.thetas.end());
      checks.push_back(residual_check("theta_range", std::max(0.0, theta_max - 1.0), kValidationTol));
    }
    if (rep.r) {
      checks.push_back(residual_check("two_level_d", std::abs(d_two_level(rep.p, *rep.r) - rep.d),
                                      kValidationTol));
    }
    if (rep.stringency_class) {
      checks.push_back(slack_check(slack::stringency, rep.slacks.at(slack::stringency)));
      if (rep.chi && rep.chi_closed_form) {
        checks.push_back(
            residual_check("chi_closed_form", std::abs(*rep.chi - *rep.chi_closed_form), kSlackTol));
      }
    }
    rec.report = rep;
  } catch (const DualityError& e) {
    if (e.kind() != ErrorKind::degenerate_branch) throw;
    rec.degenerate = true;
  }
  return rec;
}

SweepResult run_sweep(const SweepConfig& cfg, unsigned threads) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();

  SweepResult result;
  result.records.resize(cfg.count);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, cfg.count));
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        for (std::size_t i = t; i < cfg.count; i += threads) {
          const InstanceSpec spec = instance_spec(cfg, i);
          result.records[i] = evaluate_instance(spec, generate_instance(cfg, spec));
        }
      });
    }
  }

  // Single-threaded, index-ordered aggregation.
  SweepSummary& sum = result.summary;
  sum.seed = cfg.seed;
  sum.instance_count = cfg.count;
  double worst_margin = 0.0;
  for (const auto& rec : result.records) {
    if (rec.degenerate) {
      ++sum.degenerate_count;
      continue;
    }
    bool violated = false;
    for (const auto& chk : rec.checks) {
      auto [it, inserted] = sum.checks.try_emplace(chk.name);
      CheckStat& stat = it->second;
      if (inserted) {
        stat.is_residual = chk.is_residual;
        stat.tolerance = chk.tolerance;
        stat.worst = chk.value;
      }
      stat.worst = chk.is_residual ? std::max(stat.worst, chk.value) : std::min(stat.worst, chk.value);
      ++stat.evaluated;
      if (!chk.passed()) {
        ++stat.violations;
        violated = true;
      }
      if (!sum.worst_index || chk.margin() < worst_margin) {
        worst_margin = chk.margin();
        sum.worst_index = rec.spec.index;
        sum.worst_check = chk.name;
      }
    }
    if (violated) ++sum.violation_count;
  }
  if (sum.worst_index) {
    const InstanceSpec spec = instance_spec(cfg, *sum.worst_index);
    sum.worst_instance = instance_to_json(generate_instance(cfg, spec));
  }
  sum.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

json summary_to_json(const SweepSummary& sum) {
  json checks = json::object();
  for (const auto& [name, stat] : sum.checks) {
    checks[name] = {{stat.is_residual ? "max_residual" : "min_slack", round12(stat.worst)},
                    {"tolerance", stat.tolerance},
                    {"evaluated", stat.evaluated},
                    {"violations", stat.violations}};
  }
  json out{{"seed", sum.seed},
           {"instance_count", sum.instance_count},
           {"degenerate_count", sum.degenerate_count},
           {"violation_count", sum.violation_count},
           {"checks", checks},
           {"runtime_seconds", round12(sum.runtime_seconds)}};
  if (sum.worst_index) {
    out["worst"] = {{"index", *sum.worst_index},
                    {"check", sum.worst_check},
                    {"instance", sum.worst_instance}};
  } else {
    out["worst"] = nullptr;
  }
  return out;
}

void write_instances_csv(std::ostream& os, const std::vector<InstanceRecord>& records) {
  os << "index,dim,marker_state,quanton_state,block_class,s,phi,v,p,q,d,xi,r,chi,"
        "slack_predictability,slack_quality,slack_composite,slack_distinguishability,"
        "xi_minus_d,status\n";
  for (const auto& rec : records) {
    os << rec.spec.index << ',' << rec.spec.dim << ',' << to_string(rec.spec.marker) << ','
       << to_string(rec.spec.quanton) << ',' << to_string(rec.spec.blocks) << ','
       << format_number(rec.s) << ',' << format_number(rec.phi) << ',';
    if (!rec.report) {
      os << ",,,,,,,,,,,,degenerate\n";
      continue;
    }
    const auto& r = *rec.report;
    auto opt = [](const std::optional<double>& x) { return x ? format_number(*x) : std::string(); };
    const bool ok = std::all_of(rec.checks.begin(), rec.checks.end(),
                                [](const CheckResult& c) { return c.passed(); });
    os << format_number(r.v) << ',' << format_number(r.p) << ',' << format_number(r.q) << ','
       << format_number(r.d) << ',' << format_number(r.xi) << ',' << opt(r.r) << ',' << opt(r.chi)
       << ',' << format_number(r.slacks.at(slack::predictability)) << ','
       << format_number(r.slacks.at(slack::quality)) << ','
       << format_number(r.slacks.at(slack::composite)) << ','
       << format_number(r.slacks.at(slack::distinguishability)) << ','
       << format_number(r.xi_minus_d) << ',' << (ok ? "pass" : "violation") << '\n';
  }
}

}  // namespace wpd
