#include "wpd/sqds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wpd/error.hpp"

namespace wpd {

namespace {

constexpr double kTieTol = 1e-12;

double sq(double x) { return x * x; }

}  // namespace

void validate(const SqdsConfig& cfg) {
  if (!(cfg.v_d0 >= 0.0) || !std::isfinite(cfg.p_d) || !std::isfinite(cfg.phi_ent)) {
    throw DualityError(ErrorKind::out_of_range, "detecton parameters must be finite, V_D0 >= 0");
  }
  if (sq(cfg.p_d) + sq(cfg.v_d0) > 1.0 + 1e-12) {
    throw DualityError(ErrorKind::out_of_range, "P_D^2 + V_D0^2 exceeds 1");
  }
  if (!(cfg.p_q >= 0.0 && cfg.p_q <= 1.0)) {
    throw DualityError(ErrorKind::out_of_range, "P_Q must lie in [0, 1]");
  }
}

double detecton_bloch_norm(const SqdsConfig& cfg) {
  return std::min(1.0, std::hypot(cfg.p_d, cfg.v_d0));
}

double quanton_initial_visibility(const SqdsConfig& cfg) {
  return std::sqrt(std::max(0.0, 1.0 - sq(cfg.p_q)));
}

double sqds_quality(const SqdsConfig& cfg) {
  validate(cfg);
  return std::min(1.0, cfg.v_d0 * std::abs(std::sin(cfg.phi_ent)));
}

double sqds_xi(const SqdsConfig& cfg) {
  const double q = sqds_quality(cfg);
  const double p2 = sq(cfg.p_q);
  return std::sqrt(p2 + sq(q) * (1.0 - p2));
}

SqdsDistinguishability sqds_distinguishability(const SqdsConfig& cfg) {
  const double q = sqds_quality(cfg);
  const double p2 = sq(cfg.p_q);
  const double r = std::sqrt(p2 * sq(detecton_bloch_norm(cfg)) + sq(q) * (1.0 - p2));
  return {r, std::max(cfg.p_q, r)};
}

double sqds_visibility(const SqdsConfig& cfg) {
  validate(cfg);
  const double c = std::cos(cfg.phi_ent);
  const double s = std::sin(cfg.phi_ent);
  return quanton_initial_visibility(cfg) * std::sqrt(c * c + sq(cfg.p_d) * s * s);
}

DeltaBranches sqds_delta_branches(const SqdsConfig& cfg) {
  const double q = sqds_quality(cfg);
  const double p2 = sq(cfg.p_q);
  return {sq(q) * (1.0 - p2), p2 * (1.0 - sq(detecton_bloch_norm(cfg)))};
}

double sqds_delta(const SqdsConfig& cfg) {
  const auto branches = sqds_delta_branches(cfg);
  const double r = sqds_distinguishability(cfg).r_q;
  if (std::abs(cfg.p_q - r) <= kTieTol) {
    return 0.5 * (branches.predictability_dominant + branches.r_dominant);
  }
  return cfg.p_q > r ? branches.predictability_dominant : branches.r_dominant;
}

double sqds_chi(const SqdsConfig& cfg) {
  const double x = sqds_xi(cfg);
  if (x <= 0.0) {
    if (cfg.p_q > 0.0) {
      throw DualityError(ErrorKind::out_of_range, "Xi = 0 with P_Q > 0");
    }
    return 1.0;
  }
  const double r = sqds_distinguishability(cfg).r_q;
  const double p2 = sq(cfg.p_q);
  if (cfg.p_q > r) return p2 / sq(x);
  const double norm = detecton_bloch_norm(cfg);
  const double d1 = 0.5 * (1.0 + norm);
  const double d2 = 0.5 * (1.0 - norm);
  return 1.0 - 4.0 * d1 * d2 * p2 / sq(x);
}

SqdsReport sqds_report(const SqdsConfig& cfg) {
  SqdsReport rep;
  rep.q = sqds_quality(cfg);
  rep.xi_q = sqds_xi(cfg);
  const auto dist = sqds_distinguishability(cfg);
  rep.r_q = dist.r_q;
  rep.d_q = dist.d_q;
  rep.v_q = sqds_visibility(cfg);
  rep.delta = sqds_delta(cfg);
  rep.chi = sqds_chi(cfg);
  return rep;
}

InterferometerInstance sqds_to_generic(const SqdsConfig& cfg) {
  validate(cfg);
  const ComplexMatrix sz = pauli::z();
  // exp(+i Phi sigma_z / 2) is a rotation by -Phi.
  const ComplexMatrix u_plus = pauli_rotation(sz, -cfg.phi_ent);
  const ComplexMatrix u_minus = pauli_rotation(sz, cfg.phi_ent);
  const ComplexMatrix coupling = assemble_global_unitary(from_unitary_pair(u_plus, u_minus));

  // State vectors evolve with U^dagger, so U = (R^dagger x 1) U_pair applies R
  // to the quanton before the splitter.
  const double theta = -std::asin(cfg.p_q);
  const ComplexMatrix pre = pauli_rotation(pauli::y(), theta);
  const ComplexMatrix u = kron(dagger(pre), ComplexMatrix::identity(2)) * coupling;

  // rho_D = (1 + V_D0 sigma_x + P_D sigma_z) / 2
  ComplexMatrix rho = ComplexMatrix::identity(2) + pauli::x() * cfg.v_d0 + sz * cfg.p_d;
  rho *= 0.5;

  return InterferometerInstance{QuantonPrep{1.0}, from_global_unitary(u), std::move(rho), 0.0};
}

std::vector<Fig3Point> figure3_grid(std::size_t resolution) {
  if (resolution < 2) throw DualityError(ErrorKind::out_of_range, "figure3 resolution must be >= 2");
  std::vector<Fig3Point> grid;
  grid.reserve(resolution * resolution);
  const double step = 1.0 / static_cast<double>(resolution - 1);
  for (std::size_t i = 0; i < resolution; ++i) {
    const double norm = static_cast<double>(i) * step;
    for (std::size_t j = 0; j < resolution; ++j) {
      const double p_q = static_cast<double>(j) * step;
      const SqdsConfig cfg{0.0, norm, p_q, std::numbers::pi / 2.0};
      grid.push_back({norm, p_q, sqds_delta(cfg)});
    }
  }
  return grid;
}

std::vector<Fig4Point> figure4_curve(std::size_t samples) {
  if (samples < 2) throw DualityError(ErrorKind::out_of_range, "figure4 samples must be >= 2");
  const double lo = std::sqrt(0.5);
  const double step = (1.0 - lo) / static_cast<double>(samples - 1);
  std::vector<Fig4Point> curve;
  curve.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double norm = i + 1 == samples ? 1.0 : lo + static_cast<double>(i) * step;
    const SqdsConfig cfg{std::sqrt(std::max(0.0, norm * norm - 0.5)), lo, lo,
                         std::numbers::pi / 2.0};
    const double d = sqds_distinguishability(cfg).d_q;
    const double x = sqds_xi(cfg);
    const double v = sqds_visibility(cfg);
    curve.push_back({norm, 1.0 - d * d, 1.0 - x * x, v * v});
  }
  return curve;
}

Fig3Point locate_max(const std::vector<Fig3Point>& grid) {
  if (grid.empty()) throw DualityError(ErrorKind::out_of_range, "empty grid");
  return *std::max_element(grid.begin(), grid.end(), [](const Fig3Point& a, const Fig3Point& b) {
    return a.delta < b.delta;
  });
}

}  // namespace wpd
