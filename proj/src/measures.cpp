#include "wpd/measures.hpp"

#include <algorithm>
#include <cmath>

#include "wpd/error.hpp"

namespace wpd {

namespace {

void require_weights(double w_plus, double w_minus) {
  if (w_plus < 0.0 || w_minus < 0.0 || std::abs(w_plus + w_minus - 1.0) > kValidationTol) {
    throw DualityError(ErrorKind::out_of_range, "way probabilities must be >= 0 and sum to 1");
  }
}

double sqrt_clamped(double x) { return std::sqrt(std::max(0.0, x)); }

bool is_pure_inversion(double s) { return std::abs(std::abs(s) - 1.0) <= 1e-12; }

// Quantities of a single-inversion branch (s = +1 or s = -1) expressed through
// the branch blocks (a, b) = (V++, V+-) or (-V-+, V--).
struct Branch {
  ComplexMatrix a, b;
  double w_plus = 0.0;
  double w_minus = 0.0;
  Complex coherence;  // tr(a^dag rho b)
};

Branch make_branch(const InterferometerInstance& inst) {
  const int sign = inst.prep.s >= 0.0 ? 1 : -1;
  auto [a, b] = branch_blocks(inst.blocks, sign);
  const auto& rho = inst.rho_d0;
  Branch br{a, b, 0.0, 0.0, {}};
  br.w_plus = 0.5 * trace(rho * a * dagger(a)).real();
  br.w_minus = 0.5 * trace(rho * b * dagger(b)).real();
  br.coherence = trace(dagger(a) * rho * b);
  if (br.w_plus < kDegenerateWeight || br.w_minus < kDegenerateWeight) {
    throw DualityError(ErrorKind::degenerate_branch, "branch way probability vanishes");
  }
  return br;
}

}  // namespace

double distinguishability(double w_plus, const ComplexMatrix& rho_plus, double w_minus,
                          const ComplexMatrix& rho_minus) {
  require_weights(w_plus, w_minus);
  require_density_matrix(rho_plus, "rho_plus");
  require_density_matrix(rho_minus, "rho_minus");
  return trace_norm(rho_plus * w_plus - rho_minus * w_minus);
}

double quality(const ComplexMatrix& rho_plus, const ComplexMatrix& rho_minus) {
  if (rho_plus.dim() != rho_minus.dim()) {
    throw DualityError(ErrorKind::dimension_mismatch, "conditional states differ in dim");
  }
  require_density_matrix(rho_plus, "rho_plus");
  require_density_matrix(rho_minus, "rho_minus");
  return 0.5 * trace_norm(rho_plus - rho_minus);
}

double xi(double p, double q) {
  if (!(p >= 0.0 && p <= 1.0 && q >= 0.0 && q <= 1.0)) {
    throw DualityError(ErrorKind::out_of_range, "xi arguments must lie in [0, 1]");
  }
  // 1 - (1 - p^2)(1 - q^2), written symmetrically
  const double p2 = p * p;
  const double q2 = q * q;
  return std::sqrt(p2 + q2 - p2 * q2);
}

double r_measure(double w_plus, const ComplexMatrix& rho_plus, double w_minus,
                 const ComplexMatrix& rho_minus, double p) {
  if (rho_plus.dim() != 2 || rho_minus.dim() != 2) {
    throw DualityError(ErrorKind::dimension_mismatch, "R is defined for two-level markers only");
  }
  require_weights(w_plus, w_minus);
  require_density_matrix(rho_plus, "rho_plus");
  require_density_matrix(rho_minus, "rho_minus");
  const ComplexMatrix delta = rho_plus * w_plus - rho_minus * w_minus;
  return sqrt_clamped(2.0 * trace(delta * delta).real() - p * p);
}

double d_two_level(double p, double r) { return std::max(p, r); }

double chi_closed_form(double d1, double d2, double p, double xi_value) {
  if (d1 < 0.0 || d2 < 0.0 || std::abs(d1 + d2 - 1.0) > 1e-12) {
    throw DualityError(ErrorKind::out_of_range, "spectral weights must be >= 0 and sum to 1");
  }
  if (xi_value <= 0.0) {
    if (p > 0.0) {
      throw DualityError(ErrorKind::out_of_range, "xi = 0 with p > 0 is inconsistent (xi >= p)");
    }
    return 1.0;  // P = Q = Xi = D = 0
  }
  return 1.0 - 4.0 * d1 * d2 * p * p / (xi_value * xi_value);
}

bool in_stringency_class(const InterferometerInstance& inst) {
  if (inst.blocks.n != 2 || !is_pure_inversion(inst.prep.s)) return false;
  for (const auto& w : way_operators(inst.blocks, inst.prep.s)) {
    if (std::abs(w(0, 1)) > kValidationTol || std::abs(w(1, 0)) > kValidationTol) return false;
    if (std::abs(w(0, 0) - w(1, 1)) > kValidationTol) return false;
  }
  return true;
}

DualityReport hierarchy_report(const InterferometerInstance& inst) {
  const EvolutionResult res = evolve(inst);
  const ConditionalStates cond = conditional_wwm_states(inst);

  DualityReport rep;
  rep.v = visibility(res);
  rep.p = predictability(res);
  rep.q = quality(cond.rho_plus, cond.rho_minus);
  rep.d = distinguishability(cond.w_plus, cond.rho_plus, cond.w_minus, cond.rho_minus);
  rep.xi = xi(std::min(rep.p, 1.0), std::min(rep.q, 1.0));
  rep.v_bound_d = sqrt_clamped(1.0 - rep.d * rep.d);
  rep.v_bound_xi = sqrt_clamped(1.0 - rep.xi * rep.xi);
  rep.xi_minus_d = rep.xi - rep.d;

  const double v2 = rep.v * rep.v;
  const double p2 = rep.p * rep.p;
  const double q2 = rep.q * rep.q;
  rep.slacks[slack::predictability] = 1.0 - p2 - v2;
  rep.slacks[slack::quality] = 1.0 - q2 - v2;
  rep.slacks[slack::composite] = (1.0 - p2) * (1.0 - q2) - v2;
  rep.slacks[slack::distinguishability] = 1.0 - rep.d * rep.d - v2;

  if (inst.blocks.n == 2) {
    rep.r = r_measure(cond.w_plus, cond.rho_plus, cond.w_minus, cond.rho_minus, rep.p);
    if (rep.xi > 0.0) rep.chi = rep.d * rep.d / (rep.xi * rep.xi);
  }

  rep.stringency_class = in_stringency_class(inst);
  if (rep.stringency_class) {
    rep.slacks[slack::stringency] = rep.xi - rep.d;
    if (rep.xi > 0.0) {
      if (rep.p < *rep.r) {
        const auto eig = hermitian_eigen(inst.rho_d0);
        const double d1 = std::clamp(eig.eigenvalues[0], 0.0, 1.0);
        rep.chi_closed_form = chi_closed_form(d1, 1.0 - d1, rep.p, rep.xi);
      } else {
        rep.chi_closed_form = p2 / (rep.xi * rep.xi);
      }
    }
  }
  return rep;
}

PureIdentityCheck pure_state_identity_check(const InterferometerInstance& inst) {
  validate(inst);
  if (!is_pure_inversion(inst.prep.s)) {
    throw DualityError(ErrorKind::out_of_range, "pure-state identity requires |s| = 1");
  }
  if (std::abs(purity(inst.rho_d0) - 1.0) > kValidationTol) {
    throw DualityError(ErrorKind::invalid_state, "pure-state identity requires a pure marker");
  }
  const Branch br = make_branch(inst);
  const double p = std::abs(br.w_plus - br.w_minus);
  if (p >= 1.0 - 1e-12) {
    throw DualityError(ErrorKind::degenerate_branch, "P = 1 leaves 1 - P^2 = 0");
  }
  const double one_minus_p2 = 4.0 * br.w_plus * br.w_minus;

  const auto& rho = inst.rho_d0;
  const ComplexMatrix rho_plus = dagger(br.a) * rho * br.a * (0.5 / br.w_plus);
  const ComplexMatrix rho_minus = dagger(br.b) * rho * br.b * (0.5 / br.w_minus);
  const ComplexMatrix gamma = (rho_plus - rho_minus) * 0.5;
  const auto spectrum = hermitian_eigen(gamma).eigenvalues;
  const double lambda = spectrum.front();

  PureIdentityCheck out;
  out.quality = 0.5 * trace_norm(rho_plus - rho_minus);
  out.coherence = br.coherence;
  out.predictability = p;
  out.gamma_asymmetry = std::abs(spectrum.front() + spectrum.back());
  out.gamma_quality_residual = std::abs(out.quality - 2.0 * lambda);
  out.cross_term_residual =
      std::abs(trace(rho_plus * rho_minus).real() - std::norm(br.coherence) / one_minus_p2);
  out.residual =
      std::abs(out.quality * out.quality + std::norm(br.coherence) / one_minus_p2 - 1.0);
  return out;
}

MixedBoundCheck mixed_state_bound_check(const InterferometerInstance& inst) {
  validate(inst);
  if (!is_pure_inversion(inst.prep.s)) {
    throw DualityError(ErrorKind::out_of_range, "mixing bound requires |s| = 1");
  }
  const Branch br = make_branch(inst);
  const std::size_t n = inst.blocks.n;
  const auto& rho = inst.rho_d0;
  const ComplexMatrix a_dag = dagger(br.a);
  const ComplexMatrix b_dag = dagger(br.b);
  const double one_minus_p2 = 4.0 * br.w_plus * br.w_minus;

  // The 1/4 prefactor with unnormalized images makes Q_up equal (1/2)||rho+ - rho-||.
  auto branch_quality = [&](const ComplexMatrix& state) {
    return 0.25 * trace_norm(a_dag * state * br.a * (1.0 / br.w_plus) -
                             b_dag * state * br.b * (1.0 / br.w_minus));
  };

  MixedBoundCheck out;
  const double q_up = branch_quality(rho);
  out.slack = 1.0 - q_up * q_up - std::norm(br.coherence) / one_minus_p2;

  const auto eig = hermitian_eigen(rho);
  const ComplexMatrix b_a_dag = br.b * a_dag;
  Complex recomposed{};
  double mixed_quality = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    ComplexMatrix projector(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        projector(i, j) = eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k));

    const double weight = eig.eigenvalues[k];
    const Complex c_k = trace(projector * b_a_dag);
    const double w_plus_k = 0.5 * trace(projector * br.a * a_dag).real();
    const double w_minus_k = 0.5 * trace(projector * br.b * b_dag).real();
    const double denom = 4.0 * w_plus_k * w_minus_k;

    out.weights.push_back(weight);
    out.coherences.push_back(c_k);
    out.thetas.push_back(denom > 1e-24 ? std::abs(c_k) / std::sqrt(denom) : 0.0);
    recomposed += weight * c_k;
    mixed_quality += weight * branch_quality(projector);
  }
  out.recomposition_residual = std::abs(recomposed - br.coherence);
  out.triangle_slack = mixed_quality - q_up;
  return out;
}

}  // namespace wpd
