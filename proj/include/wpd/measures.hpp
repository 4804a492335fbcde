#pragma once

// Which-way information measures and the inequality hierarchy bounding the
// fringe visibility V:
//
//   V^2 <= 1 - P^2,   V^2 <= 1 - Q^2,   V^2 <= (1 - P^2)(1 - Q^2) = 1 - Xi^2,
//   V^2 <= 1 - D^2,
//
// and, for two-level markers with pure quanton preparation and way operators
// proportional to the identity, Xi >= D.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wpd/interferometer.hpp"
#include "wpd/linalg.hpp"

namespace wpd {

/// Every inequality is asserted as slack >= -kSlackTol.
inline constexpr double kSlackTol = 1e-9;

/// D = || w+ rho+ - w- rho- ||_1.
double distinguishability(double w_plus, const ComplexMatrix& rho_plus, double w_minus,
                          const ComplexMatrix& rho_minus);

/// Q = (1/2) || rho+ - rho- ||_1.
double quality(const ComplexMatrix& rho_plus, const ComplexMatrix& rho_minus);

/// Xi = sqrt(Q^2 + P^2 - Q^2 P^2). Throws out_of_range unless both lie in [0, 1].
double xi(double p, double q);

/// R = sqrt(max(0, 2 tr(Delta^2) - P^2)), Delta = w+ rho+ - w- rho-.
/// Only meaningful for two-level markers; throws dimension_mismatch otherwise.
double r_measure(double w_plus, const ComplexMatrix& rho_plus, double w_minus,
                 const ComplexMatrix& rho_minus, double p);

/// Two-level distinguishability D = max(P, R).
double d_two_level(double p, double r);

/// chi = 1 - 4 d1 d2 p^2 / xi^2, with d1, d2 the marker's initial spectral weights.
double chi_closed_form(double d1, double d2, double p, double xi);

struct DualityReport {
  double v = 0.0;
  double p = 0.0;
  double q = 0.0;
  double d = 0.0;
  double xi = 0.0;
  std::optional<double> r;    // two-level markers only
  std::optional<double> chi;  // D^2 / Xi^2, two-level markers only
  double v_bound_d = 0.0;     // sqrt(1 - D^2)
  double v_bound_xi = 0.0;    // sqrt(1 - Xi^2)
  double xi_minus_d = 0.0;    // recorded for every instance, asserted only in the stringency class
  bool stringency_class = false;
  std::optional<double> chi_closed_form;  // set inside the stringency class
  std::map<std::string, double> slacks;
};

/// Named slacks in DualityReport::slacks.
namespace slack {
inline constexpr const char* predictability = "predictability";      // 1 - P^2 - V^2
inline constexpr const char* quality = "quality";                    // 1 - Q^2 - V^2
inline constexpr const char* composite = "composite";                // (1-P^2)(1-Q^2) - V^2
inline constexpr const char* distinguishability = "distinguishability";  // 1 - D^2 - V^2
inline constexpr const char* stringency = "stringency";              // Xi - D
}  // namespace slack

/// True for n = 2, |s| = 1 and both way operators proportional to the
/// identity within 1e-10, i.e. with vanishing off-diagonal elements in every
/// basis. This is the class on which Xi >= D and the closed-form chi hold.
bool in_stringency_class(const InterferometerInstance& inst);

/// Full set of measures, bounds and slacks. Throws degenerate_branch when a
/// way probability vanishes.
DualityReport hierarchy_report(const InterferometerInstance& inst);

struct PureIdentityCheck {
  double residual = 0.0;  // |Q^2 + |C|^2 / (1 - P^2) - 1|
  double quality = 0.0;
  Complex coherence;      // C of the selected branch
  double predictability = 0.0;
  double gamma_asymmetry = 0.0;      // |lambda_max + lambda_min| of (rho+ - rho-)/2
  double gamma_quality_residual = 0.0;  // |Q - 2 lambda_max|
  double cross_term_residual = 0.0;  // |tr(rho+ rho-) - |C|^2 / (4 w+ w-)|
};

/// Checks Q^2 + |C|^2/(1-P^2) = 1 for a pure marker and |s| = 1, on the
/// branch selected by sign(s).
PureIdentityCheck pure_state_identity_check(const InterferometerInstance& inst);

struct MixedBoundCheck {
  double slack = 0.0;                   // 1 - Q^2 - |C|^2 / (1 - P^2)
  double recomposition_residual = 0.0;  // |C - sum_k D_k C_k|
  double triangle_slack = 0.0;          // sum_k D_k Q_k - Q
  std::vector<double> weights;          // D_k, descending
  std::vector<Complex> coherences;      // C_k
  std::vector<double> thetas;           // |C_k| / sqrt(4 w+_k w-_k), in [0, 1]
};

/// Spectral decomposition of a mixed marker and the resulting mixing bound
/// for |s| = 1.
MixedBoundCheck mixed_state_bound_check(const InterferometerInstance& inst);

}  // namespace wpd
