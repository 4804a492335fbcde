#pragma once

// Symmetric quanton-detecton system: two qubits, each the which-way marker of
// the other, coupled through the conditional phase exp(+-(i/2) Phi sigma_Dz).
//
// Detecton Bloch convention: the coupling rotates about z, so the predictability
// P_D is the z component and the initial visibility V_D0 the transverse length
// (reference phase along +x). The quanton is pure, V_Q0 = sqrt(1 - P_Q^2).

#include <vector>

#include "wpd/interferometer.hpp"

namespace wpd {

struct SqdsConfig {
  double p_d = 0.0;      // detecton predictability (Bloch z component)
  double v_d0 = 0.0;     // detecton initial visibility (transverse Bloch length)
  double p_q = 0.0;      // quanton predictability
  double phi_ent = 0.0;  // entangling phase
};

struct SqdsReport {
  double q = 0.0;      // detecton quality Q_D
  double xi_q = 0.0;
  double r_q = 0.0;
  double d_q = 0.0;
  double v_q = 0.0;
  double delta = 0.0;  // V_D^2 - V_Xi^2
  double chi = 0.0;    // D^2 / Xi^2
};

/// Throws out_of_range on |P_D|^2 + V_D0^2 > 1, negative V_D0, or P_Q outside [0, 1].
void validate(const SqdsConfig& cfg);

/// |s_D0| = sqrt(P_D^2 + V_D0^2)
double detecton_bloch_norm(const SqdsConfig& cfg);
double quanton_initial_visibility(const SqdsConfig& cfg);

double sqds_quality(const SqdsConfig& cfg);
double sqds_xi(const SqdsConfig& cfg);

struct SqdsDistinguishability {
  double r_q = 0.0;
  double d_q = 0.0;
};
SqdsDistinguishability sqds_distinguishability(const SqdsConfig& cfg);

double sqds_visibility(const SqdsConfig& cfg);

/// Both branches of the deviation; meaningful to compare at the tie P_Q = R_Q.
struct DeltaBranches {
  double predictability_dominant = 0.0;  // Q^2 (1 - P_Q^2), used when P_Q > R_Q
  double r_dominant = 0.0;               // P_Q^2 (1 - |s_D0|^2), used when P_Q <= R_Q
};
DeltaBranches sqds_delta_branches(const SqdsConfig& cfg);

/// Deviation between the squared visibility bounds, V_D^2 - V_Xi^2. At a tie
/// (|P_Q - R_Q| <= 1e-12) the mean of the two branch values is returned.
double sqds_delta(const SqdsConfig& cfg);

/// chi = D^2 / Xi^2 from the branch formulas: P_Q^2 / Xi^2 when P_Q > R_Q and
/// 1 - 4 D1 D2 P_Q^2 / Xi^2 otherwise, with D1, D2 = (1 +- |s_D0|) / 2 the
/// eigenvalues of the initial detecton state. Returns 1 when Xi = 0.
double sqds_chi(const SqdsConfig& cfg);

SqdsReport sqds_report(const SqdsConfig& cfg);

/// Realizes the configuration as a generic two-level-marker instance with s = 1.
/// The quanton is pre-rotated by exp(-i theta sigma_y / 2), sin(theta) = -P_Q,
/// ahead of the beam splitter so that the engine's w+ - w- equals P_Q; the marker
/// couples through the unitary pair (exp(+i Phi sigma_z / 2), exp(-i Phi sigma_z / 2)).
InterferometerInstance sqds_to_generic(const SqdsConfig& cfg);

struct Fig3Point {
  double s_d_norm = 0.0;
  double p_q = 0.0;
  double delta = 0.0;
};

struct Fig4Point {
  double s_d_norm = 0.0;
  double v_d_sq = 0.0;
  double v_xi_sq = 0.0;
  double v_q_sq = 0.0;
};

inline constexpr std::size_t kFig3DefaultResolution = 101;
inline constexpr std::size_t kFig4DefaultSamples = 201;

/// Delta over |s_D0| x P_Q in [0, 1]^2 for a balanced detecton at maximal
/// coupling (P_D = 0, Phi = pi/2). Row-major in |s_D0|. resolution >= 2.
std::vector<Fig3Point> figure3_grid(std::size_t resolution = kFig3DefaultResolution);

/// Squared bounds and visibility versus |s_D0| in [sqrt(1/2), 1] with
/// V_D0^2 = P_Q^2 = 1/2 and Phi = pi/2. samples >= 2.
std::vector<Fig4Point> figure4_curve(std::size_t samples = kFig4DefaultSamples);

/// Grid point with the largest Delta (first one on ties).
Fig3Point locate_max(const std::vector<Fig3Point>& grid);

}  // namespace wpd
