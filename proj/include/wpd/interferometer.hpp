#pragma once

// Generic two-way interferometer with a quantum which-way marker (WWM).
//
// The quanton lives in a two-dimensional space with basis index 0 <-> sigma_z = +1.
// Joint operators are kron(quanton, wwm), quanton index outermost. The beam
// splitter and marker act together through the global operator
//
//   U = (1/sqrt 2) [[ V++, V+- ], [ -V-+, V-- ]]
//
// and states evolve as rho -> U^dagger rho U. The phase shifter conjugates the
// quanton with exp(-i phi sigma_z / 2), the beam merger with exp(-i pi sigma_y / 4).
// After the merger the two ways of the central stage are resolved by the
// projectors (1 +- sigma_x) / 2.

#include <array>
#include <cstddef>

#include "wpd/linalg.hpp"

namespace wpd {

/// Quanton preparation rho_Q = (1 + s sigma_z) / 2, with -1 <= s <= 1.
struct QuantonPrep {
  double s = 1.0;
};

struct WwmBlocks {
  std::size_t n = 0;
  ComplexMatrix vpp, vpm, vmp, vmm;
};

struct InterferometerInstance {
  QuantonPrep prep;
  WwmBlocks blocks;
  ComplexMatrix rho_d0;
  double phi = 0.0;
};

struct EvolutionResult {
  ComplexMatrix rho_final;  // joint state at the output port, dim 2n
  double w_plus = 0.0;
  double w_minus = 0.0;
  Complex c_up;
  Complex c_down;
  Complex c;
  std::array<double, 3> bloch_final{};  // (S_x, S_y, S_z) of the quanton
};

struct ConditionalStates {
  double w_plus = 0.0;
  ComplexMatrix rho_plus;
  double w_minus = 0.0;
  ComplexMatrix rho_minus;
};

/// Way probabilities below this are treated as a degenerate branch.
inline constexpr double kDegenerateWeight = 1e-12;

ComplexMatrix assemble_global_unitary(const WwmBlocks& blocks);
bool validate_unitarity(const WwmBlocks& blocks);
/// V++ = V-+ = u_plus, V+- = V-- = u_minus.
WwmBlocks from_unitary_pair(const ComplexMatrix& u_plus, const ComplexMatrix& u_minus);
/// Inverse of assemble_global_unitary for an even-dimensional unitary.
WwmBlocks from_global_unitary(const ComplexMatrix& u);

/// Throws DualityError when s, the blocks or rho_d0 are invalid.
void validate(const InterferometerInstance& inst);

EvolutionResult evolve(const InterferometerInstance& inst);

/// Quanton Bloch vector read directly off a joint state.
std::array<double, 3> quanton_bloch(const ComplexMatrix& rho_joint);

/// Probability of finding the quanton in the upper output port (sigma_z = +1).
double upper_port_probability(const ComplexMatrix& rho_joint, std::size_t n);

/// Unnormalized w+ rho+ and w- rho- as closed-form sums over the blocks.
/// No degeneracy check; the returned weights are the traces.
ConditionalStates weighted_conditionals(const InterferometerInstance& inst);

/// Normalized conditional marker states. Throws degenerate_branch if either
/// weight is below kDegenerateWeight.
ConditionalStates conditional_wwm_states(const InterferometerInstance& inst);

double visibility(const EvolutionResult& res);
double predictability(const EvolutionResult& res);

/// Marker operators whose expectations give the way probabilities:
/// W+ = (1+s)/4 V++ V++^dag + (1-s)/4 V-+ V-+^dag, and likewise W- with V+-, V--.
std::array<ComplexMatrix, 2> way_operators(const WwmBlocks& blocks, double s);

/// Blocks of the single-inversion branch: (V++, V+-) for s = +1 and
/// (-V-+, V--) for s = -1.
std::array<ComplexMatrix, 2> branch_blocks(const WwmBlocks& blocks, int sign);

}  // namespace wpd
