#include "wpd/interferometer.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wpd/error.hpp"

namespace wpd {

namespace {

void require_block_dims(const WwmBlocks& b) {
  for (const auto* m : {&b.vpp, &b.vpm, &b.vmp, &b.vmm}) {
    if (m->dim() != b.n || b.n == 0) {
      throw DualityError(ErrorKind::dimension_mismatch,
                         "WWM blocks must all have dim n = " + std::to_string(b.n));
    }
  }
}

// <A>_0 = tr(rho A)
Complex expect(const ComplexMatrix& rho, const ComplexMatrix& a) { return trace(rho * a); }

}  // namespace

ComplexMatrix assemble_global_unitary(const WwmBlocks& blocks) {
  require_block_dims(blocks);
  const std::size_t n = blocks.n;
  const double r = 1.0 / std::numbers::sqrt2;
  ComplexMatrix u(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      u(i, j) = r * blocks.vpp(i, j);
      u(i, n + j) = r * blocks.vpm(i, j);
      u(n + i, j) = -r * blocks.vmp(i, j);
      u(n + i, n + j) = r * blocks.vmm(i, j);
    }
  return u;
}

bool validate_unitarity(const WwmBlocks& blocks) {
  try {
    return is_unitary(assemble_global_unitary(blocks), kValidationTol);
  } catch (const DualityError&) {
    return false;
  }
}

WwmBlocks from_unitary_pair(const ComplexMatrix& u_plus, const ComplexMatrix& u_minus) {
  if (u_plus.dim() != u_minus.dim()) {
    throw DualityError(ErrorKind::dimension_mismatch, "unitary pair dims differ");
  }
  if (!is_unitary(u_plus) || !is_unitary(u_minus)) {
    throw DualityError(ErrorKind::not_unitary, "unitary pair members must be unitary");
  }
  return WwmBlocks{u_plus.dim(), u_plus, u_minus, u_plus, u_minus};
}

WwmBlocks from_global_unitary(const ComplexMatrix& u) {
  if (u.dim() == 0 || u.dim() % 2 != 0) {
    throw DualityError(ErrorKind::dimension_mismatch, "global operator must have even dim");
  }
  if (!is_unitary(u)) throw DualityError(ErrorKind::not_unitary, "global operator");
  const std::size_t n = u.dim() / 2;
  const double r = std::numbers::sqrt2;
  return WwmBlocks{n, block(u, n, 0, 0) * r, block(u, n, 0, 1) * r, block(u, n, 1, 0) * (-r),
                   block(u, n, 1, 1) * r};
}

void validate(const InterferometerInstance& inst) {
  const double s = inst.prep.s;
  if (!(s >= -1.0 && s <= 1.0)) {
    throw DualityError(ErrorKind::out_of_range, "inversion s must lie in [-1, 1]");
  }
  require_block_dims(inst.blocks);
  if (!validate_unitarity(inst.blocks)) {
    throw DualityError(ErrorKind::not_unitary, "assembled global operator is not unitary");
  }
  if (inst.rho_d0.dim() != inst.blocks.n) {
    throw DualityError(ErrorKind::dimension_mismatch, "rho_d0 dim differs from block dim");
  }
  require_density_matrix(inst.rho_d0, "rho_d0");
  if (!std::isfinite(inst.phi)) throw DualityError(ErrorKind::out_of_range, "phi is not finite");
}

std::array<double, 3> quanton_bloch(const ComplexMatrix& rho_joint) {
  const ComplexMatrix rq = partial_trace_inner(rho_joint, 2);
  return {trace(rq * pauli::x()).real(), trace(rq * pauli::y()).real(),
          trace(rq * pauli::z()).real()};
}

double upper_port_probability(const ComplexMatrix& rho_joint, std::size_t n) {
  double p = 0.0;
  for (std::size_t k = 0; k < n; ++k) p += rho_joint(k, k).real();
  return p;
}

EvolutionResult evolve(const InterferometerInstance& inst) {
  validate(inst);
  const auto& b = inst.blocks;
  const std::size_t n = b.n;
  const double s = inst.prep.s;

  const ComplexMatrix rho_q =
      ComplexMatrix::diagonal(std::array<Complex, 2>{(1.0 + s) / 2.0, (1.0 - s) / 2.0});
  const ComplexMatrix u = assemble_global_unitary(b);
  ComplexMatrix rho = dagger(u) * kron(rho_q, inst.rho_d0) * u;

  const ComplexMatrix id_n = ComplexMatrix::identity(n);
  const ComplexMatrix ps = kron(pauli_rotation(pauli::z(), inst.phi), id_n);
  rho = ps * rho * dagger(ps);
  const ComplexMatrix bm = kron(pauli_rotation(pauli::y(), std::numbers::pi / 2.0), id_n);
  rho = bm * rho * dagger(bm);

  EvolutionResult res;
  res.rho_final = std::move(rho);

  const auto w_ops = way_operators(b, s);
  res.w_plus = expect(inst.rho_d0, w_ops[0]).real();
  res.w_minus = expect(inst.rho_d0, w_ops[1]).real();

  res.c_up = expect(inst.rho_d0, b.vpm * dagger(b.vpp));
  res.c_down = -expect(inst.rho_d0, b.vmm * dagger(b.vmp));
  res.c = 0.5 * (1.0 + s) * res.c_up + 0.5 * (1.0 - s) * res.c_down;

  const Complex zy = -std::exp(Complex(0.0, -inst.phi)) * res.c;  // S_z + i S_y
  res.bloch_final = {res.w_plus - res.w_minus, zy.imag(), zy.real()};
  return res;
}

std::array<ComplexMatrix, 2> way_operators(const WwmBlocks& b, double s) {
  const double up = (1.0 + s) / 4.0;
  const double down = (1.0 - s) / 4.0;
  return {b.vpp * dagger(b.vpp) * up + b.vmp * dagger(b.vmp) * down,
          b.vpm * dagger(b.vpm) * up + b.vmm * dagger(b.vmm) * down};
}

std::array<ComplexMatrix, 2> branch_blocks(const WwmBlocks& b, int sign) {
  if (sign >= 0) return {b.vpp, b.vpm};
  return {b.vmp * Complex(-1.0), b.vmm};
}

ConditionalStates weighted_conditionals(const InterferometerInstance& inst) {
  const auto& b = inst.blocks;
  const double up = (1.0 + inst.prep.s) / 4.0;
  const double down = (1.0 - inst.prep.s) / 4.0;
  const auto& rho = inst.rho_d0;
  ConditionalStates out;
  out.rho_plus = dagger(b.vpp) * rho * b.vpp * up + dagger(b.vmp) * rho * b.vmp * down;
  out.rho_minus = dagger(b.vpm) * rho * b.vpm * up + dagger(b.vmm) * rho * b.vmm * down;
  out.w_plus = trace(out.rho_plus).real();
  out.w_minus = trace(out.rho_minus).real();
  return out;
}

ConditionalStates conditional_wwm_states(const InterferometerInstance& inst) {
  validate(inst);
  ConditionalStates out = weighted_conditionals(inst);
  if (out.w_plus < kDegenerateWeight || out.w_minus < kDegenerateWeight) {
    throw DualityError(ErrorKind::degenerate_branch,
                       "way probability below threshold; conditional marker state undefined");
  }
  out.rho_plus *= 1.0 / out.w_plus;
  out.rho_minus *= 1.0 / out.w_minus;
  return out;
}

double visibility(const EvolutionResult& res) { return std::abs(res.c); }

double predictability(const EvolutionResult& res) { return std::abs(res.w_plus - res.w_minus); }

}  // namespace wpd
