#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wpd/random.hpp"

namespace wpd::oracle {

std::size_t count_below(const ComplexMatrix& m, double x) {
  const std::size_t n = m.dim();
  ComplexMatrix a = m;
  for (std::size_t i = 0; i < n; ++i) a(i, i) -= x;
  std::size_t negatives = 0;
  for (std::size_t k = 0; k < n; ++k) {
    double pivot = a(k, k).real();
    if (pivot == 0.0) pivot = -1e-300;
    if (pivot < 0.0) ++negatives;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex l = a(i, k) / pivot;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= l * std::conj(a(j, k));
    }
  }
  return negatives;
}

std::vector<double> bisection_eigenvalues(const ComplexMatrix& m, double tol) {
  const std::size_t n = m.dim();
  // Gershgorin bound
  double bound = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += std::abs(m(i, j));
    bound = std::max(bound, row);
  }
  std::vector<double> out;
  for (std::size_t k = 0; k < n; ++k) {
    // k-th smallest eigenvalue: smallest x with count_below(x) > k
    double lo = -bound - 1.0;
    double hi = bound + 1.0;
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;  // interval at machine resolution
      if (count_below(m, mid) > k) hi = mid;
      else lo = mid;
    }
    out.push_back(0.5 * (lo + hi));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

double singular_value_sum(const ComplexMatrix& m) {
  double sum = 0.0;
  for (double lambda : bisection_eigenvalues(dagger(m) * m, 1e-15))
    sum += std::sqrt(std::max(0.0, lambda));
  return sum;
}

double bloch_trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  auto bloch = [](const ComplexMatrix& r) {
    return std::array<double, 3>{2.0 * r(0, 1).real(), -2.0 * r(0, 1).imag(),
                                 (r(0, 0) - r(1, 1)).real()};
  };
  const auto ra = bloch(a);
  const auto rb = bloch(b);
  return 0.5 * std::hypot(ra[0] - rb[0], ra[1] - rb[1], ra[2] - rb[2]);
}

namespace {

// (1+sx)/4 A^+ r A + (1-sx)/4 B^+ r B + (-sz + i sy)/4 A^+ r B e^{-i phi}
//   - (sz + i sy)/4 B^+ r A e^{i phi}
ComplexMatrix expanded_branch(const ComplexMatrix& a, const ComplexMatrix& b,
                              const ComplexMatrix& rho, double phi) {
  const ComplexMatrix id = ComplexMatrix::identity(2);
  const Complex i(0.0, 1.0);
  const ComplexMatrix p_plus = (id + pauli::x()) * 0.25;
  const ComplexMatrix p_minus = (id - pauli::x()) * 0.25;
  const ComplexMatrix cross1 = (pauli::z() * -1.0 + pauli::y() * i) * 0.25;
  const ComplexMatrix cross2 = (pauli::z() + pauli::y() * i) * -0.25;
  return kron(p_plus, dagger(a) * rho * a) + kron(p_minus, dagger(b) * rho * b) +
         kron(cross1, dagger(a) * rho * b) * std::exp(-i * phi) +
         kron(cross2, dagger(b) * rho * a) * std::exp(i * phi);
}

}  // namespace

ComplexMatrix expanded_final_state(const InterferometerInstance& inst) {
  const auto& b = inst.blocks;
  const double s = inst.prep.s;
  const ComplexMatrix up = expanded_branch(b.vpp, b.vpm, inst.rho_d0, inst.phi);
  const ComplexMatrix down = expanded_branch(b.vmp * -1.0, b.vmm, inst.rho_d0, inst.phi);
  return up * (0.5 * (1.0 + s)) + down * (0.5 * (1.0 - s));
}

InterferometerInstance stringency_instance(std::uint64_t seed, std::uint64_t stream) {
  Rng rng(seed, stream);
  const double angle = rng.uniform(0.05, std::numbers::pi / 2.0 - 0.05);
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const ComplexMatrix x1 = haar_random_unitary(2, rng);
  const ComplexMatrix x2 = haar_random_unitary(2, rng);
  const ComplexMatrix w1 = haar_random_unitary(2, rng);
  const ComplexMatrix w2 = haar_random_unitary(2, rng);

  ComplexMatrix left(4), mid(4), right(4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      left(i, j) = x1(i, j);
      left(2 + i, 2 + j) = x2(i, j);
      right(i, j) = w1(i, j);
      right(2 + i, 2 + j) = w2(i, j);
    }
  for (std::size_t i = 0; i < 2; ++i) {
    mid(i, i) = c;
    mid(i, 2 + i) = s;
    mid(2 + i, i) = -s;
    mid(2 + i, 2 + i) = c;
  }
  InterferometerInstance inst;
  inst.prep.s = rng.uniform() < 0.5 ? 1.0 : -1.0;
  inst.phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
  inst.blocks = from_global_unitary(left * mid * right);
  inst.rho_d0 = random_density(2, 2, rng);
  return inst;
}

}  // namespace wpd::oracle
