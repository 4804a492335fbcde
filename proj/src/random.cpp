#include "wpd/random.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "wpd/error.hpp"

namespace wpd {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t Rng::mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : state_(mix(seed + (stream + 1) * kGolden)) {}

std::uint64_t Rng::next() noexcept {
  state_ += kGolden;
  return mix(state_);
}

double Rng::uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::normal() noexcept {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::complex_normal() noexcept {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) / std::numbers::sqrt2;
}

std::uint64_t Rng::integer(std::uint64_t lo, std::uint64_t hi) noexcept {
  const std::uint64_t span = hi - lo + 1;
  return lo + static_cast<std::uint64_t>(uniform() * static_cast<double>(span)) % span;
}

ComplexMatrix haar_random_unitary(std::size_t dim, Rng& rng) {
  if (dim == 0) throw DualityError(ErrorKind::out_of_range, "haar_random_unitary: dim must be >= 1");
  std::vector<std::vector<Complex>> cols(dim, std::vector<Complex>(dim));
  ComplexMatrix g(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = rng.complex_normal();
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t i = 0; i < dim; ++i) cols[j][i] = g(i, j);

  // Modified Gram-Schmidt, two passes for orthogonality at machine precision.
  for (std::size_t j = 0; j < dim; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        Complex proj{};
        for (std::size_t i = 0; i < dim; ++i) proj += std::conj(cols[k][i]) * cols[j][i];
        for (std::size_t i = 0; i < dim; ++i) cols[j][i] -= proj * cols[k][i];
      }
    }
    double norm = 0.0;
    for (const auto& x : cols[j]) norm += std::norm(x);
    norm = std::sqrt(norm);
    for (auto& x : cols[j]) x /= norm;
  }

  ComplexMatrix q(dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t i = 0; i < dim; ++i) q(i, j) = cols[j][i];
  return q;
}

ComplexMatrix haar_random_unitary(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  return haar_random_unitary(dim, rng);
}

ComplexMatrix random_density(std::size_t dim, std::size_t rank, Rng& rng) {
  if (dim == 0 || rank == 0 || rank > dim) {
    throw DualityError(ErrorKind::out_of_range, "random_density: rank " + std::to_string(rank) +
                                                    " not in [1, " + std::to_string(dim) + "]");
  }
  std::vector<Complex> g(dim * rank);
  for (auto& x : g) x = rng.complex_normal();
  ComplexMatrix rho(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      Complex sum{};
      for (std::size_t k = 0; k < rank; ++k) sum += g[i * rank + k] * std::conj(g[j * rank + k]);
      rho(i, j) = sum;
    }
  const double tr = trace(rho).real();
  rho *= 1.0 / tr;
  // Exact Hermiticity after scaling.
  for (std::size_t i = 0; i < dim; ++i) {
    rho(i, i) = rho(i, i).real();
    for (std::size_t j = i + 1; j < dim; ++j) rho(j, i) = std::conj(rho(i, j));
  }
  return rho;
}

ComplexMatrix random_density(std::size_t dim, std::size_t rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(dim, rank, rng);
}

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = rng.normal();
    for (std::size_t j = i + 1; j < dim; ++j) {
      m(i, j) = rng.complex_normal();
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

}  // namespace wpd
