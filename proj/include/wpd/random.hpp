#pragma once

// Reproducible random test instances.
//
// The generator is SplitMix64 used in counter mode, so every stream is fully
// determined by a (seed, stream index) pair and can be regenerated in any
// language:
//
//   mix(z):   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//             z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//             return z ^ (z >> 31)
//   stream(seed, index).state = mix(seed + (index + 1) * 0x9E3779B97F4A7C15)
//   next():   state += 0x9E3779B97F4A7C15; return mix(state)
//   uniform() = (next() >> 11) * 2^-53                      in [0, 1)
//   normal()  = sqrt(-2 ln(1 - u1)) * cos(2 pi u2)          one draw per call
//
// Complex Ginibre entries are (normal() + i normal()) / sqrt(2), real part
// drawn first, matrices filled row-major.

#include <cstdint>

#include "wpd/linalg.hpp"

namespace wpd {

class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next() noexcept;
  double uniform() noexcept;
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
  double normal() noexcept;
  Complex complex_normal() noexcept;
  /// Uniform integer in [lo, hi].
  std::uint64_t integer(std::uint64_t lo, std::uint64_t hi) noexcept;

  static std::uint64_t mix(std::uint64_t z) noexcept;

 private:
  std::uint64_t state_;
};

/// Haar-distributed unitary: Ginibre matrix orthonormalized column by column
/// (Gram-Schmidt gives a positive real R diagonal).
ComplexMatrix haar_random_unitary(std::size_t dim, Rng& rng);
ComplexMatrix haar_random_unitary(std::size_t dim, std::uint64_t seed);

/// rho = G G^dagger / tr(G G^dagger) with G a dim x rank Ginibre matrix.
/// Throws DualityError(out_of_range) unless 1 <= rank <= dim.
ComplexMatrix random_density(std::size_t dim, std::size_t rank, Rng& rng);
ComplexMatrix random_density(std::size_t dim, std::size_t rank, std::uint64_t seed);

/// Random Hermitian matrix with Ginibre-distributed entries (test helper).
ComplexMatrix random_hermitian(std::size_t dim, Rng& rng);

}  // namespace wpd
