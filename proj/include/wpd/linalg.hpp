#pragma once

// Dense complex linear algebra for the small operators used throughout the
// library (dimensions up to a few dozen). Storage is row-major.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace wpd {

using Complex = std::complex<double>;

/// Construction-time Hermiticity tolerance.
inline constexpr double kHermitianTol = 1e-12;
/// Tolerance used when validating unitarity and decompositions.
inline constexpr double kValidationTol = 1e-10;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  /// Row-wise literal, e.g. {{1, 0}, {0, -1}}. Rows must form a square.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const Complex> diag);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  std::span<const Complex> entries() const noexcept { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, Complex scale);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// Matrix product; throws DualityError(dimension_mismatch) on unequal dims.
ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix dagger(const ComplexMatrix& a);
/// Kronecker product. The index of `a` is the slow (outer) index.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

Complex trace(const ComplexMatrix& a);
/// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs(const ComplexMatrix& a);
bool is_hermitian(const ComplexMatrix& a, double tol = kHermitianTol);
bool is_unitary(const ComplexMatrix& a, double tol = kValidationTol);

/// Trace over the inner factor of an (outer_dim * inner) space.
ComplexMatrix partial_trace_inner(const ComplexMatrix& m, std::size_t outer_dim);
/// Trace over the outer factor of an (outer_dim * inner) space.
ComplexMatrix partial_trace_outer(const ComplexMatrix& m, std::size_t outer_dim);

/// Block (row_block, col_block) of size block_dim.
ComplexMatrix block(const ComplexMatrix& m, std::size_t block_dim, std::size_t row_block,
                    std::size_t col_block);

struct HermitianEigen {
  std::vector<double> eigenvalues;  // descending
  ComplexMatrix eigenvectors;       // columns
};

/// Spectral decomposition by cyclic complex Jacobi rotations.
///
/// Eigenvalues come back in descending order. Each eigenvector column is
/// rephased so that its first component with modulus above 1e-12 is real and
/// positive, which makes the output deterministic for a given input.
/// Throws DualityError(not_hermitian) when the input fails the 1e-12 check.
HermitianEigen hermitian_eigen(const ComplexMatrix& m);

/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const ComplexMatrix& m);

/// True if m is Hermitian, has eigenvalues >= -1e-10 and unit trace within 1e-12.
bool is_density_matrix(const ComplexMatrix& m);
/// Throws DualityError(invalid_state) with `what` in the message when m is not a density matrix.
void require_density_matrix(const ComplexMatrix& m, const char* what);

double purity(const ComplexMatrix& rho);

namespace pauli {
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

/// exp(-i * angle/2 * sigma) for a Pauli matrix sigma (closed form).
ComplexMatrix pauli_rotation(const ComplexMatrix& sigma, double angle);

}  // namespace wpd
