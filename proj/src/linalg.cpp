#include "wpd/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "wpd/error.hpp"

namespace wpd {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::dimension_mismatch: return "dimension mismatch";
    case ErrorKind::not_hermitian: return "not hermitian";
    case ErrorKind::invalid_state: return "invalid state";
    case ErrorKind::not_unitary: return "not unitary";
    case ErrorKind::out_of_range: return "out of range";
    case ErrorKind::degenerate_branch: return "degenerate branch";
    case ErrorKind::parse_error: return "parse error";
  }
  return "unknown";
}

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DualityError(ErrorKind::dimension_mismatch,
                       std::string(op) + ": " + std::to_string(a.dim()) + " vs " +
                           std::to_string(b.dim()));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim_ * dim_) {
    throw DualityError(ErrorKind::dimension_mismatch,
                       "expected " + std::to_string(dim_ * dim_) + " entries, got " +
                           std::to_string(data_.size()));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) {
      throw DualityError(ErrorKind::dimension_mismatch, "matrix literal is not square");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "add");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "subtract");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& x : data_) x *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex scale, ComplexMatrix a) { return a *= scale; }
ComplexMatrix operator*(ComplexMatrix a, Complex scale) { return a *= scale; }
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return mat_mul(a, b); }

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "mat_mul");
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return out;
}

Complex trace(const ComplexMatrix& a) {
  Complex t{};
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double worst = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) worst = std::max(worst, std::abs(ea[i] - eb[i]));
  return worst;
}

double max_abs(const ComplexMatrix& a) {
  double worst = 0.0;
  for (const auto& x : a.entries()) worst = std::max(worst, std::abs(x));
  return worst;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j)
      if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
  return true;
}

bool is_unitary(const ComplexMatrix& a, double tol) {
  return max_abs_diff(dagger(a) * a, ComplexMatrix::identity(a.dim())) <= tol;
}

ComplexMatrix partial_trace_inner(const ComplexMatrix& m, std::size_t outer_dim) {
  if (outer_dim == 0 || m.dim() % outer_dim != 0) {
    throw DualityError(ErrorKind::dimension_mismatch, "partial trace: outer dim does not divide");
  }
  const std::size_t inner = m.dim() / outer_dim;
  ComplexMatrix out(outer_dim);
  for (std::size_t i = 0; i < outer_dim; ++i)
    for (std::size_t j = 0; j < outer_dim; ++j)
      for (std::size_t k = 0; k < inner; ++k) out(i, j) += m(i * inner + k, j * inner + k);
  return out;
}

ComplexMatrix partial_trace_outer(const ComplexMatrix& m, std::size_t outer_dim) {
  if (outer_dim == 0 || m.dim() % outer_dim != 0) {
    throw DualityError(ErrorKind::dimension_mismatch, "partial trace: outer dim does not divide");
  }
  const std::size_t inner = m.dim() / outer_dim;
  ComplexMatrix out(inner);
  for (std::size_t i = 0; i < outer_dim; ++i)
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t l = 0; l < inner; ++l) out(k, l) += m(i * inner + k, i * inner + l);
  return out;
}

ComplexMatrix block(const ComplexMatrix& m, std::size_t block_dim, std::size_t row_block,
                    std::size_t col_block) {
  if ((row_block + 1) * block_dim > m.dim() || (col_block + 1) * block_dim > m.dim()) {
    throw DualityError(ErrorKind::dimension_mismatch, "block index outside matrix");
  }
  ComplexMatrix out(block_dim);
  for (std::size_t i = 0; i < block_dim; ++i)
    for (std::size_t j = 0; j < block_dim; ++j)
      out(i, j) = m(row_block * block_dim + i, col_block * block_dim + j);
  return out;
}

namespace {

double off_diagonal_norm_sq(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) sum += std::norm(a(i, j));
  return sum;
}

double frobenius_sq(const ComplexMatrix& a) {
  double sum = 0.0;
  for (const auto& x : a.entries()) sum += std::norm(x);
  return sum;
}

// Annihilates a(p, q) with a unitary rotation J acting on the (p, q) plane:
// a <- J^dagger a J, v <- v J.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = apq / mag;  // e^{i alpha}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * mag);
  double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  // J = diag(1, e^{-i alpha}) * [[c, s], [-s, c]]
  const Complex jpp = c;
  const Complex jpq = s;
  const Complex jqp = -s * std::conj(phase);
  const Complex jqq = c * std::conj(phase);

  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * jpp + akq * jqp;
    a(k, q) = akp * jpq + akq * jqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * jpp + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * jqq;
  }
}

}  // namespace

HermitianEigen hermitian_eigen(const ComplexMatrix& m) {
  if (!is_hermitian(m)) {
    throw DualityError(ErrorKind::not_hermitian, "hermitian_eigen input");
  }
  const std::size_t n = m.dim();
  ComplexMatrix a = m;
  // Symmetrize exactly so the rotations see a Hermitian matrix.
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = std::max(frobenius_sq(a), 1e-300);
  constexpr int kMaxSweeps = 64;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm_sq(a) <= 1e-32 * scale) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t src = order[col];
    out.eigenvalues[col] = a(src, src).real();
    Complex phase = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double mag = std::abs(v(k, src));
      if (mag > 1e-12) {
        phase = std::conj(v(k, src)) / mag;
        break;
      }
    }
    for (std::size_t k = 0; k < n; ++k) out.eigenvectors(k, col) = v(k, src) * phase;
  }
  return out;
}

double trace_norm(const ComplexMatrix& m) {
  const auto eig = hermitian_eigen(m);
  double sum = 0.0;
  for (double lambda : eig.eigenvalues) sum += std::abs(lambda);
  return sum;
}

bool is_density_matrix(const ComplexMatrix& m) {
  if (m.dim() == 0 || !is_hermitian(m)) return false;
  if (std::abs(trace(m) - 1.0) > 1e-12) return false;
  const auto eig = hermitian_eigen(m);
  return eig.eigenvalues.back() >= -kValidationTol;
}

void require_density_matrix(const ComplexMatrix& m, const char* what) {
  if (!is_density_matrix(m)) {
    throw DualityError(ErrorKind::invalid_state, std::string(what) + " is not a density matrix");
  }
}

double purity(const ComplexMatrix& rho) { return trace(rho * rho).real(); }

namespace pauli {
ComplexMatrix x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix y() { return {{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}}; }
ComplexMatrix z() { return {{1.0, 0.0}, {0.0, -1.0}}; }
}  // namespace pauli

ComplexMatrix pauli_rotation(const ComplexMatrix& sigma, double angle) {
  // sigma^2 = I, so exp(-i a sigma) = cos(a) I - i sin(a) sigma.
  const double half = 0.5 * angle;
  return ComplexMatrix::identity(sigma.dim()) * Complex(std::cos(half), 0.0) +
         sigma * Complex(0.0, -std::sin(half));
}

}  // namespace wpd
