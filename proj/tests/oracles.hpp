#pragma once

// Independent reference computations used only by the tests.

#include <vector>

#include "wpd/interferometer.hpp"
#include "wpd/linalg.hpp"

namespace wpd::oracle {

/// Number of eigenvalues of Hermitian m strictly below x, from the inertia of
/// the LDL^dagger factorization of m - x I.
std::size_t count_below(const ComplexMatrix& m, double x);

/// Eigenvalues (descending) of Hermitian m, each located by bisection on the
/// eigenvalue counting function to absolute precision tol.
std::vector<double> bisection_eigenvalues(const ComplexMatrix& m, double tol = 1e-13);

/// Sum of singular values: square roots of the bisection eigenvalues of m^dagger m.
double singular_value_sum(const ComplexMatrix& m);

/// Trace distance (1/2)||a - b||_1 of two 2x2 density matrices from Bloch vectors.
double bloch_trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Final joint state assembled term by term from the closed-form expansion
/// (upper-inversion part, plus the lower part via V++ -> -V-+, V+- -> V--).
ComplexMatrix expanded_final_state(const InterferometerInstance& inst);

/// Random instance with two-level marker, s = +-1 and way operators
/// proportional to the identity: U = diag(X1, X2) [[c, s], [-s, c]] diag(W1, W2)
/// with scalar c, s.
InterferometerInstance stringency_instance(std::uint64_t seed, std::uint64_t stream);

}  // namespace wpd::oracle
