#pragma once

#include <span>
#include <vector>

namespace ccvms::spectral {

/// Result of a symmetric eigenvalue run.
struct SpectrumResult {
  std::vector<double> eigenvalues;  // ascending
  double residual = 0.0;            // max |M v - lambda v| over returned pairs
  int iterations = 0;               // Jacobi sweeps used
};

/// Eigenvalues of a symmetric matrix (row-major, n x n) by cyclic Jacobi
/// with threshold sweeps. Input must be symmetric within tol; throws
/// ContractError otherwise and ConvergenceError if 100 sweeps do not push the
/// off-diagonal Frobenius norm below tol.
SpectrumResult symmetric_eigenvalues(std::span<const double> m, int n, double tol);

/// sqrt of the largest eigenvalue of m^T m.
double spectral_norm(std::span<const double> m, int n);

/// True iff m is symmetric within tol and its smallest eigenvalue is >= -tol.
/// Non-symmetric input yields false rather than an error.
bool loewner_positive(std::span<const double> m, int n, double tol);

}  // namespace ccvms::spectral
