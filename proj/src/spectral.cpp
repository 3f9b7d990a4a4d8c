#include "spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "errors.hpp"
#include "numeric.hpp"

namespace ccvms::spectral {

namespace {

constexpr int kMaxSweeps = 100;

double max_asymmetry(std::span<const double> m, int n) {
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      worst = std::max(worst, std::fabs(m[i * n + j] - m[j * n + i]));
  return worst;
}

double off_diagonal_frobenius(const std::vector<double>& a, int n) {
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) sum += a[i * n + j] * a[i * n + j];
  return std::sqrt(sum);
}

// One Jacobi rotation zeroing a[p][q], accumulated into v.
void rotate(std::vector<double>& a, std::vector<double>& v, int n, int p, int q) {
  const double apq = a[p * n + q];
  if (apq == 0.0) return;
  const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
  double t;
  if (std::fabs(theta) > 1e150) {
    t = 1.0 / (2.0 * theta);  // avoid theta^2 overflow
  } else {
    t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const double tau = s / (1.0 + c);

  const double app = a[p * n + p];
  const double aqq = a[q * n + q];
  a[p * n + p] = app - t * apq;
  a[q * n + q] = aqq + t * apq;
  a[p * n + q] = 0.0;
  a[q * n + p] = 0.0;
  for (int k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const double akp = a[k * n + p];
    const double akq = a[k * n + q];
    a[k * n + p] = akp - s * (akq + tau * akp);
    a[p * n + k] = a[k * n + p];
    a[k * n + q] = akq + s * (akp - tau * akq);
    a[q * n + k] = a[k * n + q];
  }
  for (int k = 0; k < n; ++k) {
    const double vkp = v[k * n + p];
    const double vkq = v[k * n + q];
    v[k * n + p] = vkp - s * (vkq + tau * vkp);
    v[k * n + q] = vkq + s * (vkp - tau * vkq);
  }
}

}  // namespace

SpectrumResult symmetric_eigenvalues(std::span<const double> m, int n, double tol) {
  if (n <= 0 || static_cast<int>(m.size()) != n * n)
    throw ContractError("symmetric_eigenvalues: expected a square matrix");
  if (tol <= 0.0) throw ContractError("symmetric_eigenvalues: tolerance must be positive");
  const double asym = max_asymmetry(m, n);
  if (asym > tol)
    throw ContractError("symmetric_eigenvalues: input is not symmetric (max |m - m^T| = " +
                        numeric::num_to_string(asym) + ")");

  std::vector<double> a(m.begin(), m.end());
  // symmetrize exactly so rotations preserve symmetry bit-for-bit
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double avg = 0.5 * (a[i * n + j] + a[j * n + i]);
      a[i * n + j] = avg;
      a[j * n + i] = avg;
    }

  std::vector<double> v(n * n, 0.0);
  for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;

  // absolute target for modest matrices, relative once entries dwarf 1
  double fro = 0.0;
  for (double x : a) fro += x * x;
  const double target = tol * std::max(1.0, std::sqrt(fro));

  int sweeps = 0;
  while (sweeps < kMaxSweeps && off_diagonal_frobenius(a, n) > target) {
    // early sweeps skip entries far below the mean off-diagonal mass
    double offsum = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) offsum += std::fabs(a[i * n + j]);
    const double thresh = (sweeps < 3) ? 0.2 * offsum / (n * n) : 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q)
        if (std::fabs(a[p * n + q]) > thresh) rotate(a, v, n, p, q);
    ++sweeps;
  }

  SpectrumResult out;
  out.iterations = sweeps;

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a[i * n + i] < a[j * n + j]; });

  out.eigenvalues.reserve(n);
  for (int i : order) out.eigenvalues.push_back(a[i * n + i]);

  // residual against the original matrix
  double residual = 0.0;
  for (int idx = 0; idx < n; ++idx) {
    const int col = order[idx];
    const double lambda = out.eigenvalues[idx];
    for (int i = 0; i < n; ++i) {
      double mv = 0.0;
      for (int j = 0; j < n; ++j) mv += m[i * n + j] * v[j * n + col];
      residual = std::max(residual, std::fabs(mv - lambda * v[i * n + col]));
    }
  }
  out.residual = residual;

  if (off_diagonal_frobenius(a, n) > target)
    throw ConvergenceError("symmetric_eigenvalues: no convergence after " +
                               std::to_string(kMaxSweeps) + " sweeps",
                           residual);
  return out;
}

double spectral_norm(std::span<const double> m, int n) {
  if (n <= 0 || static_cast<int>(m.size()) != n * n)
    throw ContractError("spectral_norm: expected a square matrix");
  std::vector<double> mtm(n * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double sum = 0.0;
      for (int k = 0; k < n; ++k) sum += m[k * n + i] * m[k * n + j];
      mtm[i * n + j] = sum;
    }
  const auto spec = symmetric_eigenvalues(mtm, n, 1e-12);
  const double top = std::max(0.0, spec.eigenvalues.back());
  return std::sqrt(top);
}

bool loewner_positive(std::span<const double> m, int n, double tol) {
  if (n <= 0 || static_cast<int>(m.size()) != n * n) return false;
  if (max_asymmetry(m, n) > tol) return false;
  std::vector<double> sym(m.begin(), m.end());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double avg = 0.5 * (sym[i * n + j] + sym[j * n + i]);
      sym[i * n + j] = avg;
      sym[j * n + i] = avg;
    }
  const auto spec = symmetric_eigenvalues(sym, n, 1e-12);
  return spec.eigenvalues.front() >= -tol;
}

}  // namespace ccvms::spectral
