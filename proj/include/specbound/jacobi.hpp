#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "specbound/sym_matrix.hpp"

namespace specbound::linalg {

namespace detail {

/// Cyclic Jacobi on a row-major n x n symmetric matrix, in place. If v is
/// non-null the rotations are accumulated there (v becomes orthogonal with
/// eigenvector columns). Sweeps until the off-diagonal Frobenius norm drops
/// below 1e-12 * (1 + ||A||_F), capped at 100 sweeps. Returns sweeps used.
inline int jacobi_inplace(double* a, double* v, int n) {
  if (v) {
    std::fill(v, v + static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;
  }
  double fro = 0.0;
  for (std::size_t k = 0; k < static_cast<std::size_t>(n) * n; ++k) fro += a[k] * a[k];
  const double tol = 1e-12 * (1.0 + std::sqrt(fro));

  int sweep = 0;
  for (; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += 2.0 * a[i * n + j] * a[i * n + j];
    if (std::sqrt(off) <= tol) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double tau = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        a[p * n + p] -= t * apq;
        a[q * n + q] += t * apq;
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[p * n + k] = a[k * n + p];
          a[k * n + q] = s * akp + c * akq;
          a[q * n + k] = a[k * n + q];
        }
        if (v) {
          for (int k = 0; k < n; ++k) {
            const double vkp = v[k * n + p];
            const double vkq = v[k * n + q];
            v[k * n + p] = c * vkp - s * vkq;
            v[k * n + q] = s * vkp + c * vkq;
          }
        }
      }
    }
  }
  return sweep;
}

/// Descending order of the diagonal of a converged Jacobi matrix; stable, so
/// exact ties keep their diagonal positions.
inline std::vector<int> descending_diag_order(const double* a, int n) {
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int x, int y) { return a[x * n + x] > a[y * n + y]; });
  return idx;
}

}  // namespace detail

/// Full spectral decomposition A = V diag(eig) V^T with V's column k the unit
/// eigenvector for spectrum.eig(k+1).
struct EigenDecomposition {
  int n;
  Spectrum spectrum;
  std::vector<double> vectors;  // row-major n x n

  double vec(int i, int k) const { return vectors[static_cast<std::size_t>(i) * n + k]; }

  std::vector<double> column(int k) const {
    std::vector<double> col(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) col[i] = vec(i, k);
    return col;
  }
};

inline EigenDecomposition eigen_spectrum(const SymMatrix& a) {
  const int n = a.order();
  std::vector<double> w(a.data());
  std::vector<double> v(static_cast<std::size_t>(n) * n);
  detail::jacobi_inplace(w.data(), v.data(), n);
  const std::vector<int> order = detail::descending_diag_order(w.data(), n);

  std::vector<double> values(static_cast<std::size_t>(n));
  std::vector<double> vectors(static_cast<std::size_t>(n) * n);
  for (int k = 0; k < n; ++k) {
    values[k] = w[static_cast<std::size_t>(order[k]) * n + order[k]];
    for (int i = 0; i < n; ++i)
      vectors[static_cast<std::size_t>(i) * n + k] = v[static_cast<std::size_t>(i) * n + order[k]];
  }
  return EigenDecomposition{n, Spectrum(std::move(values)), std::move(vectors)};
}

/// Eigenvalues only; skips eigenvector accumulation.
inline Spectrum eigenvalues_of(const SymMatrix& a) {
  const int n = a.order();
  std::vector<double> w(a.data());
  detail::jacobi_inplace(w.data(), nullptr, n);
  std::vector<double> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) values[i] = w[static_cast<std::size_t>(i) * n + i];
  std::sort(values.begin(), values.end(), std::greater<>());
  return Spectrum(std::move(values));
}

/// Sum of the two smallest eigenvalues. By Ky Fan's minimum principle this
/// equals min over rank-2 orthogonal projections Q of tr(AQ).
inline double kyfan_pair_min(const SymMatrix& a) {
  if (a.order() < 2) throw std::invalid_argument("kyfan_pair_min: order must be at least 2");
  const Spectrum s = eigenvalues_of(a);
  return s.eig(s.order() - 1) + s.eig(s.order());
}

}  // namespace specbound::linalg
