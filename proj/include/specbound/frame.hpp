#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "specbound/rng.hpp"
#include "specbound/sym_matrix.hpp"

namespace specbound::linalg {

/// Two orthonormal columns stored row-wise (r[2i], r[2i+1]) plus the polar
/// form of each row: c[i] = |row i|, theta[i] = arg(row i) in (-pi, pi],
/// with theta[i] = 0 whenever c[i] = 0.
///
/// Orthonormality forces sum c_i^2 = 2 and sum c_i^2 e^{2 i theta_i} = 0.
struct RankTwoFrame {
  int n = 0;
  std::vector<double> r;      // n x 2 row-major
  std::vector<double> c;      // row norms
  std::vector<double> theta;  // row angles
};

/// Rank-two orthogonal projection Q = R R^T, stored dense symmetric.
struct Projection {
  int n = 0;
  std::vector<double> q;  // row-major n x n

  double operator()(int i, int j) const { return q[static_cast<std::size_t>(i) * n + j]; }
};

struct FrameInvariants {
  double sum_c_sq;    // should be 2
  double moment_re;   // sum c_i^2 cos(2 theta_i), should be 0
  double moment_im;   // sum c_i^2 sin(2 theta_i), should be 0
};

namespace detail {

inline constexpr double kFrameRankTol = 1e-10;

inline void polar_rows(RankTwoFrame& f) {
  f.c.resize(static_cast<std::size_t>(f.n));
  f.theta.resize(static_cast<std::size_t>(f.n));
  for (int i = 0; i < f.n; ++i) {
    const double x = f.r[2 * static_cast<std::size_t>(i)];
    const double y = f.r[2 * static_cast<std::size_t>(i) + 1];
    f.c[i] = std::hypot(x, y);
    if (f.c[i] == 0.0) {
      f.theta[i] = 0.0;
    } else {
      double t = std::atan2(y, x);
      if (t == -std::numbers::pi) t = std::numbers::pi;
      f.theta[i] = t;
    }
  }
}

}  // namespace detail

/// Builds a frame from two spanning columns by Gram-Schmidt (with one
/// re-orthogonalization pass). Throws std::invalid_argument if the columns
/// have length < 2, lengths differ, or their span has rank < 2.
inline RankTwoFrame frame_from_columns(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("frame columns differ in length");
  const int n = static_cast<int>(x.size());
  if (n < 2) throw std::invalid_argument("frame needs at least 2 rows");

  double nx = 0.0;
  for (double v : x) nx += v * v;
  nx = std::sqrt(nx);
  if (nx <= detail::kFrameRankTol) throw std::invalid_argument("frame rank < 2: first column is numerically zero");

  std::vector<double> u(x);
  for (double& v : u) v /= nx;

  std::vector<double> w(y);
  for (int pass = 0; pass < 2; ++pass) {
    double dot = 0.0;
    for (int i = 0; i < n; ++i) dot += u[i] * w[i];
    for (int i = 0; i < n; ++i) w[i] -= dot * u[i];
  }
  double ny = 0.0;
  for (double v : y) ny += v * v;
  ny = std::sqrt(ny);
  double nw = 0.0;
  for (double v : w) nw += v * v;
  nw = std::sqrt(nw);
  if (nw <= detail::kFrameRankTol * std::max(1.0, ny))
    throw std::invalid_argument("frame rank < 2: columns are numerically dependent");
  for (double& v : w) v /= nw;

  RankTwoFrame f;
  f.n = n;
  f.r.resize(2 * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    f.r[2 * static_cast<std::size_t>(i)] = u[i];
    f.r[2 * static_cast<std::size_t>(i) + 1] = w[i];
  }
  detail::polar_rows(f);
  return f;
}

/// Frame spanned by two iid standard Gaussian columns.
inline RankTwoFrame random_frame(int n, Rng& rng) {
  if (n < 2) throw std::invalid_argument("random_frame: n must be at least 2");
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<double> x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
    for (double& v : x) v = rng.normal();
    for (double& v : y) v = rng.normal();
    try {
      return frame_from_columns(x, y);
    } catch (const std::invalid_argument&) {
      // degenerate draw, redraw
    }
  }
  throw std::runtime_error("random_frame: failed to draw a rank-2 frame");
}

inline FrameInvariants frame_invariants(const RankTwoFrame& f) {
  FrameInvariants inv{0.0, 0.0, 0.0};
  for (int i = 0; i < f.n; ++i) {
    const double c2 = f.c[i] * f.c[i];
    inv.sum_c_sq += c2;
    inv.moment_re += c2 * std::cos(2.0 * f.theta[i]);
    inv.moment_im += c2 * std::sin(2.0 * f.theta[i]);
  }
  return inv;
}

/// Q = R R^T; q_ij = c_i c_j cos(theta_i - theta_j) in polar form.
inline Projection projection_of(const RankTwoFrame& f) {
  Projection p;
  p.n = f.n;
  p.q.assign(static_cast<std::size_t>(f.n) * f.n, 0.0);
  for (int i = 0; i < f.n; ++i) {
    for (int j = i; j < f.n; ++j) {
      const double v = f.r[2 * static_cast<std::size_t>(i)] * f.r[2 * static_cast<std::size_t>(j)] +
                       f.r[2 * static_cast<std::size_t>(i) + 1] * f.r[2 * static_cast<std::size_t>(j) + 1];
      p.q[static_cast<std::size_t>(i) * f.n + j] = v;
      p.q[static_cast<std::size_t>(j) * f.n + i] = v;
    }
  }
  return p;
}

/// tr(AQ) for symmetric A and Q, accumulated as diagonal + twice the upper
/// triangle so the result is exactly symmetric in the pair order.
inline double trace_product(const SymMatrix& a, const Projection& q) {
  if (a.order() != q.n) throw std::invalid_argument("trace_product: order mismatch");
  const int n = a.order();
  double diag = 0.0, upper = 0.0;
  for (int i = 0; i < n; ++i) {
    diag += a(i, i) * q(i, i);
    for (int j = i + 1; j < n; ++j) upper += a(i, j) * q(i, j);
  }
  return diag + 2.0 * upper;
}

}  // namespace specbound::linalg
