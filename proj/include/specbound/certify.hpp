#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "specbound/frame.hpp"
#include "specbound/graph.hpp"
#include "specbound/jacobi.hpp"
#include "specbound/sym_matrix.hpp"

namespace specbound::certify {

/// Slacks beyond -kSlackTol count as satisfied; |slack| <= kTightTol counts
/// as an equality case.
inline constexpr double kSlackTol = 1e-9;
inline constexpr double kTightTol = 1e-7;

/// One checked inequality. Sign conventions are fixed per check so that
/// slack >= 0 always means the bound holds.
struct BoundReport {
  std::string name;
  int n = 0;
  double quantity = 0.0;
  double bound = 0.0;
  double slack = 0.0;
  bool tight = false;
};

inline BoundReport make_report(std::string name, int n, double quantity, double bound,
                               double slack) {
  return BoundReport{std::move(name), n, quantity, bound, slack, std::abs(slack) <= kTightTol};
}

/// g(x) = 2/3 + (7/18)cos 2x - (1/18)cos 4x - |cos x|. Nonnegative for all
/// real x; this is the pointwise gap of the trig majorant of |cos|.
inline double trig_majorant_gap(double x) {
  return 2.0 / 3.0 + (7.0 / 18.0) * std::cos(2.0 * x) - (1.0 / 18.0) * std::cos(4.0 * x) -
         std::abs(std::cos(x));
}

/// Same gap through the closed form (1-t)(t+2)(2t-1)^2 / 9 with t = |cos x|,
/// which shows the zeros sit exactly at t in {1/2, 1}.
inline double trig_majorant_gap_factored(double x) {
  const double t = std::abs(std::cos(x));
  return (1.0 - t) * (t + 2.0) * (2.0 * t - 1.0) * (2.0 * t - 1.0) / 9.0;
}

/// Every quantity of the six-step chain that bounds tr(AQ) below by -2n/3,
/// with one signed slack per step (>= 0 means the step holds):
///   1. l1 <= (2/3)C^2 + (7/18)|S|^2 - (1/18)|T|^2
///   2. (C^2 + |S|^2)/2 <= n
///   3. l1 <= 4n/3
///   4. offdiag_abs <= 2n/3 - 1
///   5. offdiag_sum >= -1
///   6. neg_part >= -n/3
/// and finally tr(AQ) >= -2n/3.
///
/// The identity-gap fields compare the directly evaluated double sums
/// sum_{i,j} c_i c_j e^{2ik(theta_i - theta_j)} against |S|^2 and |T|^2; the
/// imaginary parts are evaluated rather than assumed zero.
struct ProofTrace {
  int n = 0;
  double C = 0.0;
  double S_re = 0.0, S_im = 0.0;
  double T_re = 0.0, T_im = 0.0;
  double l1 = 0.0;
  double offdiag_abs = 0.0;
  double offdiag_sum = 0.0;
  double neg_part = 0.0;
  double trace_value = 0.0;

  double l1_vs_trig_majorant = 0.0;
  double cs_gram_bound = 0.0;
  double l1_vs_4n_over_3 = 0.0;
  double offdiag_abs_bound = 0.0;
  double offdiag_sum_floor = 0.0;
  double neg_part_floor = 0.0;
  double final_slack = 0.0;

  double cos2_identity_gap = 0.0;
  double sin2_double_sum = 0.0;
  double cos4_identity_gap = 0.0;
  double sin4_double_sum = 0.0;

  std::array<std::pair<std::string_view, double>, 6> step_slacks() const {
    return {{{"l1_vs_trig_majorant", l1_vs_trig_majorant},
             {"cs_gram_bound", cs_gram_bound},
             {"l1_vs_4n_over_3", l1_vs_4n_over_3},
             {"offdiag_abs_bound", offdiag_abs_bound},
             {"offdiag_sum_floor", offdiag_sum_floor},
             {"neg_part_floor", neg_part_floor}}};
  }

  double min_step_slack() const {
    double m = l1_vs_trig_majorant;
    for (auto [name, s] : step_slacks()) m = std::min(m, s);
    return m;
  }
};

inline void require_theorem_class(const linalg::SymMatrix& a, const char* who) {
  const auto bad = a.theorem_class_violations(1);
  if (!bad.empty()) throw std::invalid_argument(std::string(who) + ": " + bad.front());
}

inline ProofTrace proof_trace(const linalg::SymMatrix& a, const linalg::RankTwoFrame& frame) {
  if (a.order() != frame.n) throw std::invalid_argument("proof_trace: order mismatch");
  require_theorem_class(a, "proof_trace");

  const int n = frame.n;
  ProofTrace t;
  t.n = n;
  for (int i = 0; i < n; ++i) {
    t.C += frame.c[i];
    t.S_re += frame.c[i] * std::cos(2.0 * frame.theta[i]);
    t.S_im += frame.c[i] * std::sin(2.0 * frame.theta[i]);
    t.T_re += frame.c[i] * std::cos(4.0 * frame.theta[i]);
    t.T_im += frame.c[i] * std::sin(4.0 * frame.theta[i]);
  }
  const double s_sq = t.S_re * t.S_re + t.S_im * t.S_im;
  const double t_sq = t.T_re * t.T_re + t.T_im * t.T_im;

  const linalg::Projection q = linalg::projection_of(frame);
  double diag_abs = 0.0;
  for (int i = 0; i < n; ++i) {
    diag_abs += std::abs(q(i, i));
    for (int j = i + 1; j < n; ++j) {
      const double v = q(i, j);
      t.offdiag_abs += std::abs(v);
      t.offdiag_sum += v;
      t.neg_part += std::min(v, 0.0);
    }
  }
  t.l1 = diag_abs + 2.0 * t.offdiag_abs;
  t.trace_value = linalg::trace_product(a, q);

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double w = frame.c[i] * frame.c[j];
      const double d = frame.theta[i] - frame.theta[j];
      t.cos2_identity_gap += w * std::cos(2.0 * d);
      t.sin2_double_sum += w * std::sin(2.0 * d);
      t.cos4_identity_gap += w * std::cos(4.0 * d);
      t.sin4_double_sum += w * std::sin(4.0 * d);
    }
  }
  t.cos2_identity_gap -= s_sq;
  t.cos4_identity_gap -= t_sq;

  const double majorant = (2.0 / 3.0) * t.C * t.C + (7.0 / 18.0) * s_sq - (1.0 / 18.0) * t_sq;
  t.l1_vs_trig_majorant = majorant - t.l1;
  t.cs_gram_bound = n - 0.5 * (t.C * t.C + s_sq);
  t.l1_vs_4n_over_3 = 4.0 * n / 3.0 - t.l1;
  t.offdiag_abs_bound = (2.0 * n / 3.0 - 1.0) - t.offdiag_abs;
  t.offdiag_sum_floor = t.offdiag_sum + 1.0;
  t.neg_part_floor = t.neg_part + n / 3.0;
  t.final_slack = t.trace_value + 2.0 * n / 3.0;
  return t;
}

inline linalg::Spectrum graph_spectrum(const graphs::Graph& g) {
  return linalg::eigenvalues_of(g.adjacency());
}

/// Frame spanned by the eigenvectors of the two smallest eigenvalues; the
/// minimizer in Ky Fan's principle, so tr(A Q) equals their sum.
inline linalg::RankTwoFrame bottom_pair_frame(const linalg::SymMatrix& a) {
  if (a.order() < 2) throw std::invalid_argument("bottom_pair_frame: order must be at least 2");
  const linalg::EigenDecomposition d = linalg::eigen_spectrum(a);
  return linalg::frame_from_columns(d.column(d.n - 2), d.column(d.n - 1));
}

/// mu_{n-1} + mu_n >= -2n/3 for theorem-class A, plus the single-eigenvalue
/// consequence mu_{n-1} >= -n/3.
struct WeightedTheoremReport {
  BoundReport pair_sum;
  BoundReport second_smallest;
};

inline WeightedTheoremReport verify_weighted_theorem(const linalg::SymMatrix& a) {
  if (a.order() < 2)
    throw std::invalid_argument("verify_weighted_theorem: order must be at least 2");
  require_theorem_class(a, "verify_weighted_theorem");
  const int n = a.order();
  const linalg::Spectrum s = linalg::eigenvalues_of(a);
  const double pair = s.eig(n - 1) + s.eig(n);
  const double pair_bound = -2.0 * n / 3.0;
  const double second = s.eig(n - 1);
  const double second_bound = -n / 3.0;
  return WeightedTheoremReport{
      make_report("mu_pair_sum", n, pair, pair_bound, pair - pair_bound),
      make_report("mu_second_smallest", n, second, second_bound, second - second_bound)};
}

/// lambda_{n-1}(H) >= -n/3 for every graph H.
inline BoundReport verify_corollary_lower(const graphs::Graph& h) {
  if (h.order() < 2)
    throw std::invalid_argument("verify_corollary_lower: order must be at least 2");
  const int n = h.order();
  const double q = graph_spectrum(h).eig(n - 1);
  const double bound = -n / 3.0;
  return make_report("corollary_lower", n, q, bound, q - bound);
}

/// lambda_3(G) + lambda_{n-1}(complement G) <= lambda_2(J - I) = -1.
inline BoundReport weyl_chain(const graphs::Graph& g) {
  if (g.order() < 3) throw std::invalid_argument("weyl_chain: order must be at least 3");
  const int n = g.order();
  const double q =
      graph_spectrum(g).eig(3) + graph_spectrum(graphs::complement(g)).eig(n - 1);
  return make_report("weyl_chain", n, q, -1.0, -1.0 - q);
}

/// lambda_3(G) <= n/3 - 1 (sharp), plus the weaker floor(n/3) comparison.
struct Lambda3Report {
  BoundReport sharp;
  BoundReport floor;
};

inline Lambda3Report verify_lambda3_bound(const graphs::Graph& g) {
  if (g.order() < 3)
    throw std::invalid_argument("verify_lambda3_bound: order must be at least 3");
  const int n = g.order();
  const double q = graph_spectrum(g).eig(3);
  const double sharp = n / 3.0 - 1.0;
  const double floor = std::floor(n / 3.0);
  return Lambda3Report{make_report("lambda3_sharp", n, q, sharp, sharp - q),
                       make_report("lambda3_floor", n, q, floor, floor - q)};
}

/// lambda_2(G) <= (n-2)/2.
inline BoundReport check_hong_lambda2(const graphs::Graph& g) {
  if (g.order() < 2)
    throw std::invalid_argument("check_hong_lambda2: order must be at least 2");
  const int n = g.order();
  const double q = graph_spectrum(g).eig(2);
  const double bound = (n - 2) / 2.0;
  return make_report("hong_lambda2", n, q, bound, bound - q);
}

}  // namespace specbound::certify
