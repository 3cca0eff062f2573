#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "specbound/certify.hpp"
#include "specbound/frame.hpp"
#include "specbound/graph.hpp"
#include "specbound/jacobi.hpp"
#include "specbound/rng.hpp"

using specbound::Rng;
using specbound::linalg::frame_from_columns;
using specbound::linalg::frame_invariants;
using specbound::linalg::Projection;
using specbound::linalg::projection_of;
using specbound::linalg::random_frame;
using specbound::linalg::RankTwoFrame;
using specbound::linalg::SymMatrix;
using specbound::linalg::trace_product;

TEST(Frame, IdentityColumns) {
  const RankTwoFrame f = frame_from_columns({1.0, 0.0}, {0.0, 1.0});
  EXPECT_DOUBLE_EQ(f.c[0], 1.0);
  EXPECT_DOUBLE_EQ(f.c[1], 1.0);
  EXPECT_DOUBLE_EQ(f.theta[0], 0.0);
  EXPECT_DOUBLE_EQ(f.theta[1], std::numbers::pi / 2.0);

  const Projection q = projection_of(f);
  EXPECT_DOUBLE_EQ(q(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(q(1, 1), 1.0);
  EXPECT_DOUBLE_EQ(q(0, 1), 0.0);
}

TEST(Frame, DegenerateRowGetsZeroAngle) {
  const RankTwoFrame f = frame_from_columns({1.0, 0.0, 0.0}, {0.0, 1.0, 0.0});
  EXPECT_DOUBLE_EQ(f.c[0], 1.0);
  EXPECT_DOUBLE_EQ(f.c[1], 1.0);
  EXPECT_DOUBLE_EQ(f.c[2], 0.0);
  EXPECT_DOUBLE_EQ(f.theta[0], 0.0);
  EXPECT_DOUBLE_EQ(f.theta[1], std::numbers::pi / 2.0);
  EXPECT_DOUBLE_EQ(f.theta[2], 0.0);

  const Projection q = projection_of(f);
  EXPECT_DOUBLE_EQ(q(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(q(1, 1), 1.0);
  EXPECT_DOUBLE_EQ(q(2, 2), 0.0);
  EXPECT_DOUBLE_EQ(q(0, 1), 0.0);
}

TEST(Frame, RejectsRankDeficientColumns) {
  EXPECT_THROW(frame_from_columns({1.0, 2.0}, {2.0, 4.0}), std::invalid_argument);
  EXPECT_THROW(frame_from_columns({0.0, 0.0}, {1.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(frame_from_columns({1.0, 0.0}, {1e-13, 2e-13}), std::invalid_argument);
  EXPECT_THROW(frame_from_columns({1.0, 0.0, 0.0}, {0.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(frame_from_columns({1.0}, {2.0}), std::invalid_argument);
  try {
    frame_from_columns({1.0, 1.0}, {2.0, 2.0});
    FAIL() << "expected rank error";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("frame rank < 2"), std::string::npos);
  }
}

TEST(Frame, RandomFramesSatisfyInvariants) {
  Rng rng(101);
  for (int n = 2; n <= 12; ++n) {
    for (int trial = 0; trial < 1000; ++trial) {
      const RankTwoFrame f = random_frame(n, rng);

      // columns orthonormal
      double g00 = 0.0, g01 = 0.0, g11 = 0.0;
      for (int i = 0; i < n; ++i) {
        g00 += f.r[2 * i] * f.r[2 * i];
        g01 += f.r[2 * i] * f.r[2 * i + 1];
        g11 += f.r[2 * i + 1] * f.r[2 * i + 1];
      }
      EXPECT_NEAR(g00, 1.0, 1e-10);
      EXPECT_NEAR(g11, 1.0, 1e-10);
      EXPECT_NEAR(g01, 0.0, 1e-10);

      // polar form reproduces the rows
      for (int i = 0; i < n; ++i) {
        ASSERT_GE(f.c[i], 0.0);
        if (f.c[i] > 0.0) {
          EXPECT_NEAR(f.r[2 * i], f.c[i] * std::cos(f.theta[i]), 1e-12);
          EXPECT_NEAR(f.r[2 * i + 1], f.c[i] * std::sin(f.theta[i]), 1e-12);
        }
        EXPECT_GT(f.theta[i], -std::numbers::pi);
        EXPECT_LE(f.theta[i], std::numbers::pi);
      }

      const auto inv = frame_invariants(f);
      EXPECT_NEAR(inv.sum_c_sq, 2.0, 1e-9);
      EXPECT_LE(std::hypot(inv.moment_re, inv.moment_im), 1e-9);

      const Projection q = projection_of(f);
      double tr = 0.0, ones = 0.0;
      for (int i = 0; i < n; ++i) {
        tr += q(i, i);
        EXPECT_GE(q(i, i), 0.0);
        for (int j = 0; j < n; ++j) {
          ones += q(i, j);
          EXPECT_DOUBLE_EQ(q(i, j), q(j, i));
          // idempotency entry
          double qq = 0.0;
          for (int k = 0; k < n; ++k) qq += q(i, k) * q(k, j);
          EXPECT_NEAR(qq, q(i, j), 1e-9);
          // polar identity
          EXPECT_NEAR(q(i, j), f.c[i] * f.c[j] * std::cos(f.theta[i] - f.theta[j]), 1e-10);
        }
      }
      EXPECT_NEAR(tr, 2.0, 1e-10);
      EXPECT_GE(ones, -1e-12);
    }
  }
}

TEST(TraceProduct, Examples) {
  Rng rng(7);
  const RankTwoFrame f = random_frame(5, rng);
  const Projection q = projection_of(f);
  EXPECT_NEAR(trace_product(SymMatrix::identity(5), q), 2.0, 1e-10);
  EXPECT_DOUBLE_EQ(trace_product(SymMatrix(5), q), 0.0);
  EXPECT_THROW(trace_product(SymMatrix(4), q), std::invalid_argument);

  // bottom two eigenvectors of A(K_3) give tr(AQ) = mu_2 + mu_3 = -2
  const SymMatrix k3 = specbound::graphs::clique(3).adjacency();
  const RankTwoFrame bottom = specbound::certify::bottom_pair_frame(k3);
  EXPECT_NEAR(trace_product(k3, projection_of(bottom)), -2.0, 1e-9);
}

TEST(KyFan, SamplingNeverBeatsBottomPair) {
  Rng rng(997);
  for (int inst = 0; inst < 100; ++inst) {
    const int n = 2 + static_cast<int>(rng.below(9));  // 2..10
    SymMatrix a(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) a.set(i, j, rng.uniform(-2.0, 2.0));

    const double floor = specbound::linalg::kyfan_pair_min(a);
    for (int trial = 0; trial < 1000; ++trial) {
      const double value = trace_product(a, projection_of(random_frame(n, rng)));
      ASSERT_GE(value, floor - 1e-9);
    }
    const double at_bottom =
        trace_product(a, projection_of(specbound::certify::bottom_pair_frame(a)));
    EXPECT_NEAR(at_bottom, floor, 1e-9);
  }
}
