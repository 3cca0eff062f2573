// Acceptance suite: one line per criterion, exit code = number of failures.
// Exercises the library exactly at its documented tolerances, plus the
// installed binary (SPECBOUND_CLI_PATH) for output determinism.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "specbound/specbound.hpp"

namespace {

using Clock = std::chrono::steady_clock;
using specbound::Rng;
using specbound::linalg::SymMatrix;

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("criterion %2d: %s  %s\n", criterion, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << v;
  return s.str();
}

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(SPECBOUND_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// 1. Majorant gap nonnegative over a 10^6-point grid, zero at the roots, < 1 s.
void criterion_grid() {
  const auto t0 = Clock::now();
  const double lo = -2.0 * std::numbers::pi, hi = 2.0 * std::numbers::pi;
  double min_gap = 1e300;
  constexpr int kPoints = 1000000;
  for (int k = 0; k < kPoints; ++k) {
    const double x = lo + (hi - lo) * k / (kPoints - 1);
    min_gap = std::min(min_gap, specbound::certify::trig_majorant_gap(x));
  }
  const double elapsed = seconds_since(t0);

  double max_root_gap = 0.0;
  for (const double x : {0.0, std::numbers::pi / 3.0, 2.0 * std::numbers::pi / 3.0, std::numbers::pi})
    max_root_gap = std::max(max_root_gap, std::abs(specbound::certify::trig_majorant_gap(x)));

  const bool ok = min_gap >= -1e-12 && max_root_gap <= 1e-10 && elapsed < 1.0;
  report(1, ok,
         "grid min " + fmt(min_gap) + ", root gap " + fmt(max_root_gap) + ", " + fmt(elapsed) + " s");
}

// 2. Exhaustive sweeps n = 3..7: no violations, known maxima at 3 and 6.
void criterion_sweeps() {
  bool ok = true;
  std::string detail;
  for (int n = 3; n <= 7; ++n) {
    const auto r = specbound::explore::exhaustive_sweep(n, 4);
    ok = ok && r.completed && r.violations == 0 && r.max_lambda3 <= r.bound + 1e-9;
    if (n == 3) ok = ok && std::abs(r.max_lambda3) <= 1e-9;
    if (n == 6) ok = ok && std::abs(r.max_lambda3 - 1.0) <= 1e-9;
    detail += "n=" + std::to_string(n) + " max " + fmt(r.max_lambda3) + "; ";
  }
  report(2, ok, detail);
}

// 3. triple_clique(k) attains lambda_3 = k - 1 = n/3 - 1.
void criterion_witnesses() {
  bool ok = true;
  double worst = 0.0;
  for (int k = 1; k <= 4; ++k) {
    const double l3 = specbound::certify::graph_spectrum(specbound::graphs::triple_clique(k)).eig(3);
    worst = std::max(worst, std::abs(l3 - (k - 1.0)));
  }
  ok = worst <= 1e-9;
  report(3, ok, "max |lambda_3 - (k-1)| = " + fmt(worst) + " over k = 1..4");
}

// 4. A(K_3) pair sum equals -2; K_{t,t,t} attains lambda_{n-1} = -n/3.
void criterion_weighted_tightness() {
  const double pair = specbound::linalg::kyfan_pair_min(specbound::graphs::clique(3).adjacency());
  bool ok = std::abs(pair + 2.0) <= 1e-10;
  double worst = 0.0;
  for (int t = 1; t <= 3; ++t) {
    const auto g = specbound::graphs::blow_up(specbound::graphs::clique(3), {t, t, t}, false);
    const int n = 3 * t;
    const double second = specbound::certify::graph_spectrum(g).eig(n - 1);
    worst = std::max(worst, std::abs(second + n / 3.0));
  }
  ok = ok && worst <= 1e-9;
  report(4, ok, "K_3 pair sum " + fmt(pair) + ", max |lambda_{n-1} + n/3| = " + fmt(worst));
}

// 5. 10^5 random proof traces hold every slack; adversarial n = 3 frames
//    drive the final slack below 1e-6. Under one minute.
void criterion_fuzz() {
  const auto t0 = Clock::now();
  const auto random = specbound::explore::frame_fuzz(100000, 2, 16, 1);
  specbound::explore::FuzzOptions adv;
  adv.adversarial = true;
  const auto tight = specbound::explore::frame_fuzz(100000, 3, 3, 2, adv);
  const double elapsed = seconds_since(t0);

  const bool ok = random.violations == 0 && random.min_step_slack >= -1e-9 &&
                  random.min_final_slack >= -1e-9 && tight.violations == 0 &&
                  tight.min_final_slack >= -1e-9 && tight.min_final_slack <= 1e-6 &&
                  elapsed < 60.0;
  report(5, ok,
         "random min step/final " + fmt(random.min_step_slack) + "/" + fmt(random.min_final_slack) +
             ", adversarial min final " + fmt(tight.min_final_slack) + ", " + fmt(elapsed) + " s");
}

// 6. Sampled frames never beat the bottom eigenvalue pair; the bottom
//    eigenvector frame attains it.
void criterion_kyfan() {
  Rng rng(6);
  bool ok = true;
  double worst_excess = 0.0, worst_equality = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(9));
    SymMatrix a(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) a.set(i, j, rng.normal());
    const double floor = specbound::linalg::kyfan_pair_min(a);

    double sampled = 1e300;
    for (int s = 0; s < 1000; ++s) {
      const auto f = specbound::linalg::random_frame(n, rng);
      sampled = std::min(sampled, specbound::linalg::trace_product(a, specbound::linalg::projection_of(f)));
    }
    worst_excess = std::max(worst_excess, floor - sampled);

    const auto bottom = specbound::certify::bottom_pair_frame(a);
    const double attained =
        specbound::linalg::trace_product(a, specbound::linalg::projection_of(bottom));
    worst_equality = std::max(worst_equality, std::abs(attained - floor));
  }
  ok = worst_excess <= 1e-9 && worst_equality <= 1e-9;
  report(6, ok,
         "max sampled undershoot " + fmt(worst_excess) + ", max bottom-frame gap " +
             fmt(worst_equality));
}

// 7. lambda_3(G) + lambda_{n-1}(complement) <= -1 over 10^4 random graphs,
//    with equality at 3K_2 and at the empty graph.
void criterion_weyl() {
  Rng rng(7);
  double min_slack = 1e300;
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(14));
    const auto g = specbound::graphs::random_graph(n, rng.uniform(), rng);
    min_slack = std::min(min_slack, specbound::certify::weyl_chain(g).slack);
  }
  const double three_k2 = specbound::certify::weyl_chain(specbound::graphs::triple_clique(2)).quantity;
  const double empty = specbound::certify::weyl_chain(specbound::graphs::Graph(6)).quantity;
  const bool ok =
      min_slack >= -1e-9 && std::abs(three_k2 + 1.0) <= 1e-9 && std::abs(empty + 1.0) <= 1e-9;
  report(7, ok,
         "min slack " + fmt(min_slack) + ", 3K_2 sum " + fmt(three_k2) + ", empty sum " + fmt(empty));
}

// 8. Analytic entry-gradient of lambda_{n-1} vs central finite differences.
void criterion_gradient() {
  Rng rng(8);
  const double h = 1e-5;
  double worst = 0.0;
  int instances = 0;
  while (instances < 100) {
    const int n = 3 + static_cast<int>(rng.below(6));
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) m.set(i, j, rng.normal());
    const auto spec = specbound::linalg::eigenvalues_of(m);
    bool simple = true;
    for (int k = 1; k < n; ++k)
      if (spec.eig(k) - spec.eig(k + 1) < 1e-2) simple = false;
    if (!simple) continue;
    ++instances;

    const int k = n - 1;
    const auto grad = specbound::explore::eigenvalue_entry_gradient(m, k);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        SymMatrix up = m, down = m;
        up.set(i, j, m(i, j) + h);
        down.set(i, j, m(i, j) - h);
        const double fd = (specbound::linalg::eigenvalues_of(up).eig(k) -
                           specbound::linalg::eigenvalues_of(down).eig(k)) /
                          (2.0 * h);
        const double rel = std::abs(grad[static_cast<std::size_t>(i) * n + j] - fd) /
                           (1.0 + std::abs(fd));
        worst = std::max(worst, rel);
      }
    }
  }
  report(8, worst <= 1e-5, "max relative gradient error " + fmt(worst) + " over 100 instances");
}

// 9. 32-restart descent respects the -n/3 floor and reaches it within 1e-3.
void criterion_descent() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  for (const int n : {3, 6, 9}) {
    const auto rec = specbound::explore::polytope_descent(n, 32, 6000, 0);
    const double floor = -n / 3.0;
    ok = ok && rec.best_lambda >= floor - 1e-7 && rec.best_lambda <= floor + 1e-3;
    detail += "n=" + std::to_string(n) + " best " + fmt(rec.best_lambda) + "; ";
  }
  const double elapsed = seconds_since(t0);
  ok = ok && elapsed < 120.0;
  report(9, ok, detail + fmt(elapsed) + " s");
}

// 10. Byte-identical records for the same seed at any worker count.
void criterion_determinism() {
  const char* runs[] = {
      "--seed 11 fuzz --trials 20000 --n-min 2 --n-max 8",
      "--seed 2 fuzz --trials 5000 --n-min 3 --n-max 3 --adversarial",
      "--seed 3 stress --trials 1500 --n-min 3 --n-max 10",
      "--seed 7 descent 6 --restarts 8 --steps 400",
      "--seed 9 search3 6 --restarts 8 --steps 120",
      "sweep 5",
  };
  bool ok = true;
  int compared = 0;
  for (const char* args : runs) {
    const CliRun first = run_cli(std::string("--workers 1 ") + args);
    const CliRun again = run_cli(std::string("--workers 1 ") + args);
    const CliRun wide = run_cli(std::string("--workers 3 ") + args);
    const bool same = first.code == 0 && again.code == 0 && wide.code == 0 &&
                      !first.out.empty() && first.out == again.out && first.out == wide.out;
    if (!same) ok = false;
    ++compared;
  }
  report(10, ok, std::to_string(compared) + " commands, workers {1,1,3}, byte-compared");
}

}  // namespace

int main() {
  criterion_grid();
  criterion_sweeps();
  criterion_witnesses();
  criterion_weighted_tightness();
  criterion_fuzz();
  criterion_kyfan();
  criterion_weyl();
  criterion_gradient();
  criterion_descent();
  criterion_determinism();
  if (failures == 0) std::printf("all 10 criteria passed\n");
  return failures;
}
