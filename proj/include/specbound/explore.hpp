#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "specbound/certify.hpp"
#include "specbound/frame.hpp"
#include "specbound/graph.hpp"
#include "specbound/jacobi.hpp"
#include "specbound/rng.hpp"
#include "specbound/sym_matrix.hpp"

namespace specbound::explore {

namespace detail {

inline void put_u64_le(std::ostream& out, std::uint64_t v) {
  char b[8];
  for (int k = 0; k < 8; ++k) b[k] = static_cast<char>((v >> (8 * k)) & 0xFF);
  out.write(b, 8);
}

inline std::uint64_t take_u64_le(std::istream& in) {
  char b[8];
  in.read(b, 8);
  std::uint64_t v = 0;
  for (int k = 0; k < 8; ++k) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(b[k])) << (8 * k);
  return v;
}

inline void put_u32_le(std::ostream& out, std::uint32_t v) {
  char b[4];
  for (int k = 0; k < 4; ++k) b[k] = static_cast<char>((v >> (8 * k)) & 0xFF);
  out.write(b, 4);
}

inline std::uint32_t take_u32_le(std::istream& in) {
  char b[4];
  in.read(b, 4);
  std::uint32_t v = 0;
  for (int k = 0; k < 4; ++k) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(b[k])) << (8 * k);
  return v;
}

/// Runs fn(worker, lo, hi) over a contiguous partition of [begin, end) on
/// `workers` threads. fn must only touch worker-indexed state.
template <class Fn>
void run_partitioned(std::uint64_t begin, std::uint64_t end, int workers, Fn&& fn) {
  const std::uint64_t total = end - begin;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t lo = begin + total * static_cast<std::uint64_t>(w) / workers;
    const std::uint64_t hi = begin + total * static_cast<std::uint64_t>(w + 1) / workers;
    pool.emplace_back([&fn, w, lo, hi] { fn(w, lo, hi); });
  }
  for (auto& t : pool) t.join();
}

/// lambda_3 of the graph encoded by mask, using caller-provided scratch of
/// n*n doubles. No allocation; eigenvalues only.
inline double lambda3_of_mask(int n, std::uint64_t mask, const std::pair<int, int>* pairs,
                              double* scratch) {
  std::fill(scratch, scratch + static_cast<std::size_t>(n) * n, 0.0);
  for (int k = 0; mask >> k; ++k) {
    if ((mask >> k) & 1u) {
      const auto [i, j] = pairs[k];
      scratch[i * n + j] = 1.0;
      scratch[j * n + i] = 1.0;
    }
  }
  linalg::detail::jacobi_inplace(scratch, nullptr, n);
  double t1 = -1e300, t2 = -1e300, t3 = -1e300;
  for (int i = 0; i < n; ++i) {
    const double v = scratch[i * n + i];
    if (v > t1) {
      t3 = t2; t2 = t1; t1 = v;
    } else if (v > t2) {
      t3 = t2; t2 = v;
    } else if (v > t3) {
      t3 = v;
    }
  }
  return t3;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Exhaustive sweep over all labeled graphs of order n

struct SweepResult {
  int n = 0;
  std::uint64_t graphs_checked = 0;
  double max_lambda3 = 0.0;
  graphs::EdgeMask argmax_mask;
  double bound = 0.0;  // n/3 - 1
  std::uint64_t violations = 0;
  bool completed = false;

  friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

struct SweepCheckpoint {
  int n = 0;
  std::uint64_t next_mask = 0;
  double current_max = 0.0;
  std::uint64_t argmax_mask = 0;
};

inline void write_sweep_checkpoint(const std::string& path, const SweepCheckpoint& cp) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint file " + tmp);
    detail::put_u32_le(out, static_cast<std::uint32_t>(cp.n));
    detail::put_u64_le(out, cp.next_mask);
    detail::put_u64_le(out, std::bit_cast<std::uint64_t>(cp.current_max));
    detail::put_u64_le(out, cp.argmax_mask);
  }
  std::filesystem::rename(tmp, path);
}

inline std::optional<SweepCheckpoint> read_sweep_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  SweepCheckpoint cp;
  cp.n = static_cast<int>(detail::take_u32_le(in));
  cp.next_mask = detail::take_u64_le(in);
  cp.current_max = std::bit_cast<double>(detail::take_u64_le(in));
  cp.argmax_mask = detail::take_u64_le(in);
  if (!in) throw std::runtime_error("checkpoint file " + path + " is truncated");
  return cp;
}

struct SweepOptions {
  bool allow_n8 = false;
  std::string checkpoint_path;                     // resume from and update this file
  std::uint64_t block_size = std::uint64_t{1} << 24;
  std::function<bool(std::uint64_t done, std::uint64_t total)> on_block;  // false aborts
};

/// Checks lambda_3 <= n/3 - 1 over every labeled graph of order n, returning
/// the maximum, the lowest mask attaining it, and the violation count. The
/// result is a pure function of n: masks are merged under the total order
/// (value desc, mask asc), so worker count and block size never change it.
inline SweepResult exhaustive_sweep(int n, int workers, const SweepOptions& opt = {}) {
  if (n < 3 || n > 8) throw std::invalid_argument("exhaustive_sweep: order must be in 3..8");
  if (n == 8 && !opt.allow_n8)
    throw std::invalid_argument("exhaustive_sweep: order 8 (268,435,456 graphs) needs the opt-in flag");
  if (workers < 1) throw std::invalid_argument("exhaustive_sweep: workers must be positive");

  const int pairs_n = graphs::pair_count(n);
  std::vector<std::pair<int, int>> pairs(static_cast<std::size_t>(pairs_n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs[graphs::pair_index(n, i, j)] = {i, j};

  const std::uint64_t total = std::uint64_t{1} << pairs_n;
  const double bound = n / 3.0 - 1.0;

  std::uint64_t start = 0;
  double best = -1e300;
  std::uint64_t best_mask = 0;
  if (!opt.checkpoint_path.empty()) {
    if (const auto cp = read_sweep_checkpoint(opt.checkpoint_path)) {
      if (cp->n != n)
        throw std::invalid_argument("exhaustive_sweep: checkpoint is for order " +
                                    std::to_string(cp->n));
      start = cp->next_mask;
      best = cp->current_max;
      best_mask = cp->argmax_mask;
    }
  }

  std::uint64_t violations = 0;
  std::uint64_t covered = start;
  bool aborted = false;

  for (std::uint64_t block = start; block < total && !aborted; block += opt.block_size) {
    const std::uint64_t block_end = std::min(total, block + opt.block_size);

    struct Partial {
      double best = -1e300;
      std::uint64_t best_mask = 0;
      std::uint64_t violations = 0;
    };
    std::vector<Partial> parts(static_cast<std::size_t>(workers));
    detail::run_partitioned(block, block_end, workers, [&](int w, std::uint64_t lo, std::uint64_t hi) {
      double scratch[64];
      Partial& p = parts[static_cast<std::size_t>(w)];
      for (std::uint64_t mask = lo; mask < hi; ++mask) {
        const double l3 = detail::lambda3_of_mask(n, mask, pairs.data(), scratch);
        if (l3 > p.best) {
          p.best = l3;
          p.best_mask = mask;
        }
        if (l3 > bound + certify::kSlackTol) ++p.violations;
      }
    });
    for (const Partial& p : parts) {
      if (p.best > best || (p.best == best && p.best_mask < best_mask)) {
        best = p.best;
        best_mask = p.best_mask;
      }
      violations += p.violations;
    }

    covered = block_end;
    if (!opt.checkpoint_path.empty() && block_end < total)
      write_sweep_checkpoint(opt.checkpoint_path,
                             SweepCheckpoint{n, block_end, best, best_mask});
    if (opt.on_block && !opt.on_block(block_end, total)) aborted = true;
  }

  SweepResult r;
  r.n = n;
  r.graphs_checked = covered;
  r.max_lambda3 = best;
  r.argmax_mask = graphs::EdgeMask{n, best_mask};
  r.bound = bound;
  r.violations = violations;
  r.completed = !aborted;
  if (r.completed && !opt.checkpoint_path.empty()) {
    std::error_code ec;
    std::filesystem::remove(opt.checkpoint_path, ec);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Randomized graph stress over the four proven graph bounds

struct StressResult {
  std::uint64_t samples = 0;
  std::uint64_t violations = 0;
  double min_slack = 1e300;
};

struct StressOptions {
  int workers = 1;
  // called in sample order with the five reports of that sample
  std::function<void(std::uint64_t index, const std::array<certify::BoundReport, 5>&)> sink;
};

inline std::array<certify::BoundReport, 5> graph_check_suite(const graphs::Graph& g) {
  const certify::Lambda3Report l3 = certify::verify_lambda3_bound(g);
  return {l3.sharp, l3.floor, certify::verify_corollary_lower(g), certify::weyl_chain(g),
          certify::check_hong_lambda2(g)};
}

/// Erdos-Renyi sampling at p cycling over {0.1, ..., 0.9}; sample i draws its
/// order from Rng(seed ^ i), so results do not depend on worker count.
inline StressResult random_graph_stress(int n_lo, int n_hi, std::uint64_t samples,
                                        std::uint64_t seed, const StressOptions& opt = {}) {
  if (n_lo < 3) throw std::invalid_argument("random_graph_stress: order range must start at 3");
  if (n_hi < n_lo) throw std::invalid_argument("random_graph_stress: empty order range");
  if (opt.workers < 1) throw std::invalid_argument("random_graph_stress: workers must be positive");

  StressResult result;
  result.samples = samples;
  if (samples == 0) {
    result.min_slack = 0.0;
    return result;
  }

  std::vector<std::array<certify::BoundReport, 5>> buffered;
  if (opt.sink) buffered.resize(static_cast<std::size_t>(samples));

  std::vector<StressResult> parts(static_cast<std::size_t>(opt.workers));
  detail::run_partitioned(0, samples, opt.workers, [&](int w, std::uint64_t lo, std::uint64_t hi) {
    StressResult& p = parts[static_cast<std::size_t>(w)];
    for (std::uint64_t i = lo; i < hi; ++i) {
      Rng rng(seed ^ i);
      const int n = n_lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_hi - n_lo + 1)));
      const double prob = 0.1 * (1.0 + static_cast<double>(i % 9));
      const graphs::Graph g = graphs::random_graph(n, prob, rng);
      const auto reports = graph_check_suite(g);
      for (const auto& rep : reports) {
        p.min_slack = std::min(p.min_slack, rep.slack);
        if (rep.slack < -certify::kSlackTol) ++p.violations;
      }
      if (opt.sink) buffered[static_cast<std::size_t>(i)] = reports;
    }
  });
  for (const StressResult& p : parts) {
    result.violations += p.violations;
    result.min_slack = std::min(result.min_slack, p.min_slack);
  }
  if (opt.sink)
    for (std::uint64_t i = 0; i < samples; ++i) opt.sink(i, buffered[static_cast<std::size_t>(i)]);
  return result;
}

// ---------------------------------------------------------------------------
// Entry-wise eigenvalue subgradient

/// Entry-derivative of the k-th largest eigenvalue (1-based): v_i^2 on the
/// diagonal and 2 v_i v_j for the symmetric pair (i, j). When neighboring
/// eigenvalues sit within cluster_gap the per-eigenvector matrices of the
/// whole cluster are averaged, which is a valid generalized subgradient.
inline std::vector<double> eigenvalue_entry_gradient(const linalg::SymMatrix& a, int k,
                                                     double cluster_gap = 1e-8) {
  const int n = a.order();
  if (k < 1 || k > n) throw std::out_of_range("eigenvalue_entry_gradient: index out of range");
  const linalg::EigenDecomposition d = linalg::eigen_spectrum(a);

  int lo = k, hi = k;
  while (lo > 1 && d.spectrum.eig(lo - 1) - d.spectrum.eig(lo) <= cluster_gap) --lo;
  while (hi < n && d.spectrum.eig(hi) - d.spectrum.eig(hi + 1) <= cluster_gap) ++hi;

  std::vector<double> grad(static_cast<std::size_t>(n) * n, 0.0);
  for (int m = lo; m <= hi; ++m) {
    for (int i = 0; i < n; ++i) {
      const double vi = d.vec(i, m - 1);
      grad[static_cast<std::size_t>(i) * n + i] += vi * vi;
      for (int j = i + 1; j < n; ++j) {
        const double t = 2.0 * vi * d.vec(j, m - 1);
        grad[static_cast<std::size_t>(i) * n + j] += t;
        grad[static_cast<std::size_t>(j) * n + i] += t;
      }
    }
  }
  const double inv = 1.0 / (hi - lo + 1);
  for (double& g : grad) g *= inv;
  return grad;
}

// ---------------------------------------------------------------------------
// Projected subgradient descent for lambda_{n-1} over matrices in [0,1]

struct DescentRecord {
  int n = 0;
  linalg::SymMatrix best_matrix{1};
  double best_lambda = 0.0;
  std::uint64_t iterations = 0;
  std::uint64_t seed = 0;
};

struct DescentOptions {
  int workers = 1;
  double cluster_gap = 1e-8;
  // called after evaluating each iterate (step 0 is the initial matrix)
  std::function<void(int restart, int step, const linalg::SymMatrix&, double lambda)> observer;
};

/// Minimizes lambda_{n-1} over symmetric matrices with entries in [0,1] by
/// projected subgradient steps 0.1/sqrt(k+1), keeping the best iterate per
/// restart and merging restarts by (lambda asc, restart asc). Restart r uses
/// Rng(seed ^ r), so the record is independent of worker count.
inline DescentRecord polytope_descent(int n, int restarts, int steps, std::uint64_t seed,
                                      const DescentOptions& opt = {}) {
  if (n < 2) throw std::invalid_argument("polytope_descent: order must be at least 2");
  if (restarts < 1) throw std::invalid_argument("polytope_descent: restarts must be positive");
  if (steps < 0) throw std::invalid_argument("polytope_descent: steps must be nonnegative");
  if (opt.workers < 1) throw std::invalid_argument("polytope_descent: workers must be positive");

  struct Best {
    double lambda = 1e300;
    linalg::SymMatrix m{1};
  };
  std::vector<Best> bests(static_cast<std::size_t>(restarts));

  const auto lambda_second_smallest = [n](const linalg::SymMatrix& m) {
    return linalg::eigenvalues_of(m).eig(n - 1);
  };

  detail::run_partitioned(0, static_cast<std::uint64_t>(restarts), opt.workers,
                          [&](int, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t r = lo; r < hi; ++r) {
      Rng rng(seed ^ r);
      linalg::SymMatrix m(n);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.set(i, j, rng.uniform());

      Best& best = bests[static_cast<std::size_t>(r)];
      double lambda = lambda_second_smallest(m);
      best.lambda = lambda;
      best.m = m;
      if (opt.observer) opt.observer(static_cast<int>(r), 0, m, lambda);

      for (int k = 0; k < steps; ++k) {
        const std::vector<double> grad = eigenvalue_entry_gradient(m, n - 1, opt.cluster_gap);
        const double step = 0.1 / std::sqrt(static_cast<double>(k + 1));
        for (int i = 0; i < n; ++i)
          for (int j = i; j < n; ++j) {
            const double v = m(i, j) - step * grad[static_cast<std::size_t>(i) * n + j];
            m.set(i, j, std::clamp(v, 0.0, 1.0));
          }
        lambda = lambda_second_smallest(m);
        if (opt.observer) opt.observer(static_cast<int>(r), k + 1, m, lambda);
        if (lambda < best.lambda) {
          best.lambda = lambda;
          best.m = m;
        }
      }
    }
  });

  DescentRecord rec;
  rec.n = n;
  rec.iterations = static_cast<std::uint64_t>(restarts) * static_cast<std::uint64_t>(steps);
  rec.seed = seed;
  int at = 0;
  for (int r = 1; r < restarts; ++r)
    if (bests[static_cast<std::size_t>(r)].lambda < bests[static_cast<std::size_t>(at)].lambda) at = r;
  rec.best_lambda = bests[static_cast<std::size_t>(at)].lambda;
  rec.best_matrix = bests[static_cast<std::size_t>(at)].m;
  return rec;
}

// ---------------------------------------------------------------------------
// Hill-climbing search for graphs with large lambda_3

struct SearchResult {
  int n = 0;
  graphs::Graph best_graph{1};
  double best_lambda3 = 0.0;
  std::uint64_t restarts = 0;
  std::uint64_t seed = 0;
};

struct SearchOptions {
  int workers = 1;
  int sideways_cap = 50;
};

/// Single-edge-flip hill climbing on lambda_3 with random restarts. Neighbor
/// ties within 1e-12 go to the lexicographically lowest edge bits; sideways
/// moves are capped per climb. Restart r uses Rng(seed ^ r); restarts merge
/// by (lambda desc, restart asc).
inline SearchResult max_lambda3_search(int n, int restarts, int steps, std::uint64_t seed,
                                       const SearchOptions& opt = {}) {
  if (n < 3) throw std::invalid_argument("max_lambda3_search: order must be at least 3");
  if (restarts < 1) throw std::invalid_argument("max_lambda3_search: restarts must be positive");
  if (steps < 0) throw std::invalid_argument("max_lambda3_search: steps must be nonnegative");
  if (opt.workers < 1) throw std::invalid_argument("max_lambda3_search: workers must be positive");

  constexpr double kTieTol = 1e-12;
  const auto lambda3 = [](const graphs::Graph& g) { return certify::graph_spectrum(g).eig(3); };

  struct Best {
    double lambda = -1e300;
    graphs::Graph g{1};
  };
  std::vector<Best> bests(static_cast<std::size_t>(restarts));

  detail::run_partitioned(0, static_cast<std::uint64_t>(restarts), opt.workers,
                          [&](int, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t r = lo; r < hi; ++r) {
      Rng rng(seed ^ r);
      graphs::Graph cur = graphs::random_graph(n, 0.5, rng);
      double cur_l = lambda3(cur);

      Best& best = bests[static_cast<std::size_t>(r)];
      best.lambda = cur_l;
      best.g = cur;

      int sideways = 0;
      for (int step = 0; step < steps; ++step) {
        graphs::Graph cand = cur;
        double cand_l = -1e300;
        bool have = false;
        graphs::Graph probe = cur;
        for (int i = 0; i < n; ++i) {
          for (int j = i + 1; j < n; ++j) {
            probe.toggle_edge(i, j);
            const double l = lambda3(probe);
            if (!have || l > cand_l + kTieTol ||
                (l >= cand_l - kTieTol && graphs::edge_bits_less(probe, cand))) {
              cand = probe;
              cand_l = l;
              have = true;
            }
            probe.toggle_edge(i, j);
          }
        }
        if (cand_l > cur_l + kTieTol) {
          sideways = 0;
        } else if (cand_l >= cur_l - kTieTol) {
          if (++sideways > opt.sideways_cap) break;
        } else {
          break;  // strict local maximum
        }
        cur = cand;
        cur_l = cand_l;
        if (cur_l > best.lambda ||
            (cur_l == best.lambda && graphs::edge_bits_less(cur, best.g))) {
          best.lambda = cur_l;
          best.g = cur;
        }
      }
    }
  });

  SearchResult res;
  res.n = n;
  res.restarts = static_cast<std::uint64_t>(restarts);
  res.seed = seed;
  int at = 0;
  for (int r = 1; r < restarts; ++r)
    if (bests[static_cast<std::size_t>(r)].lambda > bests[static_cast<std::size_t>(at)].lambda) at = r;
  res.best_lambda3 = bests[static_cast<std::size_t>(at)].lambda;
  res.best_graph = bests[static_cast<std::size_t>(at)].g;
  return res;
}

// ---------------------------------------------------------------------------
// Proof-trace fuzzing

struct FuzzResult {
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
  double min_step_slack = 1e300;
  double min_final_slack = 1e300;
};

struct FuzzOptions {
  bool adversarial = false;
  int workers = 1;
};

namespace detail {

inline double log_uniform_jitter(Rng& rng) {
  constexpr double lo = 1e-9, hi = 1e-1;
  const double mag = std::exp(std::log(lo) + rng.uniform() * (std::log(hi) - std::log(lo)));
  return rng.bernoulli(0.5) ? mag : -mag;
}

/// Three angle clusters 2pi/3 apart with log-uniform jitter; paired with the
/// worst theorem-class matrix for that frame (edge exactly where q_ij < 0).
inline std::pair<linalg::SymMatrix, linalg::RankTwoFrame> adversarial_pair(int n, Rng& rng) {
  std::vector<double> x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double theta = (i % 3) * (2.0 * std::numbers::pi / 3.0) + log_uniform_jitter(rng);
    const double mag = 1.0 + log_uniform_jitter(rng);
    x[i] = mag * std::cos(theta);
    y[i] = mag * std::sin(theta);
  }
  linalg::RankTwoFrame f = linalg::frame_from_columns(x, y);
  const linalg::Projection q = linalg::projection_of(f);
  linalg::SymMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (q(i, j) < 0.0) a.set(i, j, 1.0);
  return {std::move(a), std::move(f)};
}

inline std::pair<linalg::SymMatrix, linalg::RankTwoFrame> random_pair(int n, Rng& rng) {
  linalg::SymMatrix a(n);
  for (int i = 0; i < n; ++i) a.set(i, i, 2.0 * rng.uniform());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) a.set(i, j, rng.uniform());
  return {std::move(a), linalg::random_frame(n, rng)};
}

}  // namespace detail

/// Random (theorem-class matrix, frame) pairs through the proof trace; counts
/// trials with any step or final slack below -1e-9 (must stay zero) and
/// tracks the tightest slacks seen. Trial i uses Rng(seed ^ i).
inline FuzzResult frame_fuzz(std::uint64_t trials, int n_lo, int n_hi, std::uint64_t seed,
                             const FuzzOptions& opt = {}) {
  if (n_lo < 2) throw std::invalid_argument("frame_fuzz: order range must start at 2");
  if (n_hi < n_lo) throw std::invalid_argument("frame_fuzz: empty order range");
  if (opt.workers < 1) throw std::invalid_argument("frame_fuzz: workers must be positive");

  FuzzResult result;
  result.trials = trials;
  if (trials == 0) {
    result.min_step_slack = 0.0;
    result.min_final_slack = 0.0;
    return result;
  }

  std::vector<FuzzResult> parts(static_cast<std::size_t>(opt.workers));
  detail::run_partitioned(0, trials, opt.workers, [&](int w, std::uint64_t lo, std::uint64_t hi) {
    FuzzResult& p = parts[static_cast<std::size_t>(w)];
    for (std::uint64_t i = lo; i < hi; ++i) {
      Rng rng(seed ^ i);
      const int n = n_lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_hi - n_lo + 1)));
      const auto [a, frame] =
          opt.adversarial ? detail::adversarial_pair(n, rng) : detail::random_pair(n, rng);
      const certify::ProofTrace t = certify::proof_trace(a, frame);
      const double step_min = t.min_step_slack();
      p.min_step_slack = std::min(p.min_step_slack, step_min);
      p.min_final_slack = std::min(p.min_final_slack, t.final_slack);
      if (step_min < -certify::kSlackTol || t.final_slack < -certify::kSlackTol) ++p.violations;
    }
  });
  for (const FuzzResult& p : parts) {
    result.violations += p.violations;
    result.min_step_slack = std::min(result.min_step_slack, p.min_step_slack);
    result.min_final_slack = std::min(result.min_final_slack, p.min_final_slack);
  }
  return result;
}

}  // namespace specbound::explore
