// Command-line front end: every check and search with seeded, reproducible,
// machine-readable output. Exit codes: 0 = all bounds confirmed, 1 = numeric
// violation found, 2 = input or usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "specbound/specbound.hpp"

namespace {

using specbound::Rng;
using specbound::certify::BoundReport;
using specbound::report::Record;

int default_workers() {
  if (const char* env = std::getenv("SPECBOUND_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

struct Output {
  std::string format = "json";
  std::string path;

  // one JSON object per line, or a CSV header plus one row per flat record
  void emit(const std::vector<Record>& json_records, const std::vector<Record>& csv_records) const {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!path.empty()) {
      file.open(path, std::ios::trunc);
      if (!file) throw std::runtime_error("cannot open output file " + path);
      out = &file;
    }
    if (format == "json") {
      for (const Record& r : json_records) *out << specbound::report::json_line(r) << '\n';
    } else {
      if (csv_records.empty()) return;
      *out << specbound::report::csv_header(csv_records.front()) << '\n';
      for (const Record& r : csv_records) *out << specbound::report::csv_row(r) << '\n';
    }
  }
};

Record report_record(const std::string& command, const std::string& input, int index,
                     const BoundReport& rep) {
  Record rec;
  rec["command"] = command;
  if (!input.empty()) rec["input"] = input;
  if (index >= 0) rec["index"] = index;
  const Record body = specbound::report::to_record(rep);
  rec.update(body);
  return rec;
}

std::vector<specbound::graphs::Graph> load_graphs(const std::string& input) {
  namespace fs = std::filesystem;
  if (fs::exists(fs::path(input))) {
    std::ifstream in(input);
    if (!in) throw std::runtime_error("cannot read " + input);
    int c = in.peek();
    while (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      in.get();
      c = in.peek();
    }
    if (c >= '0' && c <= '9') return {specbound::graphs::read_edge_list(in)};
    return specbound::graphs::read_graph6_lines(in);
  }
  return {specbound::graphs::graph6_read(input)};
}

int run_check_graph(const std::string& input, const Output& out) {
  const auto graphs = load_graphs(input);
  if (graphs.empty()) throw std::runtime_error("no graphs in " + input);

  std::vector<Record> json_records, csv_records;
  int code = 0;
  int index = 0;
  for (const auto& g : graphs) {
    if (g.order() < 3)
      throw std::runtime_error("check-graph needs order >= 3, got " + std::to_string(g.order()));
    Record spec;
    spec["command"] = "check-graph";
    spec["input"] = input;
    spec["index"] = index;
    spec["name"] = "spectrum";
    spec["n"] = g.order();
    spec["edge_count"] = g.edge_count();
    spec["values"] = specbound::report::spectrum_record(specbound::certify::graph_spectrum(g));
    json_records.push_back(std::move(spec));

    const auto reports = specbound::explore::graph_check_suite(g);
    for (const BoundReport& rep : reports) {
      Record rec = report_record("check-graph", input, index, rep);
      json_records.push_back(rec);
      csv_records.push_back(std::move(rec));
    }
    code = std::max(code, specbound::report::exit_code_for(reports));
    ++index;
  }
  out.emit(json_records, csv_records);
  return code;
}

int run_check_matrix(const std::string& input, const Output& out) {
  const specbound::linalg::LoadedMatrix loaded = specbound::linalg::read_matrix_file(input);
  const auto violations = loaded.matrix.theorem_class_violations(16);
  if (!violations.empty()) {
    for (const std::string& v : violations) std::cerr << "check-matrix: " << v << '\n';
    return 2;
  }

  std::vector<Record> json_records, csv_records;
  Record info;
  info["command"] = "check-matrix";
  info["input"] = input;
  info["name"] = "matrix_info";
  info["n"] = loaded.matrix.order();
  info["max_asymmetry"] = loaded.max_asymmetry;
  info["values"] = specbound::report::spectrum_record(specbound::linalg::eigenvalues_of(loaded.matrix));
  json_records.push_back(std::move(info));

  const auto wt = specbound::certify::verify_weighted_theorem(loaded.matrix);
  const BoundReport reports[] = {wt.pair_sum, wt.second_smallest};
  for (const BoundReport& rep : reports) {
    Record rec = report_record("check-matrix", input, -1, rep);
    json_records.push_back(rec);
    csv_records.push_back(std::move(rec));
  }
  out.emit(json_records, csv_records);
  return specbound::report::exit_code_for(reports);
}

int run_sweep(int n, int workers, bool allow_n8, const std::string& checkpoint,
              const Output& out) {
  specbound::explore::SweepOptions opt;
  opt.allow_n8 = allow_n8;
  opt.checkpoint_path = checkpoint;
  opt.on_block = [](std::uint64_t done, std::uint64_t total) {
    std::cerr << "sweep: " << done << "/" << total << " masks\n";
    return true;
  };
  const auto res = specbound::explore::exhaustive_sweep(n, workers, opt);

  Record rec;
  rec["command"] = "sweep";
  rec["n"] = res.n;
  rec["allow_n8"] = allow_n8;
  rec["graphs_checked"] = res.graphs_checked;
  rec["max_lambda3"] = res.max_lambda3;
  rec["argmax_mask"] = res.argmax_mask.mask;
  rec["argmax_graph6"] = specbound::graphs::graph6_write(specbound::graphs::from_mask(res.argmax_mask));
  rec["bound"] = res.bound;
  rec["violations"] = res.violations;
  out.emit({rec}, {rec});
  return res.violations == 0 ? 0 : 1;
}

int run_stress(int n_min, int n_max, std::uint64_t trials, std::uint64_t seed, int workers,
               const Output& out) {
  specbound::explore::StressOptions opt;
  opt.workers = workers;
  const auto res = specbound::explore::random_graph_stress(n_min, n_max, trials, seed, opt);

  Record rec;
  rec["command"] = "stress";
  rec["n_min"] = n_min;
  rec["n_max"] = n_max;
  rec["trials"] = res.samples;
  rec["seed"] = seed;
  rec["violations"] = res.violations;
  rec["min_slack"] = res.min_slack;
  out.emit({rec}, {rec});
  return res.violations == 0 ? 0 : 1;
}

int run_descent(int n, int restarts, int steps, std::uint64_t seed, int workers,
                const Output& out) {
  specbound::explore::DescentOptions opt;
  opt.workers = workers;
  const auto res = specbound::explore::polytope_descent(n, restarts, steps, seed, opt);
  const double bound = -n / 3.0;
  const double slack = res.best_lambda - bound;

  Record rec;
  rec["command"] = "descent";
  rec["n"] = res.n;
  rec["restarts"] = restarts;
  rec["steps"] = steps;
  rec["seed"] = res.seed;
  rec["best_lambda"] = res.best_lambda;
  rec["bound"] = bound;
  rec["slack"] = slack;
  rec["iterations"] = res.iterations;
  rec["best_matrix"] = specbound::report::matrix_record(res.best_matrix);
  out.emit({rec}, {rec});
  return slack >= -specbound::certify::kTightTol ? 0 : 1;
}

int run_search3(int n, int restarts, int steps, std::uint64_t seed, int workers,
                const Output& out) {
  specbound::explore::SearchOptions opt;
  opt.workers = workers;
  const auto res = specbound::explore::max_lambda3_search(n, restarts, steps, seed, opt);
  const double bound = n / 3.0 - 1.0;
  const double slack = bound - res.best_lambda3;

  Record rec;
  rec["command"] = "search3";
  rec["n"] = res.n;
  rec["restarts"] = restarts;
  rec["steps"] = steps;
  rec["seed"] = res.seed;
  rec["best_lambda3"] = res.best_lambda3;
  rec["bound"] = bound;
  rec["slack"] = slack;
  rec["edge_count"] = res.best_graph.edge_count();
  rec["best_graph6"] = specbound::graphs::graph6_write(res.best_graph);
  out.emit({rec}, {rec});
  return slack >= -specbound::certify::kSlackTol ? 0 : 1;
}

int run_fuzz(int n_min, int n_max, std::uint64_t trials, std::uint64_t seed, bool adversarial,
             int workers, const Output& out) {
  specbound::explore::FuzzOptions opt;
  opt.adversarial = adversarial;
  opt.workers = workers;
  const auto res = specbound::explore::frame_fuzz(trials, n_min, n_max, seed, opt);

  Record rec;
  rec["command"] = "fuzz";
  rec["n_min"] = n_min;
  rec["n_max"] = n_max;
  rec["trials"] = res.trials;
  rec["seed"] = seed;
  rec["adversarial"] = adversarial;
  rec["violations"] = res.violations;
  rec["min_step_slack"] = res.min_step_slack;
  rec["min_final_slack"] = res.min_final_slack;
  out.emit({rec}, {rec});
  return res.violations == 0 ? 0 : 1;
}

int run_lemma_grid(std::int64_t points, const Output& out) {
  const double lo = -2.0 * std::numbers::pi;
  const double hi = 2.0 * std::numbers::pi;
  double min_gap = 1e300, argmin_x = lo, max_diff = 0.0;
  for (std::int64_t k = 0; k < points; ++k) {
    const double x = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(points - 1);
    const double g = specbound::certify::trig_majorant_gap(x);
    if (g < min_gap) {
      min_gap = g;
      argmin_x = x;
    }
    const double diff = std::abs(g - specbound::certify::trig_majorant_gap_factored(x));
    max_diff = std::max(max_diff, diff);
  }

  Record rec;
  rec["command"] = "lemma-grid";
  rec["points"] = points;
  rec["min_gap"] = min_gap;
  rec["argmin_x"] = argmin_x;
  rec["max_factorization_diff"] = max_diff;
  out.emit({rec}, {rec});
  return (min_gap >= -1e-12 && max_diff <= 1e-12) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral bound checks: lambda_3(G) <= n/3 - 1 and mu_{n-1}+mu_n >= -2n/3"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  int workers = default_workers();
  Output out;
  app.add_option("--seed", seed, "PRNG seed (default 0)");
  app.add_option("--workers", workers, "worker threads (default: SPECBOUND_WORKERS or hardware)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", out.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out.path, "write records to this file instead of stdout");

  int code = 0;

  std::string graph_input;
  auto* check_graph = app.add_subcommand(
      "check-graph", "check lambda_3, lambda_{n-1}, lambda_2 and complement bounds of a graph");
  check_graph->add_option("input", graph_input, "graph6 file, edge-list file, or graph6 literal")
      ->required();
  check_graph->callback([&] { code = run_check_graph(graph_input, out); });

  std::string matrix_input;
  auto* check_matrix =
      app.add_subcommand("check-matrix", "check mu_{n-1}+mu_n >= -2n/3 for a matrix file");
  check_matrix->add_option("input", matrix_input, "matrix text file")->required();
  check_matrix->callback([&] { code = run_check_matrix(matrix_input, out); });

  int sweep_n = 0;
  bool allow_n8 = false;
  std::string checkpoint;
  auto* sweep = app.add_subcommand("sweep", "check every labeled graph of order n");
  sweep->add_option("n", sweep_n, "graph order (3..8)")->required();
  sweep->add_flag("--allow-n8", allow_n8, "opt in to the 268,435,456-graph order-8 sweep");
  sweep->add_option("--checkpoint", checkpoint, "resume from and update this checkpoint file");
  sweep->callback([&] { code = run_sweep(sweep_n, workers, allow_n8, checkpoint, out); });

  std::uint64_t stress_trials = 10000;
  int stress_n_min = 3, stress_n_max = 32;
  auto* stress = app.add_subcommand("stress", "random graphs through all four graph bounds");
  stress->add_option("--trials", stress_trials, "number of random graphs (default 10000)");
  stress->add_option("--n-min", stress_n_min, "smallest order (default 3)");
  stress->add_option("--n-max", stress_n_max, "largest order (default 32)");
  stress->callback(
      [&] { code = run_stress(stress_n_min, stress_n_max, stress_trials, seed, workers, out); });

  int descent_n = 0, descent_restarts = 32, descent_steps = 6000;
  auto* descent =
      app.add_subcommand("descent", "minimize lambda_{n-1} over matrices with entries in [0,1]");
  descent->add_option("n", descent_n, "matrix order (>= 2)")->required();
  descent->add_option("--restarts", descent_restarts, "random restarts (default 32)");
  descent->add_option("--steps", descent_steps, "subgradient steps per restart (default 6000)");
  descent->callback(
      [&] { code = run_descent(descent_n, descent_restarts, descent_steps, seed, workers, out); });

  int search_n = 0, search_restarts = 32, search_steps = 500;
  auto* search3 = app.add_subcommand("search3", "hill-climb for graphs with large lambda_3");
  search3->add_option("n", search_n, "graph order (>= 3)")->required();
  search3->add_option("--restarts", search_restarts, "random restarts (default 32)");
  search3->add_option("--steps", search_steps, "max moves per climb (default 500)");
  search3->callback(
      [&] { code = run_search3(search_n, search_restarts, search_steps, seed, workers, out); });

  std::uint64_t fuzz_trials = 100000;
  int fuzz_n_min = 2, fuzz_n_max = 16;
  bool adversarial = false;
  auto* fuzz = app.add_subcommand("fuzz", "random (matrix, frame) pairs through the proof trace");
  fuzz->add_option("--trials", fuzz_trials, "number of pairs (default 100000)");
  fuzz->add_option("--n-min", fuzz_n_min, "smallest order (default 2)");
  fuzz->add_option("--n-max", fuzz_n_max, "largest order (default 16)");
  fuzz->add_flag("--adversarial", adversarial,
                 "three-cluster near-tight frames with worst-case matrices");
  fuzz->callback([&] {
    code = run_fuzz(fuzz_n_min, fuzz_n_max, fuzz_trials, seed, adversarial, workers, out);
  });

  std::int64_t points = 1000000;
  auto* lemma = app.add_subcommand("lemma-grid", "scan the |cos| majorant gap over [-2pi, 2pi]");
  lemma->add_option("--points", points, "grid points (default 1000000)")
      ->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 32));
  lemma->callback([&] { code = run_lemma_grid(points, out); });

  for (auto* sc : app.get_subcommands({})) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return code;
}
