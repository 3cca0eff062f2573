// Walks some named graph families through every bound check and prints a
// small table; the triple cliques and complete tripartite graphs land exactly
// on their bounds.

#include <cstdio>
#include <string>
#include <vector>

#include "specbound/specbound.hpp"

namespace {

using specbound::graphs::Graph;

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);                // spokes
  }
  return g;
}

void print_reports(const std::string& label, const Graph& g) {
  const auto spectrum = specbound::certify::graph_spectrum(g);
  std::printf("%-18s n=%-3d lambda = [", label.c_str(), g.order());
  for (int i = 1; i <= spectrum.order(); ++i)
    std::printf("%s%.4f", i > 1 ? ", " : "", spectrum.eig(i));
  std::printf("]\n");
  for (const auto& rep : specbound::explore::graph_check_suite(g)) {
    std::printf("  %-18s %10.6f vs %10.6f  slack %.2e%s\n", rep.name.c_str(), rep.quantity,
                rep.bound, rep.slack, rep.tight ? "  <- tight" : "");
  }
}

}  // namespace

int main() {
  for (int k = 1; k <= 4; ++k)
    print_reports("triple_clique(" + std::to_string(k) + ")", specbound::graphs::triple_clique(k));
  for (int t = 1; t <= 3; ++t) {
    const auto g = specbound::graphs::blow_up(specbound::graphs::clique(3), {t, t, t}, false);
    const std::string ts = std::to_string(t);
    print_reports("K_{" + ts + "," + ts + "," + ts + "}", g);
  }
  print_reports("petersen", petersen());
  print_reports("cycle(7)", specbound::graphs::cycle(7));

  const auto descent = specbound::explore::polytope_descent(6, 8, 1500, 0);
  std::printf("\ndescent n=6: best lambda_{n-1} = %.6f (floor -2), %llu iterations\n",
              descent.best_lambda, static_cast<unsigned long long>(descent.iterations));
  return 0;
}
