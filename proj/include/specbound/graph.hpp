#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "specbound/rng.hpp"
#include "specbound/sym_matrix.hpp"

namespace specbound::graphs {

/// Edge set of a labeled graph on n <= 11 vertices packed into one word,
/// bit k = edge with pair index k.
struct EdgeMask {
  int n = 0;
  std::uint64_t mask = 0;

  friend bool operator==(const EdgeMask&, const EdgeMask&) = default;
};

/// Lexicographic index of the unordered pair {i, j}, i < j: pairs sorted by
/// first then second endpoint, so (0,1) = 0, (0,2) = 1, ..., (1,2) = n-1, ...
inline int pair_index(int n, int i, int j) {
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

inline int pair_count(int n) { return n * (n - 1) / 2; }

/// Simple undirected graph on labeled vertices 0..n-1; edge bits are stored
/// in pair-index order across 64-bit words.
class Graph {
 public:
  explicit Graph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("Graph: order must be positive");
    bits_.assign((static_cast<std::size_t>(pair_count(n)) + 63) / 64, 0);
  }

  int order() const { return n_; }

  bool has_edge(int i, int j) const {
    const int k = checked_index(i, j);
    return (bits_[k >> 6] >> (k & 63)) & 1u;
  }

  void add_edge(int i, int j) {
    const int k = checked_index(i, j);
    bits_[k >> 6] |= std::uint64_t{1} << (k & 63);
  }

  void remove_edge(int i, int j) {
    const int k = checked_index(i, j);
    bits_[k >> 6] &= ~(std::uint64_t{1} << (k & 63));
  }

  void toggle_edge(int i, int j) {
    const int k = checked_index(i, j);
    bits_[k >> 6] ^= std::uint64_t{1} << (k & 63);
  }

  int degree(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
    int d = 0;
    for (int u = 0; u < n_; ++u)
      if (u != v && has_edge(u < v ? u : v, u < v ? v : u)) ++d;
    return d;
  }

  int edge_count() const {
    int total = 0;
    for (std::uint64_t w : bits_) total += std::popcount(w);
    return total;
  }

  linalg::SymMatrix adjacency() const {
    linalg::SymMatrix a(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (has_edge(i, j)) a.set(i, j, 1.0);
    return a;
  }

  const std::vector<std::uint64_t>& edge_bits() const { return bits_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int checked_index(int i, int j) const {
    if (i == j) throw std::invalid_argument("Graph: self-loops are not allowed");
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= n_) throw std::out_of_range("Graph: vertex out of range");
    return pair_index(n_, i, j);
  }

  int n_;
  std::vector<std::uint64_t> bits_;
};

/// Big-integer order on edge bits; coincides with EdgeMask order when the
/// graphs fit in one word. Orders must match.
inline bool edge_bits_less(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) throw std::invalid_argument("edge_bits_less: order mismatch");
  const auto& wa = a.edge_bits();
  const auto& wb = b.edge_bits();
  for (std::size_t k = wa.size(); k-- > 0;)
    if (wa[k] != wb[k]) return wa[k] < wb[k];
  return false;
}

inline EdgeMask to_mask(const Graph& g) {
  if (pair_count(g.order()) > 63)
    throw std::invalid_argument("to_mask: graph has more than 63 vertex pairs");
  return EdgeMask{g.order(), g.edge_bits().empty() ? 0 : g.edge_bits()[0]};
}

inline Graph from_mask(EdgeMask m) {
  if (m.n < 1) throw std::invalid_argument("from_mask: order must be positive");
  const int pairs = pair_count(m.n);
  if (pairs > 63) throw std::invalid_argument("from_mask: order admits more than 63 vertex pairs");
  if (pairs < 64 && (m.mask >> pairs) != 0)
    throw std::invalid_argument("from_mask: mask has bits beyond the last pair index");
  Graph g(m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j)
      if ((m.mask >> pair_index(m.n, i, j)) & 1u) g.add_edge(i, j);
  return g;
}

inline Graph complement(const Graph& g) {
  const int n = g.order();
  Graph h(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.has_edge(i, j)) h.add_edge(i, j);
  return h;
}

inline Graph disjoint_union(std::span<const Graph> parts) {
  if (parts.empty()) throw std::invalid_argument("disjoint_union: no parts");
  int n = 0;
  for (const Graph& p : parts) n += p.order();
  Graph g(n);
  int base = 0;
  for (const Graph& p : parts) {
    for (int i = 0; i < p.order(); ++i)
      for (int j = i + 1; j < p.order(); ++j)
        if (p.has_edge(i, j)) g.add_edge(base + i, base + j);
    base += p.order();
  }
  return g;
}

inline Graph clique(int k) {
  if (k < 1) throw std::invalid_argument("clique: order must be positive");
  Graph g(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
  return g;
}

inline Graph cycle(int k) {
  if (k < 3) throw std::invalid_argument("cycle: order must be at least 3");
  Graph g(k);
  for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
  return g;
}

/// Three disjoint copies of K_k; the extremal graphs for the lambda_3 bound.
inline Graph triple_clique(int k) {
  const Graph part = clique(k);
  const Graph parts[3] = {part, part, part};
  return disjoint_union(parts);
}

/// Replaces vertex v of g by sizes[v] fresh vertices. Blobs of adjacent
/// vertices are fully joined; inside a blob the vertices form a clique when
/// closed, an independent set otherwise. blow_up(K_3, {t,t,t}, false) is the
/// complete tripartite graph K_{t,t,t}.
inline Graph blow_up(const Graph& g, const std::vector<int>& sizes, bool closed) {
  if (static_cast<int>(sizes.size()) != g.order())
    throw std::invalid_argument("blow_up: one size per vertex required");
  int n = 0;
  for (int s : sizes) {
    if (s <= 0) throw std::invalid_argument("blow_up: sizes must be positive");
    n += s;
  }
  std::vector<int> base(sizes.size() + 1, 0);
  for (std::size_t v = 0; v < sizes.size(); ++v) base[v + 1] = base[v] + sizes[v];

  Graph h(n);
  for (int v = 0; v < g.order(); ++v) {
    if (closed)
      for (int a = base[v]; a < base[v + 1]; ++a)
        for (int b = a + 1; b < base[v + 1]; ++b) h.add_edge(a, b);
    for (int w = v + 1; w < g.order(); ++w)
      if (g.has_edge(v, w))
        for (int a = base[v]; a < base[v + 1]; ++a)
          for (int b = base[w]; b < base[w + 1]; ++b) h.add_edge(a, b);
  }
  return h;
}

///// G(n, p): each pair gets an edge independently, drawn in pair-index order.
inline Graph random_graph(int n, double p, Rng& rng) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("random_graph: p must lie in [0, 1]");
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.bernoulli(p)) g.add_edge(i, j);
  return g;
}

}  // namespace specbound::graphs
