#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "specbound/graph.hpp"

namespace specbound::graphs {

/// Malformed input; offset is the byte (or line, for line-oriented readers)
/// where decoding failed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " (offset " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Decodes one graph6 record (n <= 62 only). Accepts and strips the optional
/// ">>graph6<<" prefix and trailing CR/LF.
inline Graph graph6_read(std::string_view text) {
  constexpr std::string_view kPrefix = ">>graph6<<";
  std::size_t base = 0;
  if (text.substr(0, kPrefix.size()) == kPrefix) {
    text.remove_prefix(kPrefix.size());
    base = kPrefix.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  if (text.empty()) throw ParseError("graph6: empty input", base);
  const unsigned char header = static_cast<unsigned char>(text[0]);
  if (header == 126) throw ParseError("graph6: orders above 62 are not supported", base);
  if (header < 63 || header > 125) throw ParseError("graph6: invalid header byte", base);
  const int n = header - 63;
  if (n == 0) throw ParseError("graph6: order must be positive", base);

  const int bits = pair_count(n);
  const std::size_t need = (static_cast<std::size_t>(bits) + 5) / 6;
  if (text.size() - 1 != need)
    throw ParseError("graph6: expected " + std::to_string(need) + " data bytes, got " +
                         std::to_string(text.size() - 1),
                     base + text.size());

  Graph g(n);
  int k = 0;  // upper triangle, column-major
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t at = 1 + static_cast<std::size_t>(k) / 6;
      const unsigned char byte = static_cast<unsigned char>(text[at]);
      if (byte < 63 || byte > 126) throw ParseError("graph6: invalid data byte", base + at);
      if ((byte - 63) >> (5 - k % 6) & 1) g.add_edge(i, j);
    }
  }
  for (; k < static_cast<int>(need) * 6; ++k) {
    const std::size_t at = 1 + static_cast<std::size_t>(k) / 6;
    const unsigned char byte = static_cast<unsigned char>(text[at]);
    if (byte < 63 || byte > 126) throw ParseError("graph6: invalid data byte", base + at);
    if ((byte - 63) >> (5 - k % 6) & 1)
      throw ParseError("graph6: nonzero padding bits", base + at);
  }
  return g;
}

inline std::string graph6_write(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw std::invalid_argument("graph6_write: orders above 62 are not supported");
  std::string out(1 + (static_cast<std::size_t>(pair_count(n)) + 5) / 6, static_cast<char>(63));
  out[0] = static_cast<char>(n + 63);
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (g.has_edge(i, j)) out[1 + k / 6] += static_cast<char>(1 << (5 - k % 6));
  return out;
}

/// One graph per line; blank lines are skipped. Errors are rewrapped with the
/// 1-based line number.
inline std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv(line);
    while (!sv.empty() && (sv.back() == '\r' || sv.back() == ' ')) sv.remove_suffix(1);
    if (sv.empty()) continue;
    try {
      graphs.push_back(graph6_read(sv));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), lineno);
    }
  }
  return graphs;
}

/// Plain edge list: a header line "n m" followed by m lines "i j" with
/// 0-based endpoints.
inline Graph read_edge_list(std::istream& in) {
  int n = 0;
  long long m = -1;
  if (!(in >> n >> m)) throw ParseError("edge list: missing 'n m' header", 0);
  if (n < 1) throw ParseError("edge list: order must be positive", 0);
  if (m < 0 || m > pair_count(n)) throw ParseError("edge list: edge count out of range", 0);
  Graph g(n);
  for (long long e = 0; e < m; ++e) {
    int i = 0, j = 0;
    if (!(in >> i >> j))
      throw ParseError("edge list: expected edge " + std::to_string(e + 1) + " of " + std::to_string(m),
                       static_cast<std::size_t>(e + 1));
    if (i == j)
      throw ParseError("edge list: self-loop at vertex " + std::to_string(i),
                       static_cast<std::size_t>(e + 1));
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw ParseError("edge list: endpoint out of range in edge " + std::to_string(i) + " " +
                           std::to_string(j),
                       static_cast<std::size_t>(e + 1));
    g.add_edge(i, j);
  }
  return g;
}

inline Graph read_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (g.has_edge(i, j)) out << i << ' ' << j << '\n';
}

}  // namespace specbound::graphs
