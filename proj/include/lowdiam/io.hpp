#pragma once

#include <cstdint>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lowdiam/graph.hpp"

namespace lowdiam {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Edge-list text format:
//   p <n> <m>
//   <u> <v>        (one per undirected edge, 0-based, u < v canonical on save)
// Lines starting with '#' are ignored on load.
inline Graph load_edgelist(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::uint32_t n = 0;
  std::uint64_t m = 0;
  bool have_header = false;
  std::vector<std::pair<Vertex, Vertex>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    if (!have_header) {
      char tag = 0;
      if (!(ls >> tag) || tag != 'p' || !(ls >> n >> m))
        throw ParseError(lineno, "expected header 'p <n> <m>'");
      have_header = true;
      edges.reserve(m);
      continue;
    }
    long long u = -1, v = -1;
    if (!(ls >> u >> v)) throw ParseError(lineno, "expected edge '<u> <v>'");
    if (u < 0 || v < 0 || u >= static_cast<long long>(n) || v >= static_cast<long long>(n))
      throw ParseError(lineno, "vertex id out of range");
    if (u == v) throw ParseError(lineno, "self-loop");
    if (edges.size() == m) throw ParseError(lineno, "more edges than declared");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!have_header) throw ParseError(lineno, "missing header 'p <n> <m>'");
  if (edges.size() != m)
    throw ParseError(lineno, "declared " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges.size()));
  Graph g = Graph::from_edges(n, edges);
  if (g.m != m) throw ParseError(lineno, "duplicate edges in input");
  return g;
}

inline void save_edgelist(const Graph& g, std::ostream& out) {
  out << "p " << g.n << ' ' << g.m << '\n';
  for (Vertex u = 0; u < g.n; ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v) out << u << ' ' << v << '\n';
}

// Labels: one line per vertex, `<vertex> <center>`, ascending vertex order.
inline void save_labels(std::span<const Vertex> owner, std::ostream& out) {
  for (std::size_t v = 0; v < owner.size(); ++v) out << v << ' ' << owner[v] << '\n';
}

// Loads labels into a dense owner array sized n. Vertices absent from the
// file are left as kNoVertex so downstream validation can flag the hole.
inline std::vector<Vertex> load_labels(std::istream& in, std::uint32_t n) {
  std::vector<Vertex> owner(n, kNoVertex);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    long long v = -1, c = -1;
    if (!(ls >> v >> c)) throw ParseError(lineno, "expected '<vertex> <center>'");
    if (v < 0 || v >= static_cast<long long>(n)) throw ParseError(lineno, "vertex id out of range");
    if (c < 0 || c >= static_cast<long long>(n)) throw ParseError(lineno, "center id out of range");
    owner[static_cast<std::size_t>(v)] = static_cast<Vertex>(c);
  }
  return owner;
}

// Shift dump: `<vertex> <delta>` per line, full precision for exact replay.
inline void save_shift_values(std::span<const double> delta, std::ostream& out) {
  char buf[64];
  for (std::size_t v = 0; v < delta.size(); ++v) {
    std::snprintf(buf, sizeof buf, "%zu %.17g\n", v, delta[v]);
    out << buf;
  }
}

inline std::vector<double> load_shift_values(std::istream& in, std::uint32_t n) {
  std::vector<double> delta(n, -1.0);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    long long v = -1;
    double d = 0;
    if (!(ls >> v >> d)) throw ParseError(lineno, "expected '<vertex> <delta>'");
    if (v < 0 || v >= static_cast<long long>(n)) throw ParseError(lineno, "vertex id out of range");
    if (d < 0) throw ParseError(lineno, "negative shift");
    delta[static_cast<std::size_t>(v)] = d;
  }
  for (std::size_t v = 0; v < delta.size(); ++v)
    if (delta[v] < 0) throw ParseError(lineno, "missing shift for vertex " + std::to_string(v));
  return delta;
}

}  // namespace lowdiam
