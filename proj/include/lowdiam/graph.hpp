#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lowdiam {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();
inline constexpr int kUnreachable = -1;

// Immutable undirected unweighted graph in CSR form. Neighbor lists are
// sorted, symmetric, deduplicated and self-loop free; offsets has n+1 entries
// and adj has 2m entries. Safe for concurrent shared reads once built.
struct Graph {
  std::uint32_t n = 0;
  std::uint64_t m = 0;
  std::vector<std::uint64_t> offsets;
  std::vector<Vertex> adj;

  std::size_t degree(Vertex u) const { return offsets[u + 1] - offsets[u]; }

  std::span<const Vertex> neighbors(Vertex u) const {
    return {adj.data() + offsets[u], adj.data() + offsets[u + 1]};
  }

  // Undirected edges in canonical (u < v) order, ascending.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(m);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  static Graph from_edges(std::uint32_t n, std::span<const std::pair<Vertex, Vertex>> edges);
};

inline Graph Graph::from_edges(std::uint32_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  std::vector<std::pair<Vertex, Vertex>> canon;
  canon.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw std::invalid_argument("from_edges: vertex id " + std::to_string(std::max(u, v)) +
                                  " out of range for n=" + std::to_string(n));
    if (u == v)
      throw std::invalid_argument("from_edges: self-loop at vertex " + std::to_string(u));
    canon.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

  Graph g;
  g.n = n;
  g.m = canon.size();
  g.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  for (auto [u, v] : canon) {
    ++g.offsets[u + 1];
    ++g.offsets[v + 1];
  }
  for (std::uint32_t i = 0; i < n; ++i) g.offsets[i + 1] += g.offsets[i];
  g.adj.resize(2 * g.m);
  std::vector<std::uint64_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
  for (auto [u, v] : canon) {
    g.adj[cursor[u]++] = v;
    g.adj[cursor[v]++] = u;
  }
  for (Vertex u = 0; u < n; ++u)
    std::sort(g.adj.begin() + g.offsets[u], g.adj.begin() + g.offsets[u + 1]);
  return g;
}

// Validator pass: throws std::logic_error on any structural violation.
inline void check_graph(const Graph& g) {
  if (g.offsets.size() != static_cast<std::size_t>(g.n) + 1)
    throw std::logic_error("graph: offsets size mismatch");
  if (g.offsets.front() != 0 || g.offsets.back() != g.adj.size() || g.adj.size() != 2 * g.m)
    throw std::logic_error("graph: offset bounds mismatch");
  for (Vertex u = 0; u < g.n; ++u) {
    if (g.offsets[u] > g.offsets[u + 1]) throw std::logic_error("graph: offsets not monotone");
    auto nb = g.neighbors(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      Vertex v = nb[i];
      if (v >= g.n) throw std::logic_error("graph: neighbor out of range");
      if (v == u) throw std::logic_error("graph: self-loop");
      if (i > 0 && nb[i - 1] >= v) throw std::logic_error("graph: neighbors not sorted/unique");
      auto back = g.neighbors(v);
      if (!std::binary_search(back.begin(), back.end(), u))
        throw std::logic_error("graph: adjacency not symmetric");
    }
  }
}

// Hop distances from src; kUnreachable for other components.
inline std::vector<int> bfs_distances(const Graph& g, Vertex src) {
  if (src >= g.n) throw std::invalid_argument("bfs_distances: source out of range");
  std::vector<int> dist(g.n, kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.n);
  dist[src] = 0;
  queue.push_back(src);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace lowdiam
