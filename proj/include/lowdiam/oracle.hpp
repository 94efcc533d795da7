#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "lowdiam/graph.hpp"
#include "lowdiam/partition.hpp"
#include "lowdiam/shifts.hpp"

namespace lowdiam {

inline constexpr long kInfiniteDiameter = std::numeric_limits<long>::max();

// Brute-force reference assignment: one full BFS per source, then for every
// vertex the (start level + distance, key) lexicographic minimum over all
// sources in its component. Deliberately naive, O(n*(n+m)); meant for graphs
// up to a couple thousand vertices. The engine must match this vertex for
// vertex on identical shifts.
inline Decomposition oracle_assign(const Graph& g, const ShiftAssignment& s) {
  if (s.n() != g.n) throw std::invalid_argument("oracle_assign: shift count != vertex count");
  const std::uint32_t n = g.n;
  std::vector<long> best_level(n, std::numeric_limits<long>::max());
  std::vector<Vertex> best(n, kNoVertex);
  for (Vertex u = 0; u < n; ++u) {
    std::vector<int> dist = bfs_distances(g, u);
    long lu = s.start_level(u);
    double ku = s.key[u];
    for (Vertex v = 0; v < n; ++v) {
      if (dist[v] == kUnreachable) continue;
      long arrival = lu + dist[v];
      if (arrival < best_level[v] ||
          (arrival == best_level[v] && ku < s.key[best[v]])) {
        best_level[v] = arrival;
        best[v] = u;
      }
    }
  }
  return Decomposition{std::move(best)};
}

namespace detail {

// Induced-subgraph CSR over the piece, local vertex ids.
struct PieceView {
  std::vector<std::uint32_t> offsets;
  std::vector<std::uint32_t> adj;
  std::size_t size() const { return offsets.size() - 1; }
};

inline PieceView induce_piece(const Graph& g, std::span<const Vertex> piece,
                              std::vector<std::int64_t>& local_of) {
  for (Vertex v : piece) {
    if (v >= g.n) throw std::invalid_argument("piece vertex out of range");
    local_of[v] = -1;
  }
  std::vector<Vertex> members;
  members.reserve(piece.size());
  for (Vertex v : piece) {
    if (local_of[v] == -1) {
      local_of[v] = static_cast<std::int64_t>(members.size());
      members.push_back(v);
    }
  }
  PieceView pv;
  pv.offsets.assign(members.size() + 1, 0);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Vertex w : g.neighbors(members[i]))
      if (local_of[w] >= 0) ++pv.offsets[i + 1];
  for (std::size_t i = 0; i < members.size(); ++i) pv.offsets[i + 1] += pv.offsets[i];
  pv.adj.resize(pv.offsets.back());
  std::vector<std::uint32_t> cursor(pv.offsets.begin(), pv.offsets.end() - 1);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Vertex w : g.neighbors(members[i]))
      if (local_of[w] >= 0) pv.adj[cursor[i]++] = static_cast<std::uint32_t>(local_of[w]);
  for (Vertex v : members) local_of[v] = -1;  // scratch back to clean
  return pv;
}

// BFS inside the piece view; returns eccentricity of src or -1 if the view is
// disconnected from src.
inline long piece_ecc(const PieceView& pv, std::uint32_t src, std::vector<int>& dist,
                      std::vector<std::uint32_t>& queue) {
  std::fill(dist.begin(), dist.begin() + pv.size(), kUnreachable);
  queue.clear();
  dist[src] = 0;
  queue.push_back(src);
  long ecc = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::uint32_t u = queue[head];
    for (std::uint32_t i = pv.offsets[u]; i < pv.offsets[u + 1]; ++i) {
      std::uint32_t w = pv.adj[i];
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        ecc = std::max(ecc, static_cast<long>(dist[w]));
        queue.push_back(w);
      }
    }
  }
  if (queue.size() != pv.size()) return -1;
  return ecc;
}

}  // namespace detail

// Exact strong diameter of the piece: all-pairs BFS restricted to piece
// vertices. kInfiniteDiameter when the induced subgraph is disconnected.
inline long piece_strong_diameter(const Graph& g, std::span<const Vertex> piece) {
  if (piece.empty()) throw std::invalid_argument("piece_strong_diameter: empty piece");
  std::vector<std::int64_t> local_of(g.n, -1);
  detail::PieceView pv = detail::induce_piece(g, piece, local_of);
  std::vector<int> dist(pv.size());
  std::vector<std::uint32_t> queue;
  queue.reserve(pv.size());
  long diam = 0;
  for (std::uint32_t src = 0; src < pv.size(); ++src) {
    long ecc = detail::piece_ecc(pv, src, dist, queue);
    if (ecc < 0) return kInfiniteDiameter;
    diam = std::max(diam, ecc);
  }
  return diam;
}

// Cut-edge witness per the midpoint argument: for a cut edge uv, both owners'
// shifted distances to the edge midpoint must be within `slack` (default 1) of
// the minimum over all vertices. Midpoint distances are exact half-integers,
// kept doubled so only the shift subtraction is floating point.
struct WitnessViolation {
  Vertex u, v;     // the cut edge
  Vertex center;   // offending owner
  double excess;   // how far beyond min + slack the owner landed
};

inline std::vector<WitnessViolation> midpoint_witness_check(const Graph& g,
                                                            const ShiftAssignment& s,
                                                            const Decomposition& d,
                                                            double slack = 1.0) {
  if (s.n() != g.n || d.owner.size() != g.n)
    throw std::invalid_argument("midpoint_witness_check: size mismatch");
  std::vector<WitnessViolation> out;
  for (Vertex u = 0; u < g.n; ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u >= v || d.owner[u] == d.owner[v]) continue;
      std::vector<int> du = bfs_distances(g, u);
      std::vector<int> dv = bfs_distances(g, v);
      double min_shifted = std::numeric_limits<double>::infinity();
      auto shifted_to_mid = [&](Vertex x) {
        long doubled = 2L * std::min(du[x], dv[x]) + 1;
        return 0.5 * static_cast<double>(doubled) - s.delta[x];
      };
      for (Vertex x = 0; x < g.n; ++x)
        if (du[x] != kUnreachable)
          min_shifted = std::min(min_shifted, shifted_to_mid(x));
      for (Vertex c : {d.owner[u], d.owner[v]}) {
        double val = shifted_to_mid(c);
        if (val > min_shifted + slack + 1e-9)
          out.push_back({u, v, c, val - min_shifted - slack});
      }
    }
  }
  return out;
}

}  // namespace lowdiam
