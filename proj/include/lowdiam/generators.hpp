#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lowdiam/graph.hpp"
#include "lowdiam/rng.hpp"

namespace lowdiam {

// rows x cols lattice; vertex (r, c) is r*cols + c.
// n = rows*cols, m = rows*(cols-1) + cols*(rows-1).
inline Graph gen_grid(std::uint32_t rows, std::uint32_t cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("gen_grid: dimensions must be >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(rows) * (cols - 1) + static_cast<std::size_t>(cols) * (rows - 1));
  for (std::uint32_t r = 0; r < rows; ++r) {
    for (std::uint32_t c = 0; c < cols; ++c) {
      Vertex v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return Graph::from_edges(rows * cols, edges);
}

inline Graph gen_path(std::uint32_t n) {
  if (n < 1) throw std::invalid_argument("gen_path: n must be >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(n - 1);
  for (std::uint32_t v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

inline Graph gen_complete(std::uint32_t n) {
  if (n < 1) throw std::invalid_argument("gen_complete: n must be >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

// Erdos-Renyi G(n, p), seed-deterministic. Enumerates present pairs by
// geometric skips over the C(n,2) pair index space, so the cost is O(n + m).
inline Graph gen_gnp(std::uint32_t n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_gnp: n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gen_gnp: p must be in [0, 1]");
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (p >= 1.0) return gen_complete(n);
  if (p > 0.0 && total > 0) {
    // pairs_before(i) = number of pairs whose first endpoint is < i
    auto pairs_before = [&](std::uint64_t i) {
      return i * (2 * n - i - 1) / 2;
    };
    Rng rng(seed);
    double log1mp = std::log1p(-p);
    std::uint64_t k = 0;
    while (k < total) {
      double u = rng.uniform01();
      double skip_d = std::floor(std::log(u) / log1mp);
      if (skip_d >= static_cast<double>(total - k)) break;
      k += static_cast<std::uint64_t>(skip_d);
      std::uint64_t i = static_cast<std::uint64_t>(
          std::floor(n - 0.5 - std::sqrt((n - 0.5) * (n - 0.5) - 2.0 * static_cast<double>(k))));
      while (i + 1 < n && pairs_before(i + 1) <= k) ++i;
      while (i > 0 && pairs_before(i) > k) --i;
      std::uint64_t j = i + 1 + (k - pairs_before(i));
      edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      ++k;
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace lowdiam
