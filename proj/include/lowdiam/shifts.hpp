#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "lowdiam/graph.hpp"
#include "lowdiam/rng.hpp"

namespace lowdiam {

enum class TieBreak { fractional, permutation };

// Per-vertex exponential shifts plus a strict total order used to break ties
// between equal integer shifted distances. In fractional mode the key of u is
// frac(delta_max - delta_u), so comparing (integer level, key) pairs is the
// same as comparing real shifted distances. In permutation mode the key is a
// seed-deterministic random permutation rank.
struct ShiftAssignment {
  double beta = 0.0;  // 0 when shifts were injected rather than sampled
  TieBreak mode = TieBreak::fractional;
  std::vector<double> delta;
  double delta_max = 0.0;
  std::vector<double> key;  // strict total order on vertices, smaller wins

  std::uint32_t n() const { return static_cast<std::uint32_t>(delta.size()); }

  // Integer BFS round at which vertex u enters the search as its own center.
  int start_level(Vertex u) const {
    return static_cast<int>(std::floor(delta_max - delta[u]));
  }
};

namespace detail {

inline bool keys_distinct(std::span<const double> key) {
  std::vector<double> sorted(key.begin(), key.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

inline std::vector<double> fractional_keys(std::span<const double> delta, double delta_max) {
  std::vector<double> key(delta.size());
  for (std::size_t u = 0; u < delta.size(); ++u) {
    double t = delta_max - delta[u];
    key[u] = t - std::floor(t);
  }
  return key;
}

inline std::vector<double> permutation_keys(std::size_t n, std::uint64_t seed) {
  std::vector<double> key(n);
  std::vector<std::uint32_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[i] = static_cast<std::uint32_t>(i);
  Rng rng(derive_seed(seed, 0x7065726dULL));  // dedicated permutation stream
  for (std::size_t i = n; i > 1; --i)
    std::swap(rank[i - 1], rank[rng.next_below(i)]);
  for (std::size_t i = 0; i < n; ++i) key[i] = static_cast<double>(rank[i]);
  return key;
}

}  // namespace detail

// n i.i.d. samples from Exp(beta) plus tie-break keys, deterministic in seed.
// Exact fractional-key collisions (probability ~0, but possible after the
// floor) trigger a full re-draw from the next substream.
inline ShiftAssignment sample_shifts(std::uint32_t n, double beta, std::uint64_t seed,
                                     TieBreak mode = TieBreak::fractional) {
  if (n < 1) throw std::invalid_argument("sample_shifts: n must be >= 1");
  if (!(beta > 0.0)) throw std::invalid_argument("sample_shifts: beta must be > 0");
  ShiftAssignment s;
  s.beta = beta;
  s.mode = mode;
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng(derive_seed(seed, attempt));
    s.delta.resize(n);
    s.delta_max = 0.0;
    for (std::uint32_t u = 0; u < n; ++u) {
      s.delta[u] = rng.exponential(beta);
      s.delta_max = std::max(s.delta_max, s.delta[u]);
    }
    if (mode == TieBreak::permutation) {
      s.key = detail::permutation_keys(n, seed);
      return s;
    }
    s.key = detail::fractional_keys(s.delta, s.delta_max);
    if (detail::keys_distinct(s.key)) return s;
  }
}

// Wraps externally supplied shift values (e.g. a worked example or a replay
// file). Fractional-key collisions cannot be resampled here and are an error.
inline ShiftAssignment shifts_from_values(std::vector<double> delta,
                                          TieBreak mode = TieBreak::fractional,
                                          std::uint64_t seed = 0, double beta = 0.0) {
  if (delta.empty()) throw std::invalid_argument("shifts_from_values: empty shift list");
  ShiftAssignment s;
  s.beta = beta;
  s.mode = mode;
  s.delta = std::move(delta);
  for (double d : s.delta)
    if (!(d >= 0.0)) throw std::invalid_argument("shifts_from_values: shifts must be >= 0");
  s.delta_max = *std::max_element(s.delta.begin(), s.delta.end());
  if (mode == TieBreak::permutation) {
    s.key = detail::permutation_keys(s.delta.size(), seed);
  } else {
    s.key = detail::fractional_keys(s.delta, s.delta_max);
    if (!detail::keys_distinct(s.key))
      throw std::invalid_argument("shifts_from_values: tie-break key collision");
  }
  return s;
}

// X_(1), X_(2)-X_(1), ..., X_(n)-X_(n-1) of the sorted samples.
inline std::vector<double> order_statistic_gaps(std::span<const double> samples) {
  if (samples.empty()) throw std::invalid_argument("order_statistic_gaps: empty input");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> gaps(sorted.size());
  gaps[0] = sorted[0];
  for (std::size_t i = 1; i < sorted.size(); ++i) gaps[i] = sorted[i] - sorted[i - 1];
  return gaps;
}

}  // namespace lowdiam
