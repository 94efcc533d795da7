#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lowdiam/graph.hpp"
#include "lowdiam/parallel.hpp"
#include "lowdiam/rng.hpp"
#include "lowdiam/shifts.hpp"

namespace lowdiam {

// Partition of V: owner[v] is the center whose piece contains v.
// Centers own themselves; every piece is connected in the induced subgraph.
struct Decomposition {
  std::vector<Vertex> owner;

  std::vector<Vertex> centers() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < owner.size(); ++v)
      if (owner[v] == v) out.push_back(v);
    return out;
  }

  // Pieces keyed by center, ascending center id, members ascending.
  std::vector<std::pair<Vertex, std::vector<Vertex>>> pieces() const {
    std::vector<Vertex> cs = centers();
    std::vector<std::uint32_t> index(owner.size(), 0);
    for (std::size_t i = 0; i < cs.size(); ++i) index[cs[i]] = static_cast<std::uint32_t>(i);
    std::vector<std::pair<Vertex, std::vector<Vertex>>> out(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) out[i].first = cs[i];
    for (Vertex v = 0; v < owner.size(); ++v)
      if (owner[v] < owner.size() && owner[owner[v]] == owner[v])
        out[index[owner[v]]].second.push_back(v);
    return out;
  }
};

struct RunConfig {
  double beta = 0.1;           // target cut parameter, 0 < beta <= 1/2
  std::uint64_t seed = 0;
  TieBreak tiebreak = TieBreak::fractional;
  int max_retries = 10;        // attempt budget, >= 1
  double diam_threshold = -1;  // < 0: default 4*ln(max(n,2))/beta
  double cut_threshold = -1;   // < 0: default 2*beta*m
  int threads = 1;
};

struct RunReport {
  int retries = 0;                // attempts performed (1 = first try succeeded)
  long levels = 0;                // BFS rounds executed
  long long edge_touches = 0;     // directed edge relaxations + n source inserts
  long long cut_edges = 0;
  long max_piece_radius = 0;      // max intra-piece hop distance to the center
  double delta_max = 0.0;
  std::size_t pieces = 0;
  bool thresholds_met = true;
  double diam_threshold_used = 0.0;
  double cut_threshold_used = 0.0;
  std::uint64_t shift_seed = 0;   // substream that produced the returned shifts
};

inline long long count_cut_edges(const Graph& g, std::span<const Vertex> owner) {
  long long cut = 0;
  for (Vertex u = 0; u < g.n; ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v && owner[u] != owner[v]) ++cut;
  return cut;
}

// **************************************************************
// partition_once: delayed-start multi-source level-synchronous BFS.
//
// Vertex u has real start time delta_max - delta_u, split into an integer
// round floor(.) and a tie-break key. At the start of round L every
// still-unvisited vertex whose start round is L proposes itself as a center;
// vertices claimed in round L-1 propose their owner to unvisited neighbors.
// Per-vertex proposals are min-reduced by key, so the winner of each contested
// vertex -- and therefore the whole output -- is independent of the execution
// schedule. Empty rounds between components are skipped but the round index
// keeps counting virtual time, which keeps commit rounds equal to
// start_level(owner) + hop distance.
// **************************************************************
inline std::pair<Decomposition, RunReport> partition_once(const Graph& g,
                                                          const ShiftAssignment& s,
                                                          int threads = 1) {
  if (s.n() != g.n) throw std::invalid_argument("partition_once: shift count != vertex count");
  if (g.n == 0) throw std::invalid_argument("partition_once: empty graph");
  const std::uint32_t n = g.n;
  const double* key = s.key.data();

  std::vector<int> level(n);
  for (Vertex v = 0; v < n; ++v) level[v] = s.start_level(v);
  std::vector<Vertex> start_order(n);
  for (Vertex v = 0; v < n; ++v) start_order[v] = v;
  std::sort(start_order.begin(), start_order.end(),
            [&](Vertex a, Vertex b) { return level[a] != level[b] ? level[a] < level[b] : a < b; });

  std::vector<Vertex> owner(n, kNoVertex);
  std::vector<int> commit_level(n, -1);
  std::vector<std::atomic<Vertex>> claim(n);
  for (auto& c : claim) c.store(kNoVertex, std::memory_order_relaxed);
  std::vector<Vertex> frontier;
  std::vector<Vertex> newly(n);
  std::atomic<std::size_t> newly_count{0};
  std::atomic<long long> touches{0};
  ThreadPool pool(threads);

  auto propose = [&](Vertex w, Vertex c) {
    Vertex cur = claim[w].load(std::memory_order_relaxed);
    while (cur == kNoVertex || key[c] < key[cur]) {
      if (claim[w].compare_exchange_weak(cur, c, std::memory_order_relaxed)) {
        if (cur == kNoVertex)
          newly[newly_count.fetch_add(1, std::memory_order_relaxed)] = w;
        return;
      }
    }
  };

  std::size_t start_ptr = 0;
  std::uint32_t committed = 0;
  long rounds_executed = 0;
  int round = level[start_order[0]];
  while (committed < n) {
    std::size_t seed_begin = start_ptr;
    while (start_ptr < n && level[start_order[start_ptr]] <= round) ++start_ptr;
    ++rounds_executed;
    newly_count.store(0, std::memory_order_relaxed);

    pool.parallel_for(start_ptr - seed_begin, 512, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        Vertex v = start_order[seed_begin + i];
        if (owner[v] == kNoVertex) propose(v, v);
      }
    });

    pool.parallel_for(frontier.size(), 256, [&](std::size_t lo, std::size_t hi) {
      long long local = 0;
      for (std::size_t i = lo; i < hi; ++i) {
        Vertex u = frontier[i];
        Vertex c = owner[u];
        for (Vertex w : g.neighbors(u)) {
          ++local;
          if (owner[w] == kNoVertex) propose(w, c);
        }
      }
      touches.fetch_add(local, std::memory_order_relaxed);
    });

    std::size_t claimed = newly_count.load(std::memory_order_relaxed);
    pool.parallel_for(claimed, 512, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        Vertex w = newly[i];
        owner[w] = claim[w].load(std::memory_order_relaxed);
        commit_level[w] = round;
      }
    });
    committed += static_cast<std::uint32_t>(claimed);
    frontier.assign(newly.begin(), newly.begin() + claimed);

    if (committed == n) break;
    if (!frontier.empty())
      ++round;
    else
      round = level[start_order[start_ptr]];  // idle time between components
  }

  RunReport rep;
  rep.retries = 1;
  rep.levels = rounds_executed;
  rep.edge_touches = touches.load(std::memory_order_relaxed) + n;
  rep.delta_max = s.delta_max;
  rep.cut_edges = count_cut_edges(g, owner);
  for (Vertex v = 0; v < n; ++v) {
    rep.max_piece_radius = std::max(rep.max_piece_radius,
                                    static_cast<long>(commit_level[v] - level[owner[v]]));
    if (owner[v] == v) ++rep.pieces;
  }
  return {Decomposition{std::move(owner)}, rep};
}

inline double default_diam_threshold(std::uint32_t n, double beta) {
  return 4.0 * std::log(std::max<double>(n, 2.0)) / beta;
}

inline double default_cut_threshold(std::uint64_t m, double beta) {
  return 2.0 * beta * static_cast<double>(m);
}

// Retry wrapper: fresh shifts per attempt from seed-derived substreams until
// the cut and diameter thresholds are met or the attempt budget runs out.
// On exhaustion returns the attempt with the fewest cut edges,
// thresholds_met = false.
inline std::pair<Decomposition, RunReport> partition(const Graph& g, const RunConfig& cfg) {
  if (!(cfg.beta > 0.0 && cfg.beta <= 0.5))
    throw std::invalid_argument("partition: beta must be in (0, 1/2]");
  if (cfg.max_retries < 1) throw std::invalid_argument("partition: max_retries must be >= 1");
  const double diam_t =
      cfg.diam_threshold >= 0 ? cfg.diam_threshold : default_diam_threshold(g.n, cfg.beta);
  const double cut_t =
      cfg.cut_threshold >= 0 ? cfg.cut_threshold : default_cut_threshold(g.m, cfg.beta);

  Decomposition best_d;
  RunReport best_rep;
  for (int attempt = 1; attempt <= cfg.max_retries; ++attempt) {
    std::uint64_t shift_seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(attempt - 1));
    ShiftAssignment s = sample_shifts(g.n, cfg.beta, shift_seed, cfg.tiebreak);
    auto [d, rep] = partition_once(g, s, cfg.threads);
    rep.retries = attempt;
    rep.diam_threshold_used = diam_t;
    rep.cut_threshold_used = cut_t;
    rep.shift_seed = shift_seed;
    rep.thresholds_met =
        rep.cut_edges <= cut_t && 2.0 * static_cast<double>(rep.max_piece_radius) <= diam_t;
    if (rep.thresholds_met) return {std::move(d), rep};
    if (attempt == 1 || rep.cut_edges < best_rep.cut_edges) {
      best_d = std::move(d);
      best_rep = rep;
    }
  }
  best_rep.retries = cfg.max_retries;
  best_rep.thresholds_met = false;
  return {std::move(best_d), best_rep};
}

// Iterated beta = 1/2 decomposition: round i runs on the edges cut by every
// previous round, so the surviving edge count halves per round in expectation.
struct BlockDecomposition {
  std::vector<Decomposition> rounds;
  std::vector<std::uint64_t> surviving_edges;
};

inline BlockDecomposition block_decomposition(const Graph& g, int rounds, std::uint64_t seed,
                                              int threads = 1,
                                              TieBreak mode = TieBreak::fractional) {
  if (rounds < 1) throw std::invalid_argument("block_decomposition: rounds must be >= 1");
  BlockDecomposition out;
  out.rounds.reserve(rounds);
  std::vector<std::pair<Vertex, Vertex>> surviving = g.edges();
  Graph scratch;
  const Graph* cur = &g;
  for (int r = 0; r < rounds; ++r) {
    RunConfig cfg;
    cfg.beta = 0.5;
    cfg.seed = derive_seed(seed, static_cast<std::uint64_t>(r));
    cfg.tiebreak = mode;
    cfg.threads = threads;
    auto [d, rep] = partition(*cur, cfg);
    std::vector<std::pair<Vertex, Vertex>> next;
    next.reserve(surviving.size() / 2);
    for (auto [u, v] : surviving)
      if (d.owner[u] != d.owner[v]) next.emplace_back(u, v);
    surviving.swap(next);
    out.rounds.push_back(std::move(d));
    out.surviving_edges.push_back(surviving.size());
    if (r + 1 < rounds) {
      scratch = Graph::from_edges(g.n, surviving);
      cur = &scratch;
    }
  }
  return out;
}

}  // namespace lowdiam
