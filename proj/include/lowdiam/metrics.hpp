#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "lowdiam/graph.hpp"
#include "lowdiam/parallel.hpp"
#include "lowdiam/partition.hpp"
#include "lowdiam/rng.hpp"
#include "lowdiam/shifts.hpp"
#include "lowdiam/validate.hpp"

namespace lowdiam {

// Compensated summation so aggregation stays order-independent in practice:
// trial results land in a per-trial slot first, then are reduced in index
// order regardless of which thread produced them.
struct KahanSum {
  double sum = 0.0, carry = 0.0;
  void add(double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      carry += (sum - t) + x;
    else
      carry += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + carry; }
};

namespace detail {

struct MeanStd {
  double mean = 0.0, stddev = 0.0, stderr_mean = 0.0;
};

inline MeanStd mean_std(std::span<const double> xs) {
  MeanStd r;
  if (xs.empty()) return r;
  KahanSum s;
  for (double x : xs) s.add(x);
  r.mean = s.value() / static_cast<double>(xs.size());
  KahanSum sq;
  for (double x : xs) sq.add((x - r.mean) * (x - r.mean));
  r.stddev = xs.size() > 1 ? std::sqrt(sq.value() / static_cast<double>(xs.size() - 1)) : 0.0;
  r.stderr_mean = r.stddev / std::sqrt(static_cast<double>(xs.size()));
  return r;
}

}  // namespace detail

struct CutProbabilityStats {
  int trials = 0;
  double mean_cut_fraction = 0.0;
  double std_cut_fraction = 0.0;
  double stderr_cut_fraction = 0.0;
  double max_edge_frequency = 0.0;  // most frequently cut single edge
};

// Fresh shifts per trial, one partition_once each; per-edge cut counts kept
// exactly so the summary is independent of trial scheduling.
inline CutProbabilityStats cut_probability_experiment(const Graph& g, double beta, int trials,
                                                      std::uint64_t seed,
                                                      TieBreak mode = TieBreak::fractional,
                                                      int threads = 1) {
  if (trials < 1) throw std::invalid_argument("cut_probability_experiment: trials must be >= 1");
  auto edge_list = g.edges();
  std::vector<std::atomic<int>> edge_cuts(edge_list.size());
  for (auto& c : edge_cuts) c.store(0, std::memory_order_relaxed);
  std::vector<double> fractions(trials, 0.0);

  ThreadPool pool(threads);
  pool.parallel_for(static_cast<std::size_t>(trials), 1, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t t = lo; t < hi; ++t) {
      ShiftAssignment s = sample_shifts(g.n, beta, derive_seed(seed, t), mode);
      auto [d, rep] = partition_once(g, s, 1);
      for (std::size_t k = 0; k < edge_list.size(); ++k)
        if (d.owner[edge_list[k].first] != d.owner[edge_list[k].second])
          edge_cuts[k].fetch_add(1, std::memory_order_relaxed);
      fractions[t] = g.m == 0 ? 0.0
                              : static_cast<double>(rep.cut_edges) / static_cast<double>(g.m);
    }
  });

  CutProbabilityStats out;
  out.trials = trials;
  auto ms = detail::mean_std(fractions);
  out.mean_cut_fraction = ms.mean;
  out.std_cut_fraction = ms.stddev;
  out.stderr_cut_fraction = ms.stderr_mean;
  int max_cuts = 0;
  for (auto& c : edge_cuts) max_cuts = std::max(max_cuts, c.load(std::memory_order_relaxed));
  out.max_edge_frequency = static_cast<double>(max_cuts) / static_cast<double>(trials);
  return out;
}

struct MaxShiftStats {
  int trials = 0;
  double mean_delta_max = 0.0;
  double std_delta_max = 0.0;
};

inline MaxShiftStats max_shift_experiment(std::uint32_t n, double beta, int trials,
                                          std::uint64_t seed) {
  if (n < 1 || trials < 1 || !(beta > 0))
    throw std::invalid_argument("max_shift_experiment: bad arguments");
  std::vector<double> maxima(trials);
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    double mx = 0.0;
    for (std::uint32_t i = 0; i < n; ++i) mx = std::max(mx, rng.exponential(beta));
    maxima[t] = mx;
  }
  auto ms = detail::mean_std(maxima);
  return {trials, ms.mean, ms.stddev};
}

struct MidpointGapStats {
  int trials = 0;
  double frequency = 0.0;    // fraction of trials with 2nd-min within c of min
  double stderr_freq = 0.0;
};

// Empirical close-probability at the midpoint of edge uv: distances to the
// midpoint are fixed half-integers, only the shifts are redrawn per trial.
inline MidpointGapStats midpoint_gap_experiment(const Graph& g, Vertex u, Vertex v, double c,
                                                double beta, int trials, std::uint64_t seed) {
  if (u >= g.n || v >= g.n) throw std::invalid_argument("midpoint_gap_experiment: bad edge");
  auto nb = g.neighbors(u);
  if (!std::binary_search(nb.begin(), nb.end(), v))
    throw std::invalid_argument("midpoint_gap_experiment: uv is not an edge");
  if (trials < 1 || !(beta > 0) || !(c > 0))
    throw std::invalid_argument("midpoint_gap_experiment: bad arguments");
  std::vector<int> du = bfs_distances(g, u);
  std::vector<int> dv = bfs_distances(g, v);
  std::vector<double> mid;  // midpoint distance for each vertex in the component
  mid.reserve(g.n);
  for (Vertex x = 0; x < g.n; ++x)
    if (du[x] != kUnreachable) mid.push_back(0.5 + std::min(du[x], dv[x]));

  int close = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    double lo = std::numeric_limits<double>::infinity(), second = lo;
    for (double dm : mid) {
      double val = dm - rng.exponential(beta);
      if (val < lo) {
        second = lo;
        lo = val;
      } else if (val < second) {
        second = val;
      }
    }
    if (mid.size() > 1 && second - lo <= c) ++close;
  }
  MidpointGapStats out;
  out.trials = trials;
  out.frequency = static_cast<double>(close) / trials;
  out.stderr_freq = std::sqrt(out.frequency * (1.0 - out.frequency) / trials);
  return out;
}

struct SweepRow {
  double beta = 0.0;
  int trials = 0;
  double mean_cut_fraction = 0.0;
  double std_cut_fraction = 0.0;
  double mean_max_diameter = 0.0;
  double mean_delta_max = 0.0;
  double mean_retries = 0.0;
};

struct SweepStats {
  std::vector<SweepRow> rows;
  bool cut_fraction_monotone = false;  // non-decreasing across the given beta order
  bool diameter_monotone = false;      // non-increasing across the given beta order
};

// Full experiment grid over betas; each trial is an independent partition()
// run (retry wrapper included, so mean_retries is meaningful).
inline SweepStats sweep(const Graph& g, std::span<const double> betas, int trials,
                        std::uint64_t seed, int threads = 1,
                        TieBreak mode = TieBreak::fractional,
                        std::size_t exact_diameter_limit = 5000) {
  if (betas.empty()) throw std::invalid_argument("sweep: empty beta list");
  for (double b : betas)
    if (!(b > 0.0 && b <= 0.5)) throw std::invalid_argument("sweep: beta must be in (0, 1/2]");
  if (trials < 1) throw std::invalid_argument("sweep: trials must be >= 1");

  SweepStats out;
  ThreadPool pool(threads);
  for (std::size_t bi = 0; bi < betas.size(); ++bi) {
    std::vector<double> cut(trials), diam(trials), dmax(trials), retr(trials);
    std::uint64_t row_seed = derive_seed(seed, bi);
    pool.parallel_for(static_cast<std::size_t>(trials), 1, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t t = lo; t < hi; ++t) {
        RunConfig cfg;
        cfg.beta = betas[bi];
        cfg.seed = derive_seed(row_seed, t);
        cfg.tiebreak = mode;
        cfg.threads = 1;
        auto [d, rep] = partition(g, cfg);
        cut[t] = g.m == 0 ? 0.0 : static_cast<double>(rep.cut_edges) / static_cast<double>(g.m);
        diam[t] = static_cast<double>(max_strong_diameter(g, d, exact_diameter_limit).first);
        dmax[t] = rep.delta_max;
        retr[t] = static_cast<double>(rep.retries);
      }
    });
    SweepRow row;
    row.beta = betas[bi];
    row.trials = trials;
    auto mc = detail::mean_std(cut);
    row.mean_cut_fraction = mc.mean;
    row.std_cut_fraction = mc.stddev;
    row.mean_max_diameter = detail::mean_std(diam).mean;
    row.mean_delta_max = detail::mean_std(dmax).mean;
    row.mean_retries = detail::mean_std(retr).mean;
    out.rows.push_back(row);
  }
  out.cut_fraction_monotone = true;
  out.diameter_monotone = true;
  for (std::size_t i = 1; i < out.rows.size(); ++i) {
    if (out.rows[i].mean_cut_fraction < out.rows[i - 1].mean_cut_fraction)
      out.cut_fraction_monotone = false;
    if (out.rows[i].mean_max_diameter > out.rows[i - 1].mean_max_diameter)
      out.diameter_monotone = false;
  }
  return out;
}

inline void write_sweep_csv(const SweepStats& stats, std::ostream& out) {
  out << "beta,trials,mean_cut_fraction,std_cut_fraction,mean_max_diameter,"
         "mean_delta_max,mean_retries\n";
  char buf[256];
  for (const SweepRow& r : stats.rows) {
    std::snprintf(buf, sizeof buf, "%.9g,%d,%.9g,%.9g,%.9g,%.9g,%.9g\n", r.beta, r.trials,
                  r.mean_cut_fraction, r.std_cut_fraction, r.mean_max_diameter, r.mean_delta_max,
                  r.mean_retries);
    out << buf;
  }
}

}  // namespace lowdiam
