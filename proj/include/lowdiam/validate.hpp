#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lowdiam/graph.hpp"
#include "lowdiam/oracle.hpp"
#include "lowdiam/partition.hpp"

namespace lowdiam {

struct ValidationReport {
  bool is_partition = false;      // every vertex assigned, owners are centers
  bool pieces_connected = false;
  long long cut_edges = 0;
  double cut_fraction = 0.0;
  long max_strong_diameter = 0;   // kInfiniteDiameter if a piece is disconnected
  bool diameter_exact = true;     // false if any piece used the 2*ecc proxy
  bool pass_cut = false;
  bool pass_diam = false;
  double cut_threshold = 0.0;
  double diam_threshold = 0.0;
  std::vector<std::string> violations;

  bool ok() const { return is_partition && pieces_connected && pass_cut && pass_diam; }
};

namespace detail {

// Exact all-pairs diameter for pieces up to exact_limit vertices; above that,
// twice the center's in-piece eccentricity, a certified upper bound.
struct PieceDiameter {
  long value = 0;
  bool exact = true;
  bool connected = true;
};

inline PieceDiameter piece_diameter_bounded(const Graph& g, Vertex center,
                                            std::span<const Vertex> members,
                                            std::size_t exact_limit,
                                            std::vector<std::int64_t>& scratch) {
  PieceDiameter r;
  PieceView pv = induce_piece(g, members, scratch);
  std::vector<int> dist(pv.size());
  std::vector<std::uint32_t> queue;
  queue.reserve(pv.size());
  if (members.size() <= exact_limit) {
    for (std::uint32_t src = 0; src < pv.size(); ++src) {
      long ecc = piece_ecc(pv, src, dist, queue);
      if (ecc < 0) {
        r.connected = false;
        r.value = kInfiniteDiameter;
        return r;
      }
      r.value = std::max(r.value, ecc);
    }
  } else {
    std::uint32_t local_center = 0;
    for (std::size_t i = 0; i < members.size(); ++i)
      if (members[i] == center) local_center = static_cast<std::uint32_t>(i);
    long ecc = piece_ecc(pv, local_center, dist, queue);
    if (ecc < 0) {
      r.connected = false;
      r.value = kInfiniteDiameter;
      return r;
    }
    r.value = 2 * ecc;
    r.exact = false;
  }
  return r;
}

}  // namespace detail

// Max strong diameter across pieces; second element reports whether every
// piece was measured exactly.
inline std::pair<long, bool> max_strong_diameter(const Graph& g, const Decomposition& d,
                                                 std::size_t exact_limit = 5000) {
  long diam = 0;
  bool exact = true;
  std::vector<std::int64_t> scratch(g.n, -1);
  for (const auto& [center, members] : d.pieces()) {
    auto pd = detail::piece_diameter_bounded(g, center, members, exact_limit, scratch);
    if (!pd.connected) return {kInfiniteDiameter, exact};
    diam = std::max(diam, pd.value);
    exact = exact && pd.exact;
  }
  return {diam, exact};
}

// Structural + threshold validation of a decomposition. Bad owner arrays are
// reported as validation failures, never exceptions. Thresholds default to
// the partition defaults so genuine successful runs validate clean.
inline ValidationReport validate(const Graph& g, const Decomposition& d, double beta,
                                 double diam_threshold = -1, double cut_threshold = -1,
                                 std::size_t exact_diameter_limit = 5000) {
  ValidationReport r;
  r.diam_threshold = diam_threshold >= 0 ? diam_threshold : default_diam_threshold(g.n, beta);
  r.cut_threshold = cut_threshold >= 0 ? cut_threshold : default_cut_threshold(g.m, beta);
  if (d.owner.size() != g.n) {
    r.violations.push_back("owner array has " + std::to_string(d.owner.size()) +
                           " entries for n=" + std::to_string(g.n));
    return r;
  }
  constexpr std::size_t kMaxListed = 16;
  std::size_t bad = 0;
  for (Vertex v = 0; v < g.n; ++v) {
    Vertex o = d.owner[v];
    std::string why;
    if (o == kNoVertex)
      why = "vertex " + std::to_string(v) + " unassigned";
    else if (o >= g.n)
      why = "vertex " + std::to_string(v) + " owned by out-of-range id " + std::to_string(o);
    else if (d.owner[o] != o)
      why = "vertex " + std::to_string(v) + " owned by non-center " + std::to_string(o);
    if (!why.empty()) {
      if (++bad <= kMaxListed) r.violations.push_back(why);
    }
  }
  if (bad > kMaxListed)
    r.violations.push_back("... and " + std::to_string(bad - kMaxListed) + " more");
  r.is_partition = bad == 0;
  if (!r.is_partition) return r;

  r.pieces_connected = true;
  std::vector<std::int64_t> scratch(g.n, -1);
  bool exact = true;
  for (const auto& [center, members] : d.pieces()) {
    auto pd = detail::piece_diameter_bounded(g, center, members, exact_diameter_limit, scratch);
    if (!pd.connected) {
      r.pieces_connected = false;
      r.violations.push_back("piece of center " + std::to_string(center) + " is disconnected");
      r.max_strong_diameter = kInfiniteDiameter;
    }
    if (r.max_strong_diameter != kInfiniteDiameter)
      r.max_strong_diameter = std::max(r.max_strong_diameter, pd.value);
    exact = exact && pd.exact;
  }
  r.diameter_exact = exact;

  r.cut_edges = count_cut_edges(g, d.owner);
  r.cut_fraction = g.m == 0 ? 0.0 : static_cast<double>(r.cut_edges) / static_cast<double>(g.m);
  r.pass_cut = static_cast<double>(r.cut_edges) <= r.cut_threshold;
  r.pass_diam = r.max_strong_diameter != kInfiniteDiameter &&
                static_cast<double>(r.max_strong_diameter) <= r.diam_threshold;
  if (!r.pass_cut)
    r.violations.push_back("cut_edges " + std::to_string(r.cut_edges) + " above threshold");
  if (!r.pass_diam)
    r.violations.push_back("max strong diameter above threshold");
  return r;
}

}  // namespace lowdiam
