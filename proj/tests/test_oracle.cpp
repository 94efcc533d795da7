#include <catch2/catch.hpp>

#include "lowdiam/generators.hpp"
#include "lowdiam/oracle.hpp"
#include "lowdiam/partition.hpp"

using namespace lowdiam;

TEST_CASE("oracle_assign worked examples") {
  SECTION("path(5)") {
    Graph g = gen_path(5);
    auto s = shifts_from_values({0.3, 2.1, 0.5, 0.9, 1.7});
    REQUIRE(oracle_assign(g, s).owner == std::vector<Vertex>{1, 1, 1, 3, 4});
  }
  SECTION("single vertex") {
    auto s = shifts_from_values({0.4});
    REQUIRE(oracle_assign(gen_path(1), s).owner == std::vector<Vertex>{0});
  }
  SECTION("isolated vertices own themselves") {
    Graph g = Graph::from_edges(2, {});
    auto s = shifts_from_values({0.2, 5.0});
    REQUIRE(oracle_assign(g, s).owner == std::vector<Vertex>{0, 1});
  }
}

TEST_CASE("piece_strong_diameter") {
  Graph path3 = gen_path(3);
  Graph path5 = gen_path(5);
  SECTION("single vertex piece") {
    std::vector<Vertex> piece{2};
    REQUIRE(piece_strong_diameter(path5, piece) == 0);
  }
  SECTION("whole path") {
    std::vector<Vertex> piece{0, 1, 2, 3, 4};
    REQUIRE(piece_strong_diameter(path5, piece) == 4);
  }
  SECTION("induced-disconnected piece gets the infinite sentinel") {
    std::vector<Vertex> piece{0, 2};
    REQUIRE(piece_strong_diameter(path3, piece) == kInfiniteDiameter);
  }
  SECTION("vertex outside the graph is an input error") {
    std::vector<Vertex> piece{0, 7};
    REQUIRE_THROWS_AS(piece_strong_diameter(path3, piece), std::invalid_argument);
    REQUIRE_THROWS_AS(piece_strong_diameter(path3, {}), std::invalid_argument);
  }
}

TEST_CASE("midpoint witness check") {
  Graph g = gen_path(5);
  auto s = shifts_from_values({0.3, 2.1, 0.5, 0.9, 1.7});
  SECTION("zero cut edges gives an empty list") {
    Graph k = gen_complete(3);
    auto sk = shifts_from_values({5.0, 0.1, 0.3});
    auto [d, rep] = partition_once(k, sk);
    REQUIRE(rep.cut_edges == 0);
    REQUIRE(midpoint_witness_check(k, sk, d).empty());
  }
  SECTION("genuine decomposition passes") {
    auto [d, rep] = partition_once(g, s);
    REQUIRE(midpoint_witness_check(g, s, d).empty());
  }
  SECTION("corrupted owner array is flagged") {
    auto [d, rep] = partition_once(g, s);
    d.owner[0] = 0;
    REQUIRE_FALSE(midpoint_witness_check(g, s, d).empty());
  }
}

TEST_CASE("oracle pieces obey the shift radius bounds (fractional mode)") {
  for (int cas = 0; cas < 50; ++cas) {
    Rng rng(derive_seed(32, cas));
    Graph g = gen_gnp(2 + rng.next_below(60), 0.1, rng.next_u64());
    auto s = sample_shifts(g.n, 0.2, derive_seed(64, cas));
    Decomposition d = oracle_assign(g, s);
    for (auto& [c, members] : d.pieces()) {
      long diam = piece_strong_diameter(g, members);
      REQUIRE(diam != kInfiniteDiameter);
      REQUIRE(double(diam) <= 2.0 * s.delta[c]);
      REQUIRE(double(diam) <= 2.0 * s.delta_max);
    }
  }
}

TEST_CASE("witness check on genuine outputs, permutation mode needs the rounding slack") {
  // Integer rounding of start levels can push a permutation-mode owner up to
  // one unit past the exact-arithmetic witness bound; slack 2 always holds.
  int within_two = 0, total = 0;
  for (int cas = 0; cas < 40; ++cas) {
    Rng rng(derive_seed(48, cas));
    Graph g = gen_path(3 + rng.next_below(40));
    auto s = sample_shifts(g.n, 0.25, derive_seed(96, cas), TieBreak::permutation);
    auto [d, rep] = partition_once(g, s);
    ++total;
    if (midpoint_witness_check(g, s, d, 2.0).empty()) ++within_two;
  }
  REQUIRE(within_two == total);
}
