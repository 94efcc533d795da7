#include <catch2/catch.hpp>

#include <cstdlib>
#include <sstream>

#include "lowdiam/generators.hpp"
#include "lowdiam/graph.hpp"
#include "lowdiam/io.hpp"

using namespace lowdiam;

TEST_CASE("from_edges builds symmetric deduplicated CSR") {
  SECTION("single edge") {
    std::vector<std::pair<Vertex, Vertex>> e{{0, 1}};
    Graph g = Graph::from_edges(2, e);
    REQUIRE(g.n == 2);
    REQUIRE(g.m == 1);
    REQUIRE(g.degree(0) == 1);
    REQUIRE(g.neighbors(0)[0] == 1);
    REQUIRE(g.neighbors(1)[0] == 0);
    check_graph(g);
  }
  SECTION("reversed duplicates collapse") {
    std::vector<std::pair<Vertex, Vertex>> e{{0, 1}, {1, 0}, {1, 2}};
    Graph g = Graph::from_edges(3, e);
    REQUIRE(g.m == 2);
    check_graph(g);
  }
  SECTION("empty graph") {
    Graph g = Graph::from_edges(1, {});
    REQUIRE(g.n == 1);
    REQUIRE(g.m == 0);
    check_graph(g);
  }
  SECTION("input errors") {
    std::vector<std::pair<Vertex, Vertex>> oob{{0, 2}};
    REQUIRE_THROWS_AS(Graph::from_edges(2, oob), std::invalid_argument);
    std::vector<std::pair<Vertex, Vertex>> loop{{1, 1}};
    REQUIRE_THROWS_AS(Graph::from_edges(2, loop), std::invalid_argument);
  }
}

TEST_CASE("generators produce the advertised sizes") {
  Graph grid = gen_grid(3, 3);
  REQUIRE(grid.n == 9);
  REQUIRE(grid.m == 12);
  check_graph(grid);

  Graph path = gen_path(5);
  REQUIRE(path.n == 5);
  REQUIRE(path.m == 4);

  Graph complete = gen_complete(4);
  REQUIRE(complete.m == 6);

  REQUIRE_THROWS_AS(gen_grid(0, 3), std::invalid_argument);
  REQUIRE_THROWS_AS(gen_path(0), std::invalid_argument);
  REQUIRE_THROWS_AS(gen_gnp(5, 1.5, 0), std::invalid_argument);
}

TEST_CASE("grid BFS distances equal Manhattan distance") {
  const std::uint32_t rows = 7, cols = 5;
  Graph g = gen_grid(rows, cols);
  Vertex src = 2 * cols + 3;
  auto dist = bfs_distances(g, src);
  for (std::uint32_t r = 0; r < rows; ++r)
    for (std::uint32_t c = 0; c < cols; ++c)
      REQUIRE(dist[r * cols + c] == std::abs(int(r) - 2) + std::abs(int(c) - 3));
}

TEST_CASE("gnp is seed-deterministic and structurally valid") {
  Graph a = gen_gnp(60, 0.08, 1234);
  Graph b = gen_gnp(60, 0.08, 1234);
  REQUIRE(a.adj == b.adj);
  REQUIRE(a.offsets == b.offsets);
  Graph c = gen_gnp(60, 0.08, 999);
  REQUIRE(a.adj != c.adj);
  check_graph(a);
  check_graph(c);

  REQUIRE(gen_gnp(40, 0.0, 7).m == 0);
  REQUIRE(gen_gnp(6, 1.0, 7).m == 15);
}

TEST_CASE("generated graphs pass the validator across a parameter sweep") {
  for (int i = 1; i <= 12; ++i) {
    check_graph(gen_gnp(10 * i, 0.05 + 0.02 * i, 100 + i));
    check_graph(gen_grid(i, 13 - i));
  }
}

TEST_CASE("edge list load and save") {
  SECTION("minimal file") {
    std::istringstream in("p 2 1\n0 1\n");
    Graph g = load_edgelist(in);
    REQUIRE(g.n == 2);
    REQUIRE(g.m == 1);
  }
  SECTION("comments and blank lines are skipped") {
    std::istringstream in("# a comment\np 3 2\n0 1\n# mid\n\n1 2\n");
    Graph g = load_edgelist(in);
    REQUIRE(g.m == 2);
  }
  SECTION("round trip is byte identical for canonical files") {
    Graph g = gen_gnp(40, 0.1, 5);
    std::ostringstream first;
    save_edgelist(g, first);
    std::istringstream back(first.str());
    Graph g2 = load_edgelist(back);
    std::ostringstream second;
    save_edgelist(g2, second);
    REQUIRE(first.str() == second.str());
  }
  SECTION("count mismatch") {
    std::istringstream in("p 2 2\n0 1\n");
    REQUIRE_THROWS_AS(load_edgelist(in), ParseError);
  }
  SECTION("missing header") {
    std::istringstream in("0 1\n");
    REQUIRE_THROWS_AS(load_edgelist(in), ParseError);
  }
  SECTION("malformed edge line reports its line number") {
    std::istringstream in("p 3 2\n0 1\nnot numbers\n");
    try {
      load_edgelist(in);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      REQUIRE(e.line() == 3);
    }
  }
  SECTION("out of range vertex") {
    std::istringstream in("p 2 1\n0 5\n");
    REQUIRE_THROWS_AS(load_edgelist(in), ParseError);
  }
  SECTION("duplicate edges rejected") {
    std::istringstream in("p 3 2\n0 1\n1 0\n");
    REQUIRE_THROWS_AS(load_edgelist(in), ParseError);
  }
}

TEST_CASE("labels io") {
  std::vector<Vertex> owner{1, 1, 4, 4, 4};
  std::ostringstream out;
  save_labels(owner, out);
  REQUIRE(out.str() == "0 1\n1 1\n2 4\n3 4\n4 4\n");
  std::istringstream in(out.str());
  REQUIRE(load_labels(in, 5) == owner);

  std::istringstream holes("0 1\n4 4\n");
  auto partial = load_labels(holes, 5);
  REQUIRE(partial[0] == 1);
  REQUIRE(partial[1] == kNoVertex);
}

TEST_CASE("shift values io round trips exactly") {
  std::vector<double> delta{0.3, 2.1, 0.5, 1e-17, 7.25};
  std::ostringstream out;
  save_shift_values(delta, out);
  std::istringstream in(out.str());
  REQUIRE(load_shift_values(in, 5) == delta);

  std::istringstream missing("0 1.0\n");
  REQUIRE_THROWS_AS(load_shift_values(missing, 2), ParseError);
}
