#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

#include "support/generators.hpp"
#include "support/rng.hpp"
#include "wordgraph/graph.hpp"
#include "wordgraph/graph_io.hpp"

using namespace wordgraph;

namespace {

WordGraph diamond() {
  return WordGraph(4, 0, 3,
                   {{0, 1, "a", 1.0},
                    {0, 2, "b", 2.0},
                    {1, 3, "c", 3.0},
                    {2, 3, "d", 4.0}});
}

}  // namespace

TEST_CASE("construction accepts well-formed graphs") {
  CHECK_NOTHROW(diamond());
  CHECK_NOTHROW(WordGraph(2, 0, 1, {{0, 1, "x", 1.0}}));
  // parallel edges are individual citizens
  const WordGraph g(2, 0, 1, {{0, 1, "x", 1.0}, {0, 1, "x", 1.0}});
  CHECK(g.edge_count() == 2);
}

TEST_CASE("a single vertex with no edges is the degenerate valid graph") {
  const WordGraph g(1, 0, 0, {});
  CHECK(g.vertex_count() == 1);
  CHECK(g.start() == g.end());
}

TEST_CASE("construction rejects broken graphs") {
  // cycle
  CHECK_THROWS_AS(WordGraph(3, 0, 2,
                            {{0, 1, "a", 1.0},
                             {1, 2, "b", 1.0},
                             {2, 1, "c", 1.0},
                             {1, 2, "d", 1.0}}),
                  GraphError);
  // self loop
  CHECK_THROWS_AS(WordGraph(2, 0, 1, {{0, 1, "a", 1.0}, {1, 1, "b", 1.0}}),
                  GraphError);
  // empty label
  CHECK_THROWS_AS(WordGraph(2, 0, 1, {{0, 1, "", 1.0}}), GraphError);
  // non-finite weight
  CHECK_THROWS_AS(WordGraph(2, 0, 1, {{0, 1, "a", std::nan("")}}), GraphError);
  // edge endpoint out of range
  CHECK_THROWS_AS(WordGraph(2, 0, 1, {{0, 5, "a", 1.0}}), GraphError);
  // two sources: vertex 1 unreachable and in-degree 0
  CHECK_THROWS_AS(WordGraph(3, 0, 2, {{0, 2, "a", 1.0}, {1, 2, "b", 1.0}}),
                  GraphError);
  // two sinks
  CHECK_THROWS_AS(WordGraph(3, 0, 2, {{0, 1, "a", 1.0}, {0, 2, "b", 1.0}}),
                  GraphError);
  // start must differ from end when edges exist
  CHECK_THROWS_AS(WordGraph(2, 0, 0, {{0, 1, "a", 1.0}}), GraphError);
}

TEST_CASE("adjacency lists index the sorted edge array") {
  const WordGraph g = diamond();
  REQUIRE(g.out_edges(0).size() == 2);
  CHECK(g.edge(g.out_edges(0)[0]).label == "a");
  CHECK(g.edge(g.out_edges(0)[1]).label == "b");
  REQUIRE(g.in_edges(3).size() == 2);
  CHECK(in_degree(g, 0) == 0);
  CHECK(out_degree(g, 3) == 0);
  CHECK(in_degree(g, 3) == 2);
}

TEST_CASE("edges are stored sorted regardless of input order") {
  const WordGraph g(3, 0, 2,
                    {{1, 2, "z", 1.0}, {0, 1, "b", 1.0}, {0, 1, "a", 1.0}});
  CHECK(g.edge(0).label == "a");
  CHECK(g.edge(1).label == "b");
  CHECK(g.edge(2).label == "z");
}

TEST_CASE("topological order resolves ties by ascending vertex id") {
  const WordGraph g = diamond();
  const TopologicalOrder topo = topological_order(g);
  REQUIRE(topo.order.size() == 4);
  CHECK(topo.order == std::vector<VertexId>{0, 1, 2, 3});
  // positions are 1-based
  CHECK(topo.position[0] == 1);
  CHECK(topo.position[1] == 2);
  CHECK(topo.position[2] == 3);
  CHECK(topo.position[3] == 4);
}

TEST_CASE("topological order puts every edge source before its target") {
  testsupport::SplitMix64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const WordGraph g = testsupport::random_word_graph(rng);
    const TopologicalOrder topo = topological_order(g);
    for (const Edge& e : g.edges())
      CHECK(topo.position[e.src] < topo.position[e.tgt]);
  }
}

TEST_CASE("cycle detection reports rather than hangs") {
  CHECK_THROWS_AS(
      topological_order_of(2, {{0, 1, "a", 1.0}, {1, 0, "b", 1.0}}),
      GraphError);
}

TEST_CASE("graph dumps round-trip byte for byte") {
  const WordGraph g = diamond();
  const std::string text = write_graph(g);
  const WordGraph back = read_graph(text);
  CHECK(write_graph(back) == text);
  CHECK(back.vertex_count() == g.vertex_count());
  CHECK(back.start() == g.start());
  CHECK(back.end() == g.end());
}

TEST_CASE("random graphs survive the dump round-trip") {
  testsupport::SplitMix64 rng(12);
  for (int i = 0; i < 25; ++i) {
    const WordGraph g = testsupport::random_word_graph(rng);
    const std::string text = write_graph(g);
    CHECK(write_graph(read_graph(text)) == text);
  }
}

TEST_CASE("graph dump parsing rejects malformed input") {
  CHECK_THROWS_AS(read_graph(""), ParseError);
  CHECK_THROWS_AS(read_graph("vertices 2 start 0 end 1\n"), ParseError);
  CHECK_THROWS_AS(read_graph("#vertices 2 start 0 end 1\n0\t1\tx\n"),
                  ParseError);
  CHECK_THROWS_AS(read_graph("#vertices 2 start 0 end 1\n0\t1\tx\tabc\n"),
                  ParseError);
  CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.wg"), ConfigError);
}

TEST_CASE("the five-stage lattice fixture loads") {
  const WordGraph g =
      read_graph_file(std::string(WG_DATA_DIR) + "/fixtures/five_stage_lattice.wg");
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 25);
  // the dump is in canonical order already
  std::ifstream in(std::string(WG_DATA_DIR) + "/fixtures/five_stage_lattice.wg",
                   std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  CHECK(write_graph(g) == buf.str());
}
