#include <doctest.h>

#include <stdexcept>

#include "graphsym/families.hpp"
#include "graphsym/graph.hpp"

using namespace graphsym;

namespace {

int undirected_edge_count(const Graph& g) {
  int m = 0;
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = u + 1; v < g.size(); ++v)
      if (g.code(u, v) == 3) ++m;
  return m;
}

int out_degree(const Graph& g, Vertex u) {
  int d = 0;
  for (Vertex v = 0; v < g.size(); ++v)
    if (v != u && (g.code(u, v) & 2)) ++d;
  return d;
}

}  // namespace

TEST_CASE("basic families have the expected shapes") {
  CHECK(undirected_edge_count(empty_graph(5)) == 0);
  CHECK(undirected_edge_count(path_graph(6)) == 5);
  CHECK(undirected_edge_count(cycle_graph(6)) == 6);
  CHECK(undirected_edge_count(complete_graph(5)) == 10);
  CHECK(path_graph(1).size() == 1);
  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
  CHECK_THROWS_AS(directed_cycle(1), std::invalid_argument);
  CHECK_THROWS_AS(empty_graph(0), std::invalid_argument);

  const Graph d4 = directed_cycle(4);
  CHECK(d4.code(0, 1) == 2);
  CHECK(d4.code(1, 0) == 1);
  CHECK(d4.code(3, 0) == 2);
  CHECK(d4.code(0, 2) == 0);
}

TEST_CASE("petersen graph is cubic on ten vertices") {
  const Graph g = petersen_graph();
  REQUIRE(g.size() == 10);
  CHECK(undirected_edge_count(g) == 15);
  for (Vertex v = 0; v < 10; ++v) CHECK(out_degree(g, v) == 3);
}

TEST_CASE("quadratic residue tournaments") {
  CHECK(paley_tournament(3) == directed_cycle(3));

  const Graph g = paley_tournament(7);
  REQUIRE(g.size() == 7);
  // exactly one arc between each pair, never both
  for (Vertex u = 0; u < 7; ++u)
    for (Vertex v = u + 1; v < 7; ++v) {
      const AdjCode c = g.code(u, v);
      CHECK((c == 1 || c == 2));
    }
  // 1, 2, 4 are the nonzero squares mod 7
  CHECK(g.code(0, 1) == 2);
  CHECK(g.code(0, 2) == 2);
  CHECK(g.code(0, 4) == 2);
  CHECK(g.code(0, 3) == 1);

  CHECK_THROWS_AS(paley_tournament(5), std::invalid_argument);   // 5 % 4 == 1
  CHECK_THROWS_AS(paley_tournament(9), std::invalid_argument);   // not prime
  CHECK_THROWS_AS(paley_tournament(0), std::invalid_argument);
}

TEST_CASE("quadratic residue graphs") {
  CHECK(paley_graph(5) == cycle_graph(5));

  const Graph g = paley_graph(13);
  REQUIRE(g.size() == 13);
  for (Vertex v = 0; v < 13; ++v) CHECK(out_degree(g, v) == 6);
  // undirected: code 3 or 0 only
  for (Vertex u = 0; u < 13; ++u)
    for (Vertex v = 0; v < 13; ++v)
      if (u != v) CHECK((g.code(u, v) == 0 || g.code(u, v) == 3));

  CHECK_THROWS_AS(paley_graph(7), std::invalid_argument);   // 7 % 4 == 3
  CHECK_THROWS_AS(paley_graph(25), std::invalid_argument);  // not prime
}

TEST_CASE("latin square graphs connect rows, columns and symbols") {
  CHECK(latin_square_graph(2) == complete_graph(4));

  const Graph g = latin_square_graph(3);
  REQUIRE(g.size() == 9);
  for (Vertex v = 0; v < 9; ++v) CHECK(out_degree(g, v) == 6);
  CHECK(g.code(0, 1) == 3);   // same row
  CHECK(g.code(0, 3) == 3);   // same column
  CHECK(g.code(1, 3) == 3);   // same symbol: (0,1) and (1,0) both hold 1
  CHECK(g.code(1, 5) == 0);   // (0,1) vs (1,2): different row, column, symbol

  CHECK_THROWS_AS(latin_square_graph(1), std::invalid_argument);
}

TEST_CASE("component join replicates and optionally joins") {
  const Graph inner = cycle_graph(5);

  const Graph disjoint = component_join(inner, 2, 0);
  REQUIRE(disjoint.size() == 10);
  CHECK(undirected_edge_count(disjoint) == 10);
  CHECK(disjoint.code(0, 1) == 3);
  CHECK(disjoint.code(5, 6) == 3);
  CHECK(disjoint.code(0, 5) == 0);

  const Graph joined = component_join(inner, 2, 3);
  CHECK(undirected_edge_count(joined) == 10 + 25);
  CHECK(joined.code(0, 5) == 3);
  CHECK(joined.code(3, 9) == 3);
  CHECK(joined.code(0, 2) == 0);  // inner non-edges stay

  CHECK(component_join(inner, 1, 0) == inner);
  CHECK_THROWS_AS(component_join(inner, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(component_join(inner, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(component_join(inner, 2, 2), std::invalid_argument);

  // directed interiors replicate arc directions
  const Graph dj = component_join(directed_cycle(3), 2, 0);
  CHECK(dj.code(0, 1) == 2);
  CHECK(dj.code(3, 4) == 2);
  CHECK(dj.code(4, 3) == 1);
}

TEST_CASE("random samples are deterministic in their arguments") {
  const Graph a = random_graph(10, 0.5, 7);
  const Graph b = random_graph(10, 0.5, 7);
  CHECK(a == b);
  CHECK(a != random_graph(10, 0.5, 8));

  const Graph d = random_digraph(10, 0.5, 7);
  CHECK(d == random_digraph(10, 0.5, 7));
  CHECK(d != random_digraph(10, 0.5, 9));

  // undirected samples only produce codes 0 and 3
  for (Vertex u = 0; u < a.size(); ++u)
    for (Vertex v = 0; v < a.size(); ++v)
      if (u != v) CHECK((a.code(u, v) == 0 || a.code(u, v) == 3));

  CHECK(random_graph(8, 0.0, 1) == empty_graph(8));
  CHECK(random_graph(8, 1.0, 1) == complete_graph(8));
  CHECK_THROWS_AS(random_graph(8, 1.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_digraph(8, -0.1, 1), std::invalid_argument);
}

TEST_CASE("family specs parse into the same graphs") {
  CHECK(looks_like_family_spec("family:cycle:5"));
  CHECK_FALSE(looks_like_family_spec("graphs/family.col"));

  CHECK(parse_family_spec("family:cycle:5") == cycle_graph(5));
  CHECK(parse_family_spec("family:petersen") == petersen_graph());
  CHECK(parse_family_spec("family:paley_tournament:7") == paley_tournament(7));
  CHECK(parse_family_spec("family:paley_graph:13") == paley_graph(13));
  CHECK(parse_family_spec("family:latin_square:3") == latin_square_graph(3));
  CHECK(parse_family_spec("family:empty:4") == empty_graph(4));
  CHECK(parse_family_spec("family:directed_cycle:6") == directed_cycle(6));
  CHECK(parse_family_spec("family:component_join:cycle:5:2:0") ==
        component_join(cycle_graph(5), 2, 0));
  CHECK(parse_family_spec("family:component_join:paley_graph:13:4:3") ==
        component_join(paley_graph(13), 4, 3));
  CHECK(parse_family_spec("family:random_graph:10:0.5:7") == random_graph(10, 0.5, 7));
  CHECK(parse_family_spec("family:random_digraph:8:0.25:3") == random_digraph(8, 0.25, 3));

  CHECK_THROWS_AS(parse_family_spec("family"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("family:unknown:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("family:cycle"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("family:cycle:5:9"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("family:cycle:abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("family:cycle:5x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("family:petersen:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("family:random_graph:10:0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("family:component_join:cycle:5:2:7"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("family:component_join:petersen:1:2:0"),
                  std::invalid_argument);
}
