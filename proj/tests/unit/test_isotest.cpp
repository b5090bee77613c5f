#include <doctest.h>

#include "graphsym/families.hpp"
#include "graphsym/graph.hpp"
#include "graphsym/isotest.hpp"
#include "graphsym/oracle.hpp"

using namespace graphsym;

namespace {

// deterministic scrambles for relabeling tests
std::vector<Vertex> mix_permutation(int n, std::uint64_t salt) {
  std::vector<Vertex> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::uint64_t state = salt * 2654435761u + 12345;
  for (int i = n - 1; i > 0; --i) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    std::swap(perm[i], perm[state % (i + 1)]);
  }
  return perm;
}

void expect_isomorphic(const Graph& g, const Graph& h) {
  const IsoResult res = are_isomorphic(g, h);
  REQUIRE(res.isomorphic);
  REQUIRE(is_bijection(res.mapping, g.size()));
  CHECK(apply_permutation(g, res.mapping) == h);
}

// swaps the endpoints of two disjoint edges, preserving all degrees
Graph double_edge_swap(const Graph& g) {
  for (Vertex a = 0; a < g.size(); ++a)
    for (Vertex b = a + 1; b < g.size(); ++b) {
      if (g.code(a, b) != 3) continue;
      for (Vertex c = a + 1; c < g.size(); ++c)
        for (Vertex d = c + 1; d < g.size(); ++d) {
          if (g.code(c, d) != 3) continue;
          if (c == b || d == a || d == b) continue;
          if (g.code(a, d) != 0 || g.code(b, c) != 0) continue;
          Graph out(g.size());
          for (Vertex u = 0; u < g.size(); ++u)
            for (Vertex v = u + 1; v < g.size(); ++v) {
              const bool dropped = (u == a && v == b) || (u == c && v == d);
              const bool added = (u == a && v == d) ||
                                 (u == std::min(b, c) && v == std::max(b, c));
              if (added || (g.code(u, v) == 3 && !dropped)) {
                out.add_arc(u, v);
                out.add_arc(v, u);
              }
            }
          return out;
        }
    }
  return g;
}

Graph shrikhande_graph() {
  Graph g(16);
  const int diffs[6][2] = {{0, 1}, {0, 3}, {1, 0}, {3, 0}, {1, 1}, {3, 3}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (const auto& d : diffs) {
        const int u = i * 4 + j;
        const int v = ((i + d[0]) % 4) * 4 + (j + d[1]) % 4;
        if (u != v) g.add_arc(u, v);
      }
  return g;
}

Graph rook_graph_4x4() {
  Graph g(16);
  for (int u = 0; u < 16; ++u)
    for (int v = u + 1; v < 16; ++v)
      if (u / 4 == v / 4 || u % 4 == v % 4) {
        g.add_arc(u, v);
        g.add_arc(v, u);
      }
  return g;
}

}  // namespace

TEST_CASE("relabelings of assorted graphs are recognized with a valid witness") {
  std::vector<Graph> corpus;
  corpus.push_back(cycle_graph(6));
  corpus.push_back(path_graph(7));
  corpus.push_back(petersen_graph());
  corpus.push_back(paley_tournament(7));
  corpus.push_back(directed_cycle(8));
  corpus.push_back(component_join(cycle_graph(5), 2, 0));
  corpus.push_back(component_join(paley_graph(13), 4, 3));
  corpus.push_back(latin_square_graph(3));
  corpus.push_back(empty_graph(5));
  corpus.push_back(Graph(1));
  for (std::uint64_t s = 1; s <= 8; ++s) corpus.push_back(random_graph(12, 0.5, s));
  for (std::uint64_t s = 1; s <= 8; ++s) corpus.push_back(random_digraph(10, 0.4, s));

  std::uint64_t salt = 1;
  for (const Graph& g : corpus) {
    const Graph h = apply_permutation(g, mix_permutation(g.size(), salt++));
    expect_isomorphic(g, h);
    expect_isomorphic(g, g);
  }
}

TEST_CASE("structurally different graphs are rejected") {
  CHECK_FALSE(are_isomorphic(cycle_graph(5), path_graph(5)).isomorphic);
  CHECK_FALSE(are_isomorphic(cycle_graph(6), cycle_graph(7)).isomorphic);
  CHECK_FALSE(are_isomorphic(complete_graph(4), empty_graph(4)).isomorphic);
  CHECK_FALSE(are_isomorphic(paley_tournament(7), directed_cycle(7)).isomorphic);

  // same vertex count and edge count, different degree multiset
  const Graph star = Graph::from_arcs(4, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {0, 3}, {3, 0}});
  const IsoResult res = are_isomorphic(star, path_graph(4));
  CHECK_FALSE(res.isomorphic);
  CHECK(res.stats.quick_reject);
}

TEST_CASE("a directed cycle and its reversal are mirror images") {
  Graph reversed(7);
  for (int i = 0; i < 7; ++i) reversed.add_arc((i + 1) % 7, i);
  expect_isomorphic(directed_cycle(7), reversed);
}

TEST_CASE("cospectral-type pair: same degrees, same counts, not isomorphic") {
  // C6 versus two triangles: 2-regular on six vertices
  const Graph c6 = cycle_graph(6);
  const Graph triangles = component_join(complete_graph(3), 2, 0);
  const IsoResult res = are_isomorphic(c6, triangles);
  CHECK_FALSE(res.isomorphic);
  CHECK_FALSE(res.stats.quick_reject);  // degree data alone cannot tell them apart
}

TEST_CASE("the two strongly regular (16,6,2,2) graphs are distinguished") {
  const Graph s = shrikhande_graph();
  const Graph r = rook_graph_4x4();
  // identical local statistics
  for (Vertex v = 0; v < 16; ++v) {
    CHECK(available_degree(s, v, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15}).d3 == 6);
    CHECK(available_degree(r, v, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15}).d3 == 6);
  }
  CHECK_FALSE(are_isomorphic(s, r).isomorphic);
  expect_isomorphic(s, apply_permutation(s, mix_permutation(16, 99)));
  expect_isomorphic(r, apply_permutation(r, mix_permutation(16, 98)));
}

TEST_CASE("verdicts agree with the exhaustive reference on degree-preserving rewires") {
  int nontrivial = 0;
  for (std::uint64_t s = 1; s <= 20; ++s) {
    const Graph g = random_graph(8, 0.5, s);
    const Graph h = double_edge_swap(g);
    const IsoResult res = are_isomorphic(g, h);
    const bool expected = brute_force_iso(g, h).has_value();
    CHECK(res.isomorphic == expected);
    if (res.isomorphic) CHECK(apply_permutation(g, res.mapping) == h);
    if (!res.stats.quick_reject) ++nontrivial;
  }
  // the rewires keep all degrees, so most runs must reach the matcher
  CHECK(nontrivial >= 10);
}

TEST_CASE("memo setting does not change verdicts") {
  SearchOptions off;
  off.use_failure_memo = false;
  const Graph g = component_join(cycle_graph(5), 2, 3);
  const Graph h = apply_permutation(g, mix_permutation(10, 5));
  CHECK(are_isomorphic(g, h).isomorphic == are_isomorphic(g, h, off).isomorphic);
  CHECK(are_isomorphic(g, cycle_graph(10), off).isomorphic ==
        are_isomorphic(g, cycle_graph(10)).isomorphic);
}

TEST_CASE("rigid graphs match their relabelings without backtracking") {
  int rigid_checked = 0;
  for (std::uint64_t s = 1; s <= 12 && rigid_checked < 5; ++s) {
    const Graph g = random_graph(15, 0.5, s);
    PartitionSequence seq = generate_sequence(g);
    if (!(search_automorphisms(g, seq).order == 1)) continue;
    ++rigid_checked;
    const Graph h = apply_permutation(g, mix_permutation(15, s + 40));
    const IsoResult res = are_isomorphic(g, h);
    CHECK(res.isomorphic);
    CHECK(res.stats.backtracks == 0);
  }
  CHECK(rigid_checked >= 3);
}
