#include <doctest.h>

#include <stdexcept>

#include "graphsym/families.hpp"
#include "graphsym/graph.hpp"
#include "graphsym/oracle.hpp"

using namespace graphsym;

TEST_CASE("exhaustive search finds the full group of small graphs") {
  const BruteAutResult k3 = brute_force_aut(complete_graph(3));
  CHECK(k3.order == 6);
  REQUIRE(k3.automorphisms.size() == 6);
  CHECK(k3.automorphisms[0] == std::vector<Vertex>{0, 1, 2});  // identity comes first
  CHECK(k3.orbits == std::vector<std::vector<Vertex>>{{0, 1, 2}});

  CHECK(brute_force_aut(path_graph(3)).order == 2);
  CHECK(brute_force_aut(cycle_graph(4)).order == 8);
  CHECK(brute_force_aut(cycle_graph(5)).order == 10);
  CHECK(brute_force_aut(directed_cycle(3)).order == 3);
  CHECK(brute_force_aut(petersen_graph()).order == 120);
  CHECK(brute_force_aut(empty_graph(6)).order == 720);

  const BruteAutResult star = brute_force_aut(
      Graph::from_arcs(4, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {0, 3}, {3, 0}}));
  CHECK(star.order == 6);
  CHECK(star.orbits == std::vector<std::vector<Vertex>>{{0}, {1, 2, 3}});
}

TEST_CASE("every reported automorphism preserves codes") {
  const Graph g = paley_tournament(7);
  const BruteAutResult res = brute_force_aut(g);
  CHECK(res.order == 21);
  for (const auto& perm : res.automorphisms) CHECK(is_automorphism(g, perm));
}

TEST_CASE("exhaustive isomorphism search returns a checked witness or nothing") {
  const Graph c5 = cycle_graph(5);
  const Graph relabeled = apply_permutation(c5, {3, 1, 4, 0, 2});
  const auto witness = brute_force_iso(c5, relabeled);
  REQUIRE(witness.has_value());
  CHECK(apply_permutation(c5, *witness) == relabeled);

  CHECK_FALSE(brute_force_iso(cycle_graph(5), path_graph(5)).has_value());
  CHECK_FALSE(brute_force_iso(cycle_graph(5), cycle_graph(6)).has_value());
  CHECK_FALSE(brute_force_iso(complete_graph(4), empty_graph(4)).has_value());

  // a directed cycle and its reversal are mirror images
  Graph reversed(6);
  for (int i = 0; i < 6; ++i) reversed.add_arc((i + 1) % 6, i);
  CHECK(brute_force_iso(directed_cycle(6), reversed).has_value());
}

TEST_CASE("oracle budget limits are enforced") {
  CHECK_THROWS_AS(brute_force_aut(empty_graph(11)), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_iso(empty_graph(11), empty_graph(11)), std::invalid_argument);

  OracleBudget tight;
  tight.max_perms = 100;
  CHECK_THROWS_AS(brute_force_aut(empty_graph(6), tight), std::runtime_error);

  OracleBudget small;
  small.max_n = 4;
  CHECK_THROWS_AS(brute_force_aut(cycle_graph(5), small), std::invalid_argument);
  CHECK(brute_force_aut(cycle_graph(4), small).order == 8);
}
