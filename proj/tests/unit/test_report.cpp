#include <doctest.h>

#include <json.hpp>

#include "graphsym/autgroup.hpp"
#include "graphsym/families.hpp"
#include "graphsym/isotest.hpp"
#include "graphsym/report.hpp"
#include "graphsym/sequence.hpp"

using namespace graphsym;

TEST_CASE("cycle notation") {
  CHECK(cycle_notation({0, 1, 2}) == "()");
  CHECK(cycle_notation({}) == "()");
  CHECK(cycle_notation({1, 0}) == "(0 1)");
  CHECK(cycle_notation({1, 2, 0}) == "(0 1 2)");
  CHECK(cycle_notation({1, 0, 3, 2}) == "(0 1)(2 3)");
  CHECK(cycle_notation({0, 2, 1, 3}) == "(1 2)");
}

namespace {

std::string fresh_aut_report(const Graph& g, const std::string& label) {
  PartitionSequence seq = generate_sequence(g);
  const AutGroupResult result = search_automorphisms(g, seq);
  return aut_report_json(label, g, seq, result);
}

std::string fresh_iso_report(const Graph& a, const Graph& b) {
  return iso_report_json("a", "b", a, b, are_isomorphic(a, b), true);
}

}  // namespace

TEST_CASE("automorphism report content") {
  const Graph g = path_graph(3);
  const std::string text = fresh_aut_report(g, "path3");
  const auto j = nlohmann::json::parse(text);

  CHECK(j["input"] == "path3");
  CHECK(j["vertices"] == 3);
  CHECK(j["group_order"] == "2");
  CHECK(j["generator_count"] == 1);
  CHECK(j["generators"][0]["permutation"] == std::vector<int>{2, 1, 0});
  CHECK(j["generators"][0]["cycles"] == "(0 2)");
  CHECK(j["orbit_count"] == 2);
  CHECK(j["stats"].contains("replays"));
  CHECK(j["stats"].contains("memo_hits"));
}

TEST_CASE("group order is reported as a decimal string even past 64 bits") {
  const std::string text = fresh_aut_report(empty_graph(21), "empty21");
  const auto j = nlohmann::json::parse(text);
  CHECK(j["group_order"] == "51090942171709440000");  // 21!
}

TEST_CASE("repeated runs produce identical bytes") {
  const Graph g = component_join(cycle_graph(5), 2, 0);
  CHECK(fresh_aut_report(g, "x") == fresh_aut_report(g, "x"));

  const Graph a = petersen_graph();
  const Graph b = apply_permutation(a, {3, 1, 4, 0, 2, 8, 6, 9, 5, 7});
  CHECK(fresh_iso_report(a, b) == fresh_iso_report(a, b));
}

TEST_CASE("isomorphism report content and mapping control") {
  const Graph a = cycle_graph(4);
  const Graph b = apply_permutation(a, {2, 0, 3, 1});
  const IsoResult res = are_isomorphic(a, b);

  const auto with = nlohmann::json::parse(iso_report_json("a", "b", a, b, res, true));
  CHECK(with["isomorphic"] == true);
  CHECK(with["vertices_a"] == 4);
  CHECK(with["vertices_b"] == 4);
  REQUIRE(with.contains("mapping"));
  CHECK(with["mapping"].size() == 4);

  const auto without = nlohmann::json::parse(iso_report_json("a", "b", a, b, res, false));
  CHECK_FALSE(without.contains("mapping"));

  const IsoResult neg = are_isomorphic(a, path_graph(4));
  const auto rej =
      nlohmann::json::parse(iso_report_json("a", "p", a, path_graph(4), neg, true));
  CHECK(rej["isomorphic"] == false);
  CHECK_FALSE(rej.contains("mapping"));  // no witness to include
  CHECK(rej["stats"]["quick_reject"] == true);
}

TEST_CASE("text reports carry the headline facts") {
  const Graph g = complete_graph(3);
  PartitionSequence seq = generate_sequence(g);
  const AutGroupResult result = search_automorphisms(g, seq);
  const std::string text = aut_report_text("k3", g, seq, result);
  CHECK(text.find("input: k3") != std::string::npos);
  CHECK(text.find("automorphism group order: 6") != std::string::npos);
  CHECK(text.find("orbits (1):") != std::string::npos);

  const Graph h = complete_graph(3);
  const IsoResult res = are_isomorphic(g, h);
  const std::string iso = iso_report_text("k3", "k3b", g, h, res, true);
  CHECK(iso.find("isomorphic: yes") != std::string::npos);
  CHECK(iso.find("mapping:") != std::string::npos);
  CHECK(iso.find("vertices: 3 / 3") != std::string::npos);
}
