#include "graphsym/report.hpp"

#include <json.hpp>

#include <sstream>

namespace graphsym {

std::string cycle_notation(const std::vector<Vertex>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  std::ostringstream out;
  bool any = false;
  for (int start = 0; start < n; ++start) {
    if (seen[start] || perm[start] == start) continue;
    any = true;
    out << '(';
    int v = start;
    bool first = true;
    do {
      seen[v] = true;
      if (!first) out << ' ';
      out << v;
      first = false;
      v = perm[v];
    } while (v != start);
    out << ')';
  }
  return any ? out.str() : "()";
}

namespace {

nlohmann::ordered_json orbits_json(const std::vector<std::vector<Vertex>>& orbits) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& orbit : orbits) arr.push_back(orbit);
  return arr;
}

}  // namespace

std::string aut_report_json(const std::string& input_label, const Graph& g,
                            const PartitionSequence& seq, const AutGroupResult& result) {
  nlohmann::ordered_json j;
  j["input"] = input_label;
  j["vertices"] = g.size();
  j["group_order"] = result.order.to_string();
  j["generator_count"] = result.generators.size();
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const auto& gen : result.generators) {
    nlohmann::ordered_json entry;
    entry["permutation"] = gen;
    entry["cycles"] = cycle_notation(gen);
    gens.push_back(std::move(entry));
  }
  j["generators"] = std::move(gens);
  j["orbit_count"] = result.orbit_partition.size();
  j["orbits"] = orbits_json(result.orbit_partition);
  j["sequence_length"] = seq.t();
  j["backtracking_levels"] = seq.backtracking_levels();
  nlohmann::ordered_json stats;
  stats["replays"] = result.stats.replays;
  stats["truncated_generators"] = result.stats.truncated_generators;
  stats["nodes"] = result.stats.follow.nodes;
  stats["backtracks"] = result.stats.follow.backtracks;
  stats["memo_hits"] = result.stats.memo_hits;
  stats["memo_entries"] = result.stats.memo_entries;
  j["stats"] = std::move(stats);
  return j.dump(2) + "\n";
}

std::string aut_report_text(const std::string& input_label, const Graph& g,
                            const PartitionSequence& seq, const AutGroupResult& result) {
  std::ostringstream out;
  out << "input: " << input_label << '\n';
  out << "vertices: " << g.size() << '\n';
  out << "automorphism group order: " << result.order.to_string() << '\n';
  out << "generators (" << result.generators.size() << "):\n";
  for (const auto& gen : result.generators) out << "  " << cycle_notation(gen) << '\n';
  out << "orbits (" << result.orbit_partition.size() << "):\n";
  for (const auto& orbit : result.orbit_partition) {
    out << "  {";
    for (std::size_t i = 0; i < orbit.size(); ++i) out << (i ? " " : "") << orbit[i];
    out << "}\n";
  }
  out << "sequence length: " << seq.t() << '\n';
  out << "backtracking levels: " << seq.backtracking_levels().size() << '\n';
  return out.str();
}

std::string iso_report_json(const std::string& label_a, const std::string& label_b,
                            const Graph& a, const Graph& b, const IsoResult& result,
                            bool include_mapping) {
  nlohmann::ordered_json j;
  j["input_a"] = label_a;
  j["input_b"] = label_b;
  j["vertices_a"] = a.size();
  j["vertices_b"] = b.size();
  j["isomorphic"] = result.isomorphic;
  if (include_mapping && result.isomorphic)
    j["mapping"] = result.mapping;
  nlohmann::ordered_json stats;
  stats["quick_reject"] = result.stats.quick_reject;
  stats["target"] = result.stats.target_index;
  stats["nodes"] = result.stats.nodes;
  stats["backtracks"] = result.stats.backtracks;
  j["stats"] = std::move(stats);
  return j.dump(2) + "\n";
}

std::string iso_report_text(const std::string& label_a, const std::string& label_b,
                            const Graph& a, const Graph& b, const IsoResult& result,
                            bool include_mapping) {
  std::ostringstream out;
  out << "inputs: " << label_a << " / " << label_b << '\n';
  out << "vertices: " << a.size() << " / " << b.size() << '\n';
  out << "isomorphic: " << (result.isomorphic ? "yes" : "no") << '\n';
  if (include_mapping && result.isomorphic) {
    out << "mapping:";
    for (std::size_t v = 0; v < result.mapping.size(); ++v)
      out << ' ' << v << "->" << result.mapping[v];
    out << '\n';
  }
  out << "backtracks: " << result.stats.backtracks << '\n';
  return out.str();
}

}  // namespace graphsym
