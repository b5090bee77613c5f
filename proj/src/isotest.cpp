#include "graphsym/isotest.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace graphsym {

namespace {

std::array<long long, 4> code_histogram(const Graph& g) {
  std::array<long long, 4> h{0, 0, 0, 0};
  for (int u = 0; u < g.size(); ++u)
    for (int v = 0; v < g.size(); ++v)
      if (u != v) ++h[g.code(u, v)];
  return h;
}

std::vector<DegreeTriple> degree_multiset(const Graph& g) {
  std::vector<Vertex> all(g.size());
  for (int v = 0; v < g.size(); ++v) all[v] = v;
  std::vector<DegreeTriple> out;
  out.reserve(g.size());
  for (int v = 0; v < g.size(); ++v) out.push_back(available_degree(g, v, all));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> invert(const std::vector<Vertex>& perm) {
  std::vector<Vertex> inv(perm.size());
  for (int v = 0; v < static_cast<int>(perm.size()); ++v) inv[perm[v]] = v;
  return inv;
}

}  // namespace

IsoResult are_isomorphic(const Graph& g, const Graph& h, const SearchOptions& options) {
  IsoResult res;
  if (g.size() != h.size() || code_histogram(g) != code_histogram(h) ||
      degree_multiset(g) != degree_multiset(h)) {
    res.stats.quick_reject = true;
    return res;
  }
  const int n = g.size();

  PartitionSequence seq_g = generate_sequence(g);
  AutGroupResult aut_g = search_automorphisms(g, seq_g, options);

  const PartitionSequence* target_seq = &seq_g;
  const Graph* other_graph = &h;
  int target_index = 0;
  const std::vector<std::vector<Vertex>>* other_gens = nullptr;

  PartitionSequence seq_h;
  AutGroupResult aut_h;
  if (seq_g.remaining_backtracking() > 0) {
    seq_h = generate_sequence(h);
    aut_h = search_automorphisms(h, seq_h, options);
    if (aut_g.order != aut_h.order) {
      res.stats.quick_reject = true;
      return res;
    }
    if (seq_h.remaining_backtracking() < seq_g.remaining_backtracking()) {
      target_seq = &seq_h;
      other_graph = &g;
      target_index = 1;
      other_gens = &aut_g.generators;
    } else {
      other_gens = &aut_h.generators;
    }
  }
  res.stats.target_index = target_index;

  FollowStats fstats;
  FollowSpec fs;
  fs.graph = other_graph;
  fs.target = target_seq;
  fs.start_level = 0;
  fs.stop_level = target_seq->t();
  fs.initial = unit_partition(*other_graph);
  fs.stats = &fstats;
  fs.mode_at = [target_seq](int level) {
    return target_seq->levels[level].removed ? FollowSpec::ChoiceMode::forced_first
                                             : FollowSpec::ChoiceMode::enumerate;
  };
  if (other_gens != nullptr && !other_gens->empty()) {
    // Two candidates related by an automorphism of the follower graph that
    // fixes every vertex chosen so far lead to runs with identical digests,
    // so one representative per orbit suffices.
    const auto* gens = other_gens;
    fs.candidate_filter = [gens, n](int, const std::vector<Vertex>& cell,
                                    const std::vector<std::pair<int, Vertex>>& chosen) {
      UnionFind uf(n);
      for (const auto& gen : *gens) {
        bool fixes_prefix = true;
        for (const auto& [lvl, v] : chosen)
          if (gen[v] != v) {
            fixes_prefix = false;
            break;
          }
        if (fixes_prefix) uf.merge_permutation(gen);
      }
      std::vector<Vertex> keep;
      std::vector<Vertex> roots;
      for (Vertex q : cell) {
        const Vertex r = uf.find(q);
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) {
          roots.push_back(r);
          keep.push_back(q);
        }
      }
      return keep;
    };
  }

  const FollowResult fr = follow_sequence(fs);
  res.stats.nodes = fstats.nodes;
  res.stats.backtracks = fstats.backtracks;
  if (!fr.ok) return res;

  std::vector<Vertex> other_order;
  for (const auto& p : fr.alt)
    for (const auto& [v, reason] : p.discard_log) other_order.push_back(v);
  if (other_order.size() != target_seq->vertex_order.size())
    throw std::logic_error("are_isomorphic: discard orders have different lengths");

  std::vector<Vertex> other_to_target(n);
  for (int i = 0; i < n; ++i) other_to_target[other_order[i]] = target_seq->vertex_order[i];

  res.mapping = target_index == 1 ? std::move(other_to_target) : invert(other_to_target);
  if (apply_permutation(g, res.mapping) != h)
    throw std::logic_error("are_isomorphic: produced mapping failed verification");
  res.isomorphic = true;
  return res;
}

}  // namespace graphsym
