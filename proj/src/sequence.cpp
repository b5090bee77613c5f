#include "graphsym/sequence.hpp"

#include <cassert>
#include <stdexcept>

namespace graphsym {
namespace {

// Index of the first pivot cell whose set refinement splits a cell or
// discards a vertex, or -1 when the partition is a set-refinement fixpoint.
int first_effective_set_pivot(const Graph& g, const Partition& p) {
  for (int c = 0; c < static_cast<int>(p.cells.size()); ++c) {
    auto [refined, trace] = set_refine_traced(g, p, c);
    if (refined.cells.size() != p.cells.size() || !refined.discard_log.empty()) return c;
  }
  return -1;
}

// First singleton cell. Its vertex is always linked: refinements discard
// disconnected singletons on the spot, so none survive into a level.
int first_singleton_cell(const Partition& p) {
  for (int c = 0; c < static_cast<int>(p.cells.size()); ++c)
    if (p.cells[c].size() == 1) return c;
  return -1;
}

Partition set_refine_fixpoint(const Graph& g, Partition p, long long& discarded) {
  for (;;) {
    int c = first_effective_set_pivot(g, p);
    if (c < 0) return p;
    p = set_refine(g, p, c);
    discarded += static_cast<long long>(p.discard_log.size());
  }
}

}  // namespace

LevelDigest make_digest(const Graph& g, const Partition& p, const RefineTrace& incoming) {
  LevelDigest d;
  d.incoming = incoming;
  d.discard_count = static_cast<int>(p.discard_log.size());
  const int r = static_cast<int>(p.cells.size());
  d.sizes.reserve(r);
  for (const auto& cell : p.cells) d.sizes.push_back(static_cast<int>(cell.size()));
  d.degree_sums.assign(static_cast<std::size_t>(r) * r, DegreeTriple{});
  for (int i = 0; i < r; ++i)
    for (Vertex v : p.cells[i])
      for (int j = 0; j < r; ++j)
        d.degree_sums[static_cast<std::size_t>(i) * r + j] += available_degree(g, v, p.cells[j]);
  return d;
}

PivotScore score_pivot_candidate(const Graph& g, const Partition& p, int cell_index) {
  if (cell_index < 0 || cell_index >= static_cast<int>(p.cells.size()))
    throw std::invalid_argument("pivot candidate cell out of range");
  PivotScore s;
  long long discarded = 0;
  Partition probe = vertex_refine(g, p, cell_index, p.cells[cell_index][0]);
  discarded += static_cast<long long>(probe.discard_log.size());
  probe = set_refine_fixpoint(g, std::move(probe), discarded);
  s.early_accept = is_subpartition(probe, p);
  s.score = discarded + static_cast<long long>(probe.cells.size());
  return s;
}

int select_pivot_cell(const Graph& g, const Partition& p) {
  // One probe per distinct (size, degree row) signature, first cell wins it.
  std::vector<CellSignature> seen;
  int best = -1;
  long long best_score = -1;
  for (int c = 0; c < static_cast<int>(p.cells.size()); ++c) {
    if (p.cells[c].size() < 2) continue;
    CellSignature sig = signature(g, p, c);
    bool duplicate = false;
    for (const auto& s : seen)
      if (s == sig) {
        duplicate = true;
        break;
      }
    if (duplicate) continue;
    seen.push_back(std::move(sig));

    PivotScore score = score_pivot_candidate(g, p, c);
    if (score.early_accept) return c;
    if (score.score > best_score) {  // ties keep the smaller index
      best_score = score.score;
      best = c;
    }
  }
  if (best < 0) throw std::logic_error("select_pivot_cell: no multi-vertex cell");
  return best;
}

PartitionSequence generate_sequence(const Graph& g) {
  PartitionSequence seq;
  Partition current = unit_partition(g);
  RefineTrace incoming;  // empty for level 0

  for (;;) {
    LevelRecord rec;
    rec.partition = current;
    rec.digest = make_digest(g, current, incoming);

    if (current.cells.empty()) {
      seq.levels.push_back(std::move(rec));
      break;
    }

    int set_pivot = first_effective_set_pivot(g, current);
    if (set_pivot >= 0) {
      rec.kind = RefinementKind::set;
      rec.pivot_cell = set_pivot;
      auto [next, trace] = set_refine_traced(g, current, set_pivot);
      seq.levels.push_back(std::move(rec));
      current = std::move(next);
      incoming = std::move(trace);
      continue;
    }

    int singleton = first_singleton_cell(current);
    if (singleton >= 0) {
      rec.kind = RefinementKind::vertex;
      rec.pivot_cell = singleton;
      rec.pivot_vertex = current.cells[singleton][0];
      auto [next, trace] = vertex_refine_traced(g, current, singleton, rec.pivot_vertex);
      seq.levels.push_back(std::move(rec));
      current = std::move(next);
      incoming = std::move(trace);
      continue;
    }

    // No singleton and set refinement is a no-op: backtracking level.
    rec.kind = RefinementKind::vertex;
    rec.is_backtracking = true;
    rec.pivot_cell = select_pivot_cell(g, current);
    rec.pivot_vertex = current.cells[rec.pivot_cell][0];
    auto [next, trace] = vertex_refine_traced(g, current, rec.pivot_cell, rec.pivot_vertex);
    seq.levels.push_back(std::move(rec));
    current = std::move(next);
    incoming = std::move(trace);
  }

  // Every vertex leaves the partition before the sequence ends, so the
  // discard logs alone order all of V.
  for (const auto& rec : seq.levels)
    for (const auto& [v, reason] : rec.partition.discard_log) seq.vertex_order.push_back(v);
  assert(static_cast<int>(seq.vertex_order.size()) == g.size());

  compute_subpartition_links(seq);
  return seq;
}

void compute_subpartition_links(PartitionSequence& seq) {
  seq.subpartition_links.clear();
  const int t = seq.t();
  for (int k = 0; k < t; ++k) {
    if (!seq.levels[k].is_backtracking) continue;
    for (int l = k + 1; l <= t; ++l) {
      if (l != t && !seq.levels[l].is_backtracking) continue;
      if (is_subpartition(seq.levels[l].partition, seq.levels[k].partition)) {
        seq.subpartition_links[k] = l;
        break;
      }
    }
    assert(seq.subpartition_links.count(k) == 1);
  }
}

namespace {

struct Follower {
  const FollowSpec& spec;
  const PartitionSequence& target;
  FollowResult result;

  explicit Follower(const FollowSpec& s) : spec(s), target(*s.target) {}

  void note_fail(int level) {
    if (level > result.fail_level) result.fail_level = level;
  }

  bool check_and_push(int next_level, Partition&& produced, const RefineTrace& trace,
                      std::vector<Partition>& alt) {
    if (spec.stats) ++spec.stats->nodes;
    LevelDigest digest = make_digest(*spec.graph, produced, trace);
    if (digest != target.levels[next_level].digest) {
      note_fail(next_level);
      return false;
    }
    alt.push_back(std::move(produced));
    return true;
  }

  // Extends the run from `level` (whose partition is alt.back() or the
  // initial one). True once stop_level has been reached compatibly.
  bool descend(int level, std::vector<Partition>& alt,
               std::vector<std::pair<int, Vertex>>& choices) {
    if (level == spec.stop_level) return true;
    const LevelRecord& rec = target.levels[level];
    const Partition& cur = alt.empty() ? spec.initial : alt.back();

    if (rec.kind == RefinementKind::set) {
      auto [next, trace] = set_refine_traced(*spec.graph, cur, rec.pivot_cell);
      if (!check_and_push(level + 1, std::move(next), trace, alt)) return false;
      if (descend(level + 1, alt, choices)) return true;
      alt.pop_back();
      return false;
    }

    assert(rec.kind == RefinementKind::vertex);
    const auto& cell = cur.cells[rec.pivot_cell];

    if (!rec.is_backtracking) {
      // Digest equality pinned the cell sizes, so the cell is a singleton.
      assert(cell.size() == 1);
      auto [next, trace] = vertex_refine_traced(*spec.graph, cur, rec.pivot_cell, cell[0]);
      if (!check_and_push(level + 1, std::move(next), trace, alt)) return false;
      if (descend(level + 1, alt, choices)) return true;
      alt.pop_back();
      return false;
    }

    std::vector<Vertex> candidates;
    if (level == spec.start_level && spec.first_candidate) {
      candidates.push_back(*spec.first_candidate);
    } else {
      FollowSpec::ChoiceMode mode =
          spec.mode_at ? spec.mode_at(level) : FollowSpec::ChoiceMode::enumerate;
      if (mode == FollowSpec::ChoiceMode::forced_first) {
        candidates.push_back(cell[0]);
      } else {
        candidates = cell;
        if (spec.candidate_filter) candidates = spec.candidate_filter(level, cell, choices);
      }
    }

    for (Vertex q : candidates) {
      if (spec.memo && spec.memo->contains(level, choices, q)) continue;
      auto [next, trace] = vertex_refine_traced(*spec.graph, cur, rec.pivot_cell, q);
      choices.emplace_back(level, q);
      bool ok = check_and_push(level + 1, std::move(next), trace, alt);
      if (ok) {
        if (descend(level + 1, alt, choices)) return true;
        alt.pop_back();
        // Only a committed choice undone by a deeper failure counts as a
        // backtrack; a candidate rejected by its own digest never did.
        if (spec.stats) ++spec.stats->backtracks;
      }
      choices.pop_back();
      if (spec.memo) spec.memo->record(level, choices, q);
    }
    return false;
  }
};

}  // namespace

FollowResult follow_sequence(const FollowSpec& spec) {
  if (!spec.graph || !spec.target) throw std::invalid_argument("follow_sequence: missing inputs");
  Follower f(spec);
  f.result.ok = f.descend(spec.start_level, f.result.alt, f.result.choices);
  if (!f.result.ok) f.result.alt.clear();
  return f.result;
}

ReplayResult replay_alternative(const Graph& g, const PartitionSequence& seq, int k, Vertex q,
                                FailureMemo* memo, FollowStats* stats) {
  if (k < 0 || k >= seq.t() || !seq.levels[k].is_backtracking)
    throw std::invalid_argument("replay_alternative: k is not a backtracking level");
  auto it = seq.subpartition_links.find(k);
  if (it == seq.subpartition_links.end())
    throw std::invalid_argument("replay_alternative: missing sub-partition link");

  FollowSpec spec;
  spec.graph = &g;
  spec.target = &seq;
  spec.start_level = k;
  spec.stop_level = it->second;
  spec.initial = seq.levels[k].partition;
  spec.first_candidate = q;
  spec.memo = memo;
  spec.stats = stats;

  FollowResult fr = follow_sequence(spec);
  ReplayResult out;
  out.compatible = fr.ok;
  out.fail_level = fr.fail_level;
  out.alt = std::move(fr.alt);
  return out;
}

}  // namespace graphsym
