#ifndef GRAPHSYM_SEQUENCE_HPP
#define GRAPHSYM_SEQUENCE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "graphsym/partition.hpp"

namespace graphsym {

enum class RefinementKind : std::uint8_t { none, set, vertex };

// Label-independent summary of one level: cell sizes, the structural trace
// of the refinement that produced the level, per-cell-pair degree sums, and
// the number of vertices the producing step removed. Two runs whose levels
// have equal digests made the same structural decisions, which is exactly
// the per-level compatibility the replay and the matcher need.
struct LevelDigest {
  std::vector<int> sizes;
  RefineTrace incoming;
  std::vector<DegreeTriple> degree_sums;  // cells x cells, row-major
  int discard_count = 0;

  friend bool operator==(const LevelDigest& a, const LevelDigest& b) {
    return a.sizes == b.sizes && a.incoming == b.incoming && a.degree_sums == b.degree_sums &&
           a.discard_count == b.discard_count;
  }
  friend bool operator!=(const LevelDigest& a, const LevelDigest& b) { return !(a == b); }
};

LevelDigest make_digest(const Graph& g, const Partition& p, const RefineTrace& incoming);

// Partition at one level plus the refinement applied at this level to reach
// the next one. The terminal level has kind none. A backtracking level is a
// vertex refinement whose pivot cell holds several vertices; `removed` is set
// later by the automorphism search once the whole pivot cell is proven
// equivalent.
struct LevelRecord {
  Partition partition;
  LevelDigest digest;
  RefinementKind kind = RefinementKind::none;
  int pivot_cell = -1;
  Vertex pivot_vertex = -1;
  bool is_backtracking = false;
  bool removed = false;
};

struct PartitionSequence {
  std::vector<LevelRecord> levels;          // levels[j] holds the level-j partition
  std::vector<Vertex> vertex_order;         // discard order over all of V
  std::map<int, int> subpartition_links;    // backtracking level -> earliest usable truncation level

  int t() const { return static_cast<int>(levels.size()) - 1; }

  std::vector<int> backtracking_levels() const {
    std::vector<int> out;
    for (int j = 0; j < static_cast<int>(levels.size()); ++j)
      if (levels[j].is_backtracking) out.push_back(j);
    return out;
  }
  int remaining_backtracking() const {
    int n = 0;
    for (const auto& rec : levels)
      if (rec.is_backtracking && !rec.removed) ++n;
    return n;
  }
  // Vertices removed by the refinements applied at levels [from, to).
  std::vector<Vertex> discards_between(int from, int to) const {
    std::vector<Vertex> out;
    for (int j = from + 1; j <= to; ++j)
      for (const auto& [v, reason] : levels[j].partition.discard_log) out.push_back(v);
    return out;
  }
};

struct PivotScore {
  bool early_accept = false;
  long long score = 0;  // vertices discarded by the probe plus fixpoint cell count
};

// Builds the full sequence: at each level, the first effective set
// refinement wins; otherwise the first singleton cell is individualized;
// otherwise, if cells remain, the level is a backtracking level and the
// pivot cell is chosen by select_pivot_cell. Ends when no cells remain.
PartitionSequence generate_sequence(const Graph& g);

// Scores one candidate cell: individualize its first vertex, set-refine to
// the equitable fixpoint, early-accept if the fixpoint is a sub-partition of
// p. Pure; p must be an equitable backtracking-grade partition.
PivotScore score_pivot_candidate(const Graph& g, const Partition& p, int cell_index);

// Probes the first cell of each distinct (size, degree row) signature.
// An early accept wins outright; otherwise the best score does, ties to the
// smallest cell index. Not isomorphism-invariant, and deliberately so: only
// replays ever re-use the choice, and they follow recorded positions.
int select_pivot_cell(const Graph& g, const Partition& p);

// For every backtracking level k, the smallest later backtracking-or-
// terminal level whose partition is a sub-partition of level k's. The
// terminal level always qualifies because sequences end with no active
// vertices.
void compute_subpartition_links(PartitionSequence& seq);

// Dead-end memo for replays and matching. Keys are exact: the level, the
// pivot vertices chosen at backtracking levels so far on this alternative
// path, and the candidate that failed. Exact keys make hits trivially sound.
class FailureMemo {
 public:
  bool enabled = true;

  bool contains(int level, const std::vector<std::pair<int, Vertex>>& prefix, Vertex q) {
    if (!enabled) return false;
    if (entries_.count(encode(level, prefix, q)) == 0) return false;
    ++hits_;
    return true;
  }
  void record(int level, const std::vector<std::pair<int, Vertex>>& prefix, Vertex q) {
    if (enabled) entries_.insert(encode(level, prefix, q));
  }
  long long hits() const { return hits_; }
  std::size_t size() const { return entries_.size(); }

 private:
  static std::vector<int> encode(int level, const std::vector<std::pair<int, Vertex>>& prefix,
                                 Vertex q) {
    std::vector<int> key{level};
    for (const auto& [lvl, v] : prefix) {
      key.push_back(lvl);
      key.push_back(v);
    }
    key.push_back(-1);
    key.push_back(q);
    return key;
  }

  std::set<std::vector<int>> entries_;
  long long hits_ = 0;
};

struct FollowStats {
  long long nodes = 0;       // partitions produced
  long long backtracks = 0;  // committed choices later undone by a deeper failure
};

// Re-executes the recorded refinements of `target` on `graph`, starting from
// `initial` at level start_level, checking digest equality at every produced
// level, up to and including stop_level.
//
// At a backtracking level the candidate pivot comes from the cell at the
// recorded position: `first_candidate` pins the choice at start_level (used
// by replays); elsewhere `mode_at` decides between enumerating the cell and
// trying only its first vertex, and `candidate_filter`, when set, may thin
// the enumeration (used for sound orbit pruning during matching).
struct FollowSpec {
  const Graph* graph = nullptr;
  const PartitionSequence* target = nullptr;
  int start_level = 0;
  int stop_level = 0;
  Partition initial;
  std::optional<Vertex> first_candidate;

  enum class ChoiceMode { enumerate, forced_first };
  std::function<ChoiceMode(int)> mode_at;  // defaults to enumerate
  std::function<std::vector<Vertex>(int, const std::vector<Vertex>&,
                                    const std::vector<std::pair<int, Vertex>>&)>
      candidate_filter;

  FailureMemo* memo = nullptr;
  FollowStats* stats = nullptr;
};

struct FollowResult {
  bool ok = false;
  int fail_level = -1;                            // deepest level that failed a check
  std::vector<Partition> alt;                     // produced partitions, levels start+1 .. stop
  std::vector<std::pair<int, Vertex>> choices;    // pivots taken at backtracking levels
};

FollowResult follow_sequence(const FollowSpec& spec);

struct ReplayResult {
  bool compatible = false;
  int fail_level = -1;
  std::vector<Partition> alt;  // levels k+1 .. subpartition_links[k]
};

// Replays the sequence from backtracking level k with q individualized in
// place of the recorded pivot, enumerating nested backtracking candidates,
// stopping at subpartition_links[k]. Compatible iff every produced level
// matches the original's digest.
ReplayResult replay_alternative(const Graph& g, const PartitionSequence& seq, int k, Vertex q,
                                FailureMemo* memo = nullptr, FollowStats* stats = nullptr);

}  // namespace graphsym

#endif
