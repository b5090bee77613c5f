#ifndef GRAPHSYM_AUTGROUP_HPP
#define GRAPHSYM_AUTGROUP_HPP

#include <map>
#include <vector>

#include "graphsym/bigint.hpp"
#include "graphsym/graph.hpp"
#include "graphsym/sequence.hpp"

namespace graphsym {

struct UnionFind {
  explicit UnionFind(int n) : parent(n), size(n, 1) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool same(int a, int b) { return find(a) == find(b); }
  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
  void merge_permutation(const std::vector<Vertex>& perm) {
    for (int v = 0; v < static_cast<int>(perm.size()); ++v) merge(v, perm[v]);
  }
  std::vector<std::vector<Vertex>> groups();

  std::vector<int> parent;
  std::vector<int> size;
};

// Everything the truncated-replay inference works with, for a pair of
// levels k < l where level l is a sub-partition of level k. E and E' are
// the vertices discarded between the two levels in the original and the
// alternative run; Vl_order is the original discard order of the vertices
// still active at level l; Wl is the alternative's active set at level l.
struct SubpartitionContext {
  int k = 0;
  int l = 0;
  std::vector<Vertex> E;
  std::vector<Vertex> Eprime;
  std::vector<Vertex> Vl_order;
  std::vector<Vertex> Wl;
  std::vector<Vertex> A;  // E intersect E'
  std::vector<Vertex> B;  // E \ A, in E order
  std::vector<Vertex> C;  // E' \ A, in E' order
  std::vector<Vertex> D;  // Vl intersect Wl

  static SubpartitionContext make(int k, int l, std::vector<Vertex> e, std::vector<Vertex> eprime,
                                  std::vector<Vertex> vl_order, std::vector<Vertex> wl);
};

// The chain-substitution step: starting from w = Vl_order, each vertex of C
// is replaced by the member of B its chase through A lands on. The result
// lists the alternative-side images of Vl_order position by position.
std::vector<Vertex> compute_subpartition_mapping(const SubpartitionContext& ctx);

struct GeneratorInfo {
  std::vector<Vertex> perm;
  SubpartitionContext ctx;
  bool truncated = false;  // inferred from a proper sub-partition link (l < t)
};

// Assembles the automorphism guaranteed by a compatible alternative between
// level k and its sub-partition link: identity off level k's active set,
// E -> E' positionally, Vl_order -> mapping positionally. Throws
// std::logic_error if the result fails is_automorphism; that would be an
// implementation bug, never an acceptable outcome.
GeneratorInfo infer_generator(const Graph& g, const PartitionSequence& seq, int k,
                              const std::vector<Partition>& alt);

struct AutGroupStats {
  long long replays = 0;
  long long truncated_generators = 0;
  FollowStats follow;
  long long memo_hits = 0;
  std::size_t memo_entries = 0;
};

struct AutGroupResult {
  std::vector<std::vector<Vertex>> generators;
  std::vector<std::vector<Vertex>> orbit_partition;  // sorted orbits, sorted by first member
  BigUint order;
  std::map<int, std::vector<Vertex>> level_equivalents;  // excludes the pivot itself
  AutGroupStats stats;
};

struct SearchOptions {
  bool use_failure_memo = true;
};

// Walks the backtracking levels last to first; for each candidate of the
// pivot cell not yet known equivalent to the pivot, replays the sequence and
// on compatibility infers a generator. Marks a level removed once the whole
// pivot cell is equivalent. The group order is the product of the orbit
// sizes collected per level.
AutGroupResult search_automorphisms(const Graph& g, PartitionSequence& seq,
                                    const SearchOptions& options = {});

// Product over backtracking levels of |equivalents + pivot|.
BigUint group_order(const AutGroupResult& result, const PartitionSequence& seq);

// Orbit closure of the generator set; rigid graphs yield all singletons.
std::vector<std::vector<Vertex>> orbits(const AutGroupResult& result, int n);

}  // namespace graphsym

#endif
