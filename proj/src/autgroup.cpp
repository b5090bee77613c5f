#include "graphsym/autgroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphsym {

std::vector<std::vector<Vertex>> UnionFind::groups() {
  const int n = static_cast<int>(parent.size());
  std::vector<int> slot(n, -1);
  std::vector<std::vector<Vertex>> out;
  for (int v = 0; v < n; ++v) {
    const int root = find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[root]].push_back(v);
  }
  return out;
}

SubpartitionContext SubpartitionContext::make(int k, int l, std::vector<Vertex> e,
                                              std::vector<Vertex> eprime,
                                              std::vector<Vertex> vl_order,
                                              std::vector<Vertex> wl) {
  SubpartitionContext ctx;
  ctx.k = k;
  ctx.l = l;
  ctx.E = std::move(e);
  ctx.Eprime = std::move(eprime);
  ctx.Vl_order = std::move(vl_order);
  ctx.Wl = std::move(wl);
  if (ctx.E.size() != ctx.Eprime.size())
    throw std::logic_error("subpartition context: discard counts differ");

  auto contains = [](const std::vector<Vertex>& xs, Vertex v) {
    return std::find(xs.begin(), xs.end(), v) != xs.end();
  };
  for (Vertex v : ctx.E) {
    if (contains(ctx.Eprime, v))
      ctx.A.push_back(v);
    else
      ctx.B.push_back(v);
  }
  for (Vertex v : ctx.Eprime)
    if (!contains(ctx.E, v)) ctx.C.push_back(v);
  for (Vertex v : ctx.Vl_order)
    if (contains(ctx.Wl, v)) ctx.D.push_back(v);
  return ctx;
}

std::vector<Vertex> compute_subpartition_mapping(const SubpartitionContext& ctx) {
  std::vector<Vertex> w = ctx.Vl_order;
  auto index_in = [](const std::vector<Vertex>& xs, Vertex v) {
    auto it = std::find(xs.begin(), xs.end(), v);
    if (it == xs.end()) throw std::logic_error("subpartition mapping: missing chase vertex");
    return static_cast<int>(it - xs.begin());
  };
  auto in_A = [&](Vertex v) {
    return std::find(ctx.A.begin(), ctx.A.end(), v) != ctx.A.end();
  };

  // Each vertex discarded only by the alternative run sits somewhere in w;
  // its replacement is found by chasing positions through the shared
  // discards until a vertex discarded only by the original run appears.
  for (Vertex c : ctx.C) {
    int j = index_in(ctx.Eprime, c);
    std::size_t steps = 0;
    while (in_A(ctx.E[j])) {
      j = index_in(ctx.Eprime, ctx.E[j]);
      if (++steps > ctx.E.size())
        throw std::logic_error("subpartition mapping: chase does not terminate");
    }
    w[index_in(w, c)] = ctx.E[j];
  }
  return w;
}

GeneratorInfo infer_generator(const Graph& g, const PartitionSequence& seq, int k,
                              const std::vector<Partition>& alt) {
  const auto link = seq.subpartition_links.find(k);
  if (link == seq.subpartition_links.end())
    throw std::invalid_argument("infer_generator: level has no sub-partition link");
  // alt holds the alternative's partitions for levels k+1..l.
  const int l = link->second;
  if (static_cast<int>(alt.size()) != l - k)
    throw std::invalid_argument("infer_generator: alternative run has wrong length");

  std::vector<Vertex> eprime;
  for (const auto& p : alt)
    for (const auto& [v, reason] : p.discard_log) eprime.push_back(v);

  std::vector<Vertex> wl;
  for (const auto& cell : alt.back().cells)
    for (Vertex v : cell) wl.push_back(v);

  auto ctx = SubpartitionContext::make(k, l, seq.discards_between(k, l), std::move(eprime),
                                       seq.discards_between(l, seq.t()), std::move(wl));
  const std::vector<Vertex> w = compute_subpartition_mapping(ctx);

  GeneratorInfo info;
  info.perm.resize(g.size());
  for (int v = 0; v < g.size(); ++v) info.perm[v] = v;
  for (std::size_t i = 0; i < ctx.E.size(); ++i) info.perm[ctx.E[i]] = ctx.Eprime[i];
  for (std::size_t i = 0; i < ctx.Vl_order.size(); ++i) info.perm[ctx.Vl_order[i]] = w[i];
  info.truncated = l < seq.t();

  if (!is_bijection(info.perm, g.size()))
    throw std::logic_error("inferred generator is not a permutation");
  if (!is_automorphism(g, info.perm))
    throw std::logic_error("inferred generator is not an automorphism");
  info.ctx = std::move(ctx);
  return info;
}

AutGroupResult search_automorphisms(const Graph& g, PartitionSequence& seq,
                                    const SearchOptions& options) {
  AutGroupResult result;
  FailureMemo memo;
  memo.enabled = options.use_failure_memo;
  UnionFind uf(g.size());

  const std::vector<int> bt = seq.backtracking_levels();
  for (auto it = bt.rbegin(); it != bt.rend(); ++it) {
    const int k = *it;
    auto& rec = seq.levels[k];
    const Vertex p = rec.pivot_vertex;
    const std::vector<Vertex>& cell = rec.partition.cells[rec.pivot_cell];

    for (Vertex q : cell) {
      if (q == p || uf.same(p, q)) continue;
      ++result.stats.replays;
      ReplayResult rr = replay_alternative(g, seq, k, q, &memo, &result.stats.follow);
      if (!rr.compatible) continue;
      GeneratorInfo info = infer_generator(g, seq, k, rr.alt);
      if (info.truncated) ++result.stats.truncated_generators;
      uf.merge_permutation(info.perm);
      result.generators.push_back(std::move(info.perm));
    }

    std::vector<Vertex> equivalents;
    for (Vertex q : cell)
      if (q != p && uf.same(p, q)) equivalents.push_back(q);
    if (equivalents.size() + 1 == cell.size()) rec.removed = true;
    result.level_equivalents[k] = std::move(equivalents);
  }

  result.stats.memo_hits = memo.hits();
  result.stats.memo_entries = memo.size();
  result.order = group_order(result, seq);
  result.orbit_partition = uf.groups();
  return result;
}

BigUint group_order(const AutGroupResult& result, const PartitionSequence& seq) {
  BigUint order(1);
  for (int k : seq.backtracking_levels()) {
    const auto it = result.level_equivalents.find(k);
    const std::uint64_t factor =
        1 + (it == result.level_equivalents.end() ? 0 : it->second.size());
    order.mul_small(factor);
  }
  return order;
}

std::vector<std::vector<Vertex>> orbits(const AutGroupResult& result, int n) {
  UnionFind uf(n);
  for (const auto& gen : result.generators) uf.merge_permutation(gen);
  return uf.groups();
}

}  // namespace graphsym
