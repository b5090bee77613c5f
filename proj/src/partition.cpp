#include "graphsym/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphsym {
namespace {

// Splits each cell of `cells` into runs of equal key, keys descending,
// preserving in-cell order inside a run. Appends one SplitChild per run.
template <typename KeyFn>
std::vector<std::vector<Vertex>> split_cells(const std::vector<std::vector<Vertex>>& cells,
                                             KeyFn key_of, RefineTrace& trace) {
  std::vector<std::vector<Vertex>> out;
  for (int ci = 0; ci < static_cast<int>(cells.size()); ++ci) {
    const auto& cell = cells[ci];
    if (cell.empty()) continue;
    std::vector<std::pair<std::uint64_t, Vertex>> keyed;
    keyed.reserve(cell.size());
    for (Vertex v : cell) keyed.emplace_back(key_of(v), v);
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    std::size_t i = 0;
    while (i < keyed.size()) {
      std::size_t j = i;
      while (j < keyed.size() && keyed[j].first == keyed[i].first) ++j;
      std::vector<Vertex> child;
      child.reserve(j - i);
      for (std::size_t m = i; m < j; ++m) child.push_back(keyed[m].second);
      trace.children.push_back({ci, keyed[i].first, static_cast<int>(j - i)});
      out.push_back(std::move(child));
      i = j;
    }
  }
  return out;
}

// Removes every vertex that sits alone in a cell and has an all-zero degree
// toward the whole post-split active set. Disconnection is symmetric (code 0
// both ways), so one pass suffices: removing such a vertex cannot strand a
// vertex that was linked before.
void drop_disconnected_singletons(const Graph& g, std::vector<std::vector<Vertex>>& cells,
                                  Partition& result, RefineTrace& trace) {
  std::vector<char> active(g.size(), 0);
  for (const auto& cell : cells)
    for (Vertex v : cell) active[v] = 1;

  auto linked = [&](Vertex v) {
    for (Vertex u = 0; u < g.size(); ++u)
      if (u != v && active[u] && g.code(v, u) != 0) return true;
    return false;
  };

  for (int ci = 0; ci < static_cast<int>(cells.size()); ++ci) {
    if (cells[ci].size() != 1) continue;
    Vertex v = cells[ci][0];
    if (!linked(v)) {
      result.discard_log.emplace_back(v, DiscardReason::disconnected);
      trace.discards.emplace_back(ci, DiscardReason::disconnected);
      cells[ci].clear();
    }
  }
  for (const auto& cell : cells)
    if (!cell.empty()) result.cells.push_back(cell);
}

void check_cell_index(const Partition& p, int pivot_cell) {
  if (pivot_cell < 0 || pivot_cell >= static_cast<int>(p.cells.size()))
    throw std::invalid_argument("pivot cell index out of range");
}

}  // namespace

Partition unit_partition(const Graph& g) {
  Partition p;
  std::vector<Vertex> all(g.size());
  for (Vertex v = 0; v < g.size(); ++v) all[v] = v;
  p.cells.push_back(std::move(all));
  return p;
}

std::pair<Partition, RefineTrace> set_refine_traced(const Graph& g, const Partition& p,
                                                    int pivot_cell) {
  check_cell_index(p, pivot_cell);
  const std::vector<Vertex>& pivot = p.cells[pivot_cell];

  Partition result;
  RefineTrace trace;
  auto key_of = [&](Vertex v) { return pack_triple(available_degree(g, v, pivot)); };
  auto split = split_cells(p.cells, key_of, trace);
  drop_disconnected_singletons(g, split, result, trace);
  return {std::move(result), std::move(trace)};
}

Partition set_refine(const Graph& g, const Partition& p, int pivot_cell) {
  return set_refine_traced(g, p, pivot_cell).first;
}

std::pair<Partition, RefineTrace> vertex_refine_traced(const Graph& g, const Partition& p,
                                                       int pivot_cell, Vertex pivot_vertex) {
  check_cell_index(p, pivot_cell);
  const auto& cell = p.cells[pivot_cell];
  if (std::find(cell.begin(), cell.end(), pivot_vertex) == cell.end())
    throw std::invalid_argument("pivot vertex not in pivot cell");

  Partition result;
  RefineTrace trace;
  result.discard_log.emplace_back(pivot_vertex, DiscardReason::pivot);
  trace.discards.emplace_back(-1, DiscardReason::pivot);

  std::vector<std::vector<Vertex>> remaining = p.cells;
  auto& pc = remaining[pivot_cell];
  pc.erase(std::find(pc.begin(), pc.end(), pivot_vertex));

  auto key_of = [&](Vertex v) { return static_cast<std::uint64_t>(g.code(pivot_vertex, v)); };
  auto split = split_cells(remaining, key_of, trace);
  drop_disconnected_singletons(g, split, result, trace);
  return {std::move(result), std::move(trace)};
}

Partition vertex_refine(const Graph& g, const Partition& p, int pivot_cell, Vertex pivot_vertex) {
  return vertex_refine_traced(g, p, pivot_cell, pivot_vertex).first;
}

bool is_equitable(const Graph& g, const Partition& p) {
  for (const auto& cell : p.cells) {
    if (cell.size() == 1) continue;
    for (const auto& ref : p.cells) {
      DegreeTriple first = available_degree(g, cell[0], ref);
      for (std::size_t i = 1; i < cell.size(); ++i)
        if (available_degree(g, cell[i], ref) != first) return false;
    }
  }
  return true;
}

CellSignature signature(const Graph& g, const Partition& p, int cell_index) {
  check_cell_index(p, cell_index);
  CellSignature sig;
  sig.size = static_cast<int>(p.cells[cell_index].size());
  Vertex rep = p.cells[cell_index][0];
  sig.degrees.reserve(p.cells.size());
  for (const auto& cell : p.cells) sig.degrees.push_back(available_degree(g, rep, cell));
  return sig;
}

bool compatible(const Graph& ga, const Partition& pa, const Graph& gb, const Partition& pb) {
  if (pa.cells.size() != pb.cells.size()) return false;
  for (int i = 0; i < static_cast<int>(pa.cells.size()); ++i)
    if (signature(ga, pa, i) != signature(gb, pb, i)) return false;
  return true;
}

bool is_subpartition(const Partition& lower, const Partition& upper) {
  std::vector<char> used(upper.cells.size(), 0);
  for (const auto& cell : lower.cells) {
    int home = -1;
    for (int ui = 0; ui < static_cast<int>(upper.cells.size()) && home < 0; ++ui) {
      const auto& up = upper.cells[ui];
      bool contains_all = true;
      for (Vertex v : cell)
        if (std::find(up.begin(), up.end(), v) == up.end()) {
          contains_all = false;
          break;
        }
      if (contains_all) home = ui;
    }
    if (home < 0) return false;        // cell not inside any upper cell
    if (used[home]) return false;      // two cells share an upper cell
    used[home] = 1;
  }
  return true;
}

}  // namespace graphsym
