#ifndef GRAPHSYM_PARTITION_HPP
#define GRAPHSYM_PARTITION_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "graphsym/graph.hpp"

namespace graphsym {

enum class DiscardReason : std::uint8_t { pivot, disconnected };

// Ordered partition of the surviving ("active") vertices into ordered,
// nonempty cells. discard_log lists the vertices removed by the refinement
// step that produced this partition, in removal order.
struct Partition {
  std::vector<std::vector<Vertex>> cells;
  std::vector<std::pair<Vertex, DiscardReason>> discard_log;

  int active_count() const {
    int n = 0;
    for (const auto& c : cells) n += static_cast<int>(c.size());
    return n;
  }
  std::vector<Vertex> active() const {
    std::vector<Vertex> out;
    for (const auto& c : cells) out.insert(out.end(), c.begin(), c.end());
    return out;
  }
  bool all_singletons() const {
    for (const auto& c : cells)
      if (c.size() != 1) return false;
    return true;
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.cells == b.cells && a.discard_log == b.discard_log;
  }
};

// One post-split cell of a refinement, before disconnected-vertex removal.
// parent_cell indexes the pre-refinement partition; key is the split value
// (packed degree triple for set refinements, adjacency code for vertex
// refinements). Children of one parent are listed in descending key order.
struct SplitChild {
  int parent_cell;
  std::uint64_t key;
  int size;

  friend bool operator==(const SplitChild& a, const SplitChild& b) {
    return a.parent_cell == b.parent_cell && a.key == b.key && a.size == b.size;
  }
};

// Structural record of one refinement step: the split layout plus which
// post-split cells lost a vertex and why (child -1 marks the pivot vertex,
// which leaves before the split). Two refinements with equal traces made
// the same structural decisions.
struct RefineTrace {
  std::vector<SplitChild> children;
  std::vector<std::pair<int, DiscardReason>> discards;

  friend bool operator==(const RefineTrace& a, const RefineTrace& b) {
    return a.children == b.children && a.discards == b.discards;
  }
};

constexpr std::uint64_t pack_triple(const DegreeTriple& t) {
  return (static_cast<std::uint64_t>(t.d3) << 42) | (static_cast<std::uint64_t>(t.d2) << 21) |
         static_cast<std::uint64_t>(t.d1);
}

// Single cell holding all vertices. Throws on an empty graph.
Partition unit_partition(const Graph& g);

// Splits every cell into maximal runs of equal available degree toward the
// pivot cell, sub-cells in descending degree order; afterwards removes every
// vertex that sits alone in a cell with no links left into the active set.
Partition set_refine(const Graph& g, const Partition& p, int pivot_cell);
std::pair<Partition, RefineTrace> set_refine_traced(const Graph& g, const Partition& p,
                                                    int pivot_cell);

// Removes pivot_vertex (logged with reason pivot), splits every cell by the
// adjacency code from pivot_vertex, sub-cells in descending code order, then
// applies the same disconnected-singleton removal as set_refine.
Partition vertex_refine(const Graph& g, const Partition& p, int pivot_cell, Vertex pivot_vertex);
std::pair<Partition, RefineTrace> vertex_refine_traced(const Graph& g, const Partition& p,
                                                       int pivot_cell, Vertex pivot_vertex);

// True iff any two vertices sharing a cell have equal available degree with
// every cell.
bool is_equitable(const Graph& g, const Partition& p);

// Size plus the representative's degree toward each cell, in cell order.
// Meaningful for equitable partitions, where the representative stands for
// the whole cell.
struct CellSignature {
  int size = 0;
  std::vector<DegreeTriple> degrees;

  friend bool operator==(const CellSignature& a, const CellSignature& b) {
    return a.size == b.size && a.degrees == b.degrees;
  }
  friend bool operator!=(const CellSignature& a, const CellSignature& b) { return !(a == b); }
};

CellSignature signature(const Graph& g, const Partition& p, int cell_index);

// Position-wise signature equality between two equitable partitions,
// possibly over different graphs.
bool compatible(const Graph& ga, const Partition& pa, const Graph& gb, const Partition& pb);

// True iff every cell of lower lies inside a cell of upper and no two cells
// of lower lie inside the same cell of upper. The empty partition qualifies
// vacuously.
bool is_subpartition(const Partition& lower, const Partition& upper);

}  // namespace graphsym

#endif
