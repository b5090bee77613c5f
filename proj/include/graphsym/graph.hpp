#ifndef GRAPHSYM_GRAPH_HPP
#define GRAPHSYM_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace graphsym {

using Vertex = int;

// Adjacency codes between an ordered vertex pair (u, v):
//   0 no arc in either direction, 1 arc v->u only, 2 arc u->v only, 3 both.
// Undirected edges are represented as code 3 on both sides.
using AdjCode = std::uint8_t;

constexpr AdjCode adj_inverse(AdjCode c) {
  // 0 and 3 are self-inverse, 1 and 2 swap.
  constexpr AdjCode table[4] = {0, 2, 1, 3};
  return table[c & 3];
}

// Counts of neighbors of a vertex by adjacency code, strongest code first.
struct DegreeTriple {
  int d3 = 0;
  int d2 = 0;
  int d1 = 0;

  bool all_zero() const { return d3 == 0 && d2 == 0 && d1 == 0; }

  friend bool operator==(const DegreeTriple& a, const DegreeTriple& b) {
    return a.d3 == b.d3 && a.d2 == b.d2 && a.d1 == b.d1;
  }
  friend bool operator!=(const DegreeTriple& a, const DegreeTriple& b) { return !(a == b); }
  // Lexicographic on (d3, d2, d1); refinement orders sub-cells descending.
  friend bool operator<(const DegreeTriple& a, const DegreeTriple& b) {
    if (a.d3 != b.d3) return a.d3 < b.d3;
    if (a.d2 != b.d2) return a.d2 < b.d2;
    return a.d1 < b.d1;
  }
  DegreeTriple& operator+=(const DegreeTriple& o) {
    d3 += o.d3;
    d2 += o.d2;
    d1 += o.d1;
    return *this;
  }
};

// Directed graph over vertices 0..n-1 with a dense code matrix.
// The matrix is kept consistent: code(u,v) == adj_inverse(code(v,u)) and
// code(v,v) == 0. Self-loops are rejected. Instances are treated as
// immutable once built; all algorithms take const references.
class Graph {
 public:
  explicit Graph(int n);

  // Builds from a list of arcs (u, v). An arc pair in both directions, or a
  // repeated arc, merges into the expected code. Throws std::invalid_argument
  // on n < 1, vertices out of range, or self-loops.
  static Graph from_arcs(int n, const std::vector<std::pair<Vertex, Vertex>>& arcs);

  int size() const { return n_; }

  AdjCode code(Vertex u, Vertex v) const { return adj_[static_cast<std::size_t>(u) * n_ + v]; }

  // Adds the arc u->v, merging with any existing code. Intended for graph
  // construction only; see the immutability note above.
  void add_arc(Vertex u, Vertex v);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

 private:
  int n_;
  std::vector<AdjCode> adj_;
};

// Degree of v restricted to the reference set s (v itself is skipped if
// present). All-zero exactly when v has no links into s \ {v}.
DegreeTriple available_degree(const Graph& g, Vertex v, const std::vector<Vertex>& s);

bool is_bijection(const std::vector<Vertex>& perm, int n);

// Relabels g through perm: the returned graph h satisfies
// h.code(perm[u], perm[v]) == g.code(u, v). Throws on a non-bijective perm.
Graph apply_permutation(const Graph& g, const std::vector<Vertex>& perm);

// True iff perm is a code-preserving self-mapping of g.
bool is_automorphism(const Graph& g, const std::vector<Vertex>& perm);

}  // namespace graphsym

#endif
