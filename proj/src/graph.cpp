#include "graphsym/graph.hpp"

#include <stdexcept>
#include <string>

namespace graphsym {

Graph::Graph(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  adj_.assign(static_cast<std::size_t>(n) * n, 0);
}

void Graph::add_arc(Vertex u, Vertex v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::invalid_argument("arc endpoint out of range: " + std::to_string(u) + "->" +
                                std::to_string(v));
  if (u == v) throw std::invalid_argument("self-loops are not supported");
  // An arc u->v contributes code 2 at (u,v) and code 1 at (v,u).
  adj_[static_cast<std::size_t>(u) * n_ + v] |= 2;
  adj_[static_cast<std::size_t>(v) * n_ + u] |= 1;
}

Graph Graph::from_arcs(int n, const std::vector<std::pair<Vertex, Vertex>>& arcs) {
  Graph g(n);
  for (const auto& [u, v] : arcs) g.add_arc(u, v);
  return g;
}

DegreeTriple available_degree(const Graph& g, Vertex v, const std::vector<Vertex>& s) {
  DegreeTriple t;
  for (Vertex u : s) {
    if (u == v) continue;
    switch (g.code(v, u)) {
      case 3: ++t.d3; break;
      case 2: ++t.d2; break;
      case 1: ++t.d1; break;
      default: break;
    }
  }
  return t;
}

bool is_bijection(const std::vector<Vertex>& perm, int n) {
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (Vertex v : perm) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Graph apply_permutation(const Graph& g, const std::vector<Vertex>& perm) {
  const int n = g.size();
  if (!is_bijection(perm, n)) throw std::invalid_argument("apply_permutation: not a bijection");
  Graph h(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      if (AdjCode c = g.code(u, v); c & 2) h.add_arc(perm[u], perm[v]);
    }
  return h;
}

bool is_automorphism(const Graph& g, const std::vector<Vertex>& perm) {
  const int n = g.size();
  if (!is_bijection(perm, n)) return false;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && g.code(u, v) != g.code(perm[u], perm[v])) return false;
  return true;
}

}  // namespace graphsym
