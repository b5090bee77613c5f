#ifndef GRAPHSYM_FAMILIES_HPP
#define GRAPHSYM_FAMILIES_HPP

#include <cstdint>
#include <string>

#include "graphsym/graph.hpp"

namespace graphsym {

Graph empty_graph(int n);
Graph path_graph(int n);       // n >= 1
Graph cycle_graph(int n);      // n >= 3
Graph complete_graph(int n);   // n >= 1
Graph directed_cycle(int n);   // n >= 2, arcs i -> i+1 mod n
Graph petersen_graph();

// Quadratic-residue tournament on a prime q with q % 4 == 3:
// arc u -> v iff (v - u) is a nonzero square mod q.
Graph paley_tournament(int q);

// Quadratic-residue undirected graph on a prime q with q % 4 == 1:
// edge u ~ v iff (v - u) is a nonzero square mod q.
Graph paley_graph(int q);

// n^2 cells of the cyclic latin square; two cells are adjacent when they
// share a row, a column, or a symbol (symbol of (r, c) is (r + c) mod n).
Graph latin_square_graph(int n);  // n >= 2

// m disjoint copies of `inner`; every cross-copy pair gets `code`, which
// must be 0 (disjoint union) or 3 (complete join).
Graph component_join(const Graph& inner, int m, AdjCode code);

// Deterministic G(n, p) samples; the same arguments always give the same
// graph, independent of platform.
Graph random_graph(int n, double p, std::uint64_t seed);
Graph random_digraph(int n, double p, std::uint64_t seed);

bool looks_like_family_spec(const std::string& text);

// Grammar: family:NAME[:ARG...]. Examples:
//   family:cycle:5
//   family:petersen
//   family:paley_tournament:19
//   family:component_join:cycle:5:2:0
//   family:random_graph:20:0.5:7
Graph parse_family_spec(const std::string& text);

}  // namespace graphsym

#endif
