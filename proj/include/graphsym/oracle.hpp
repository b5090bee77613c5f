#ifndef GRAPHSYM_ORACLE_HPP
#define GRAPHSYM_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "graphsym/graph.hpp"

namespace graphsym {

// Caps for the exhaustive reference search. max_perms bounds the number of
// complete candidate mappings examined, not partial assignments.
struct OracleBudget {
  int max_n = 10;
  long long max_perms = 4'000'000;
};

struct BruteAutResult {
  std::vector<std::vector<Vertex>> automorphisms;  // all of them, in lexicographic order
  std::uint64_t order = 0;
  std::vector<std::vector<Vertex>> orbits;
};

// Enumerates the full automorphism group by incremental assignment with
// adjacency-consistency pruning. The pruning is lossless, so the result is
// exact. Throws std::invalid_argument when the graph exceeds budget.max_n
// and std::runtime_error when max_perms is exhausted.
BruteAutResult brute_force_aut(const Graph& g, const OracleBudget& budget = {});

// First isomorphism a -> b in lexicographic order, or nullopt.
std::optional<std::vector<Vertex>> brute_force_iso(const Graph& a, const Graph& b,
                                                   const OracleBudget& budget = {});

}  // namespace graphsym

#endif
