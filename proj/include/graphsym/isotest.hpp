#ifndef GRAPHSYM_ISOTEST_HPP
#define GRAPHSYM_ISOTEST_HPP

#include <vector>

#include "graphsym/autgroup.hpp"
#include "graphsym/graph.hpp"
#include "graphsym/sequence.hpp"

namespace graphsym {

struct MatchStats {
  long long nodes = 0;
  long long backtracks = 0;
  int target_index = -1;  // 0 when g's sequence was matched against, 1 for h's
  bool quick_reject = false;
};

struct IsoResult {
  bool isomorphic = false;
  std::vector<Vertex> mapping;  // g -> h when isomorphic, empty otherwise
  MatchStats stats;
};

// Decides isomorphism by analyzing the automorphism structure of one graph
// (both, when the first still has open backtracking points) and re-running
// the cheaper sequence of refinements over the other graph. A returned
// mapping is always verified; failure of that verification is an internal
// bug and throws std::logic_error.
IsoResult are_isomorphic(const Graph& g, const Graph& h, const SearchOptions& options = {});

}  // namespace graphsym

#endif
