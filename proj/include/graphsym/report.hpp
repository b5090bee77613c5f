#ifndef GRAPHSYM_REPORT_HPP
#define GRAPHSYM_REPORT_HPP

#include <string>
#include <vector>

#include "graphsym/autgroup.hpp"
#include "graphsym/graph.hpp"
#include "graphsym/isotest.hpp"
#include "graphsym/sequence.hpp"

namespace graphsym {

// Disjoint cycle notation with fixed points elided; identity prints "()".
std::string cycle_notation(const std::vector<Vertex>& perm);

// Reports carry no timestamps or timings, so equal inputs give equal bytes.
std::string aut_report_json(const std::string& input_label, const Graph& g,
                            const PartitionSequence& seq, const AutGroupResult& result);
std::string aut_report_text(const std::string& input_label, const Graph& g,
                            const PartitionSequence& seq, const AutGroupResult& result);

std::string iso_report_json(const std::string& label_a, const std::string& label_b,
                            const Graph& a, const Graph& b, const IsoResult& result,
                            bool include_mapping);
std::string iso_report_text(const std::string& label_a, const std::string& label_b,
                            const Graph& a, const Graph& b, const IsoResult& result,
                            bool include_mapping);

}  // namespace graphsym

#endif
