#ifndef GRAPHSYM_DIMACS_HPP
#define GRAPHSYM_DIMACS_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "graphsym/graph.hpp"

namespace graphsym {

class DimacsError : public std::runtime_error {
 public:
  DimacsError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// DIMACS graph format: 'c' comments, one 'p edge N M' header, then M lines.
// 'e u v' adds the undirected edge {u, v}; the nonstandard 'a u v' adds the
// single arc u -> v. Vertices are 1-based. Throws DimacsError with the
// offending line number.
Graph parse_dimacs(std::istream& in);
Graph parse_dimacs_string(const std::string& text);

// Reads a graph file; throws std::runtime_error when the file cannot be
// opened and DimacsError on malformed content.
Graph read_graph_file(const std::string& path);

// Inverse of the parser: undirected edges as 'e', single arcs as 'a'.
std::string to_dimacs(const Graph& g);

}  // namespace graphsym

#endif
