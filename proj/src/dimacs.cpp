#include "graphsym/dimacs.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace graphsym {

namespace {

struct Header {
  int n = 0;
  long long m = 0;
};

}  // namespace

Graph parse_dimacs(std::istream& in) {
  std::optional<Header> header;
  std::optional<Graph> graph;
  long long arc_lines = 0;
  int line_no = 0;

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::istringstream tokens(line);
    std::string kind;
    if (!(tokens >> kind)) continue;  // blank line

    if (kind == "c") continue;

    if (kind == "p") {
      if (header) throw DimacsError(line_no, "duplicate problem line");
      std::string format;
      Header h;
      if (!(tokens >> format >> h.n >> h.m) || format != "edge")
        throw DimacsError(line_no, "expected 'p edge N M'");
      std::string extra;
      if (tokens >> extra) throw DimacsError(line_no, "trailing tokens after problem line");
      if (h.n < 1) throw DimacsError(line_no, "vertex count must be positive");
      if (h.m < 0) throw DimacsError(line_no, "negative edge count");
      header = h;
      graph.emplace(h.n);
      continue;
    }

    if (kind == "e" || kind == "a") {
      if (!header) throw DimacsError(line_no, "edge before problem line");
      int u = 0, v = 0;
      if (!(tokens >> u >> v)) throw DimacsError(line_no, "expected two vertex numbers");
      std::string extra;
      if (tokens >> extra) throw DimacsError(line_no, "trailing tokens after edge");
      if (u < 1 || u > header->n || v < 1 || v > header->n)
        throw DimacsError(line_no, "vertex number outside 1.." + std::to_string(header->n));
      if (u == v) throw DimacsError(line_no, "self-loops are not supported");
      ++arc_lines;
      if (arc_lines > header->m) throw DimacsError(line_no, "more edges than declared");
      graph->add_arc(u - 1, v - 1);
      if (kind == "e") graph->add_arc(v - 1, u - 1);
      continue;
    }

    throw DimacsError(line_no, "unknown line type '" + kind + "'");
  }

  if (!header) throw DimacsError(line_no, "missing problem line");
  if (arc_lines != header->m)
    throw DimacsError(line_no, "declared " + std::to_string(header->m) + " edges, found " +
                                   std::to_string(arc_lines));
  return *std::move(graph);
}

Graph parse_dimacs_string(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return parse_dimacs(in);
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream body;
  long long m = 0;
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v) {
      switch (g.code(u, v)) {
        case 3:
          body << "e " << u + 1 << ' ' << v + 1 << '\n';
          ++m;
          break;
        case 2:
          body << "a " << u + 1 << ' ' << v + 1 << '\n';
          ++m;
          break;
        case 1:
          body << "a " << v + 1 << ' ' << u + 1 << '\n';
          ++m;
          break;
        default:
          break;
      }
    }
  std::ostringstream out;
  out << "p edge " << g.size() << ' ' << m << '\n' << body.str();
  return out.str();
}

}  // namespace graphsym
