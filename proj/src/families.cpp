#include "graphsym/families.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace graphsym {

namespace {

void add_edge(Graph& g, Vertex u, Vertex v) {
  g.add_arc(u, v);
  g.add_arc(v, u);
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

std::set<int> nonzero_squares_mod(int q) {
  std::set<int> squares;
  for (int x = 1; x < q; ++x) squares.insert(x * x % q);
  return squares;
}

// Top 53 bits of the engine output as a uniform double in [0, 1);
// std::uniform_real_distribution is not pinned across library versions.
double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) add_edge(g, i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) add_edge(g, i, (i + 1) % n);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) add_edge(g, u, v);
  return g;
}

Graph directed_cycle(int n) {
  if (n < 2) throw std::invalid_argument("directed_cycle: need n >= 2");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_arc(i, (i + 1) % n);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    add_edge(g, i, (i + 1) % 5);        // outer cycle
    add_edge(g, 5 + i, 5 + (i + 2) % 5);  // inner pentagram
    add_edge(g, i, 5 + i);              // spokes
  }
  return g;
}

Graph paley_tournament(int q) {
  if (!is_prime(q) || q % 4 != 3)
    throw std::invalid_argument("paley_tournament: need a prime q with q % 4 == 3");
  const std::set<int> squares = nonzero_squares_mod(q);
  Graph g(q);
  for (int u = 0; u < q; ++u)
    for (int v = 0; v < q; ++v)
      if (u != v && squares.count(((v - u) % q + q) % q)) g.add_arc(u, v);
  return g;
}

Graph paley_graph(int q) {
  if (!is_prime(q) || q % 4 != 1)
    throw std::invalid_argument("paley_graph: need a prime q with q % 4 == 1");
  const std::set<int> squares = nonzero_squares_mod(q);
  Graph g(q);
  for (int u = 0; u < q; ++u)
    for (int v = u + 1; v < q; ++v)
      if (squares.count((v - u) % q)) add_edge(g, u, v);
  return g;
}

Graph latin_square_graph(int n) {
  if (n < 2) throw std::invalid_argument("latin_square_graph: need n >= 2");
  Graph g(n * n);
  auto row = [n](Vertex v) { return v / n; };
  auto col = [n](Vertex v) { return v % n; };
  auto sym = [&](Vertex v) { return (row(v) + col(v)) % n; };
  for (Vertex u = 0; u < n * n; ++u)
    for (Vertex v = u + 1; v < n * n; ++v)
      if (row(u) == row(v) || col(u) == col(v) || sym(u) == sym(v)) add_edge(g, u, v);
  return g;
}

Graph component_join(const Graph& inner, int m, AdjCode code) {
  if (m < 1) throw std::invalid_argument("component_join: need m >= 1");
  if (code != 0 && code != 3)
    throw std::invalid_argument("component_join: cross-copy code must be 0 or 3");
  const int k = inner.size();
  Graph g(k * m);
  for (int copy = 0; copy < m; ++copy)
    for (int u = 0; u < k; ++u)
      for (int v = 0; v < k; ++v)
        if (inner.code(u, v) & 2) g.add_arc(copy * k + u, copy * k + v);
  if (code == 3)
    for (int a = 0; a < k * m; ++a)
      for (int b = 0; b < k * m; ++b)
        if (a / k != b / k) g.add_arc(a, b);
  return g;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("random_graph: p outside [0, 1]");
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (next_unit(rng) < p) add_edge(g, u, v);
  return g;
}

Graph random_digraph(int n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("random_digraph: p outside [0, 1]");
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && next_unit(rng) < p) g.add_arc(u, v);
  return g;
}

bool looks_like_family_spec(const std::string& text) { return text.rfind("family:", 0) == 0; }

namespace {

std::vector<std::string> split_colon(const std::string& text) {
  std::vector<std::string> parts;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ':')) parts.push_back(token);
  if (!text.empty() && text.back() == ':') parts.push_back("");
  return parts;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const int value = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(what);
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument("family spec: bad integer for " + what + ": '" + s + "'");
  }
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double value = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(what);
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument("family spec: bad number for " + what + ": '" + s + "'");
  }
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const unsigned long long value = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(what);
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument("family spec: bad integer for " + what + ": '" + s + "'");
  }
}

// Families usable as the inner graph of component_join take one int argument.
Graph single_param_family(const std::string& name, int arg) {
  if (name == "empty") return empty_graph(arg);
  if (name == "path") return path_graph(arg);
  if (name == "cycle") return cycle_graph(arg);
  if (name == "complete") return complete_graph(arg);
  if (name == "directed_cycle") return directed_cycle(arg);
  if (name == "paley_tournament") return paley_tournament(arg);
  if (name == "paley_graph") return paley_graph(arg);
  if (name == "latin_square") return latin_square_graph(arg);
  throw std::invalid_argument("family spec: unknown family '" + name + "'");
}

}  // namespace

Graph parse_family_spec(const std::string& text) {
  const std::vector<std::string> parts = split_colon(text);
  if (parts.size() < 2 || parts[0] != "family")
    throw std::invalid_argument("family spec: expected 'family:NAME[:ARG...]'");
  const std::string& name = parts[1];
  const std::size_t args = parts.size() - 2;

  auto want = [&](std::size_t expected) {
    if (args != expected) {
      std::ostringstream msg;
      msg << "family spec: '" << name << "' takes " << expected << " argument"
          << (expected == 1 ? "" : "s") << ", got " << args;
      throw std::invalid_argument(msg.str());
    }
  };

  if (name == "petersen") {
    want(0);
    return petersen_graph();
  }
  if (name == "component_join") {
    want(4);
    const Graph inner = single_param_family(parts[2], parse_int(parts[3], "inner argument"));
    const int m = parse_int(parts[4], "copy count");
    const int code = parse_int(parts[5], "cross code");
    if (code < 0 || code > 3) throw std::invalid_argument("family spec: cross code outside 0..3");
    return component_join(inner, m, static_cast<AdjCode>(code));
  }
  if (name == "random_graph" || name == "random_digraph") {
    want(3);
    const int n = parse_int(parts[2], "vertex count");
    const double p = parse_double(parts[3], "edge probability");
    const std::uint64_t seed = parse_u64(parts[4], "seed");
    return name == "random_graph" ? random_graph(n, p, seed) : random_digraph(n, p, seed);
  }
  want(1);
  return single_param_family(name, parse_int(parts[2], "argument"));
}

}  // namespace graphsym
