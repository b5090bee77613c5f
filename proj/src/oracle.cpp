#include "graphsym/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphsym {

namespace {

struct BruteSearch {
  const Graph& a;
  const Graph& b;
  const OracleBudget& budget;
  bool collect_all;

  std::vector<Vertex> image;
  std::vector<bool> used;
  long long completes = 0;
  std::vector<std::vector<Vertex>> found;

  BruteSearch(const Graph& a, const Graph& b, const OracleBudget& budget, bool collect_all)
      : a(a), b(b), budget(budget), collect_all(collect_all) {
    image.assign(a.size(), -1);
    used.assign(b.size(), false);
  }

  // Maps vertex `depth` of a; codes toward all earlier vertices must agree.
  bool consistent(int depth, Vertex candidate) const {
    for (int j = 0; j < depth; ++j)
      if (b.code(image[j], candidate) != a.code(j, depth)) return false;
    return true;
  }

  bool extend(int depth) {
    if (depth == a.size()) {
      if (++completes > budget.max_perms)
        throw std::runtime_error("oracle budget exceeded (max_perms)");
      found.push_back(image);
      return !collect_all;
    }
    for (Vertex c = 0; c < b.size(); ++c) {
      if (used[c] || !consistent(depth, c)) continue;
      used[c] = true;
      image[depth] = c;
      if (extend(depth + 1)) return true;
      image[depth] = -1;
      used[c] = false;
    }
    return false;
  }
};

}  // namespace

BruteAutResult brute_force_aut(const Graph& g, const OracleBudget& budget) {
  if (g.size() > budget.max_n)
    throw std::invalid_argument("oracle: graph larger than budget.max_n");

  BruteSearch search(g, g, budget, /*collect_all=*/true);
  search.extend(0);

  BruteAutResult result;
  result.automorphisms = std::move(search.found);
  result.order = result.automorphisms.size();

  std::vector<bool> seen(g.size(), false);
  for (int v = 0; v < g.size(); ++v) {
    if (seen[v]) continue;
    std::vector<Vertex> orbit;
    for (const auto& perm : result.automorphisms)
      if (!seen[perm[v]]) {
        seen[perm[v]] = true;
        orbit.push_back(perm[v]);
      }
    std::sort(orbit.begin(), orbit.end());
    result.orbits.push_back(std::move(orbit));
  }
  return result;
}

std::optional<std::vector<Vertex>> brute_force_iso(const Graph& a, const Graph& b,
                                                   const OracleBudget& budget) {
  if (a.size() != b.size()) return std::nullopt;
  if (a.size() > budget.max_n)
    throw std::invalid_argument("oracle: graph larger than budget.max_n");

  BruteSearch search(a, b, budget, /*collect_all=*/false);
  if (search.extend(0)) return search.found.front();
  return std::nullopt;
}

}  // namespace graphsym
