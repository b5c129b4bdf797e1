#include "dspan/domset.hpp"

#include <algorithm>

namespace dspan {

VertexSet::VertexSet(std::vector<int> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

bool VertexSet::contains(int v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool is_dominating(const UndirectedGraph& g, const VertexSet& x) {
  int n = g.vertex_count();
  std::vector<char> covered(n, 0);
  for (int v : x) {
    if (v < 0 || v >= n) throw InputError("vertex " + std::to_string(v) + " out of range");
    covered[v] = 1;
    for (int u : g.neighbors(v)) covered[u] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

namespace {

struct DomsetSearch {
  int n;
  std::uint32_t full;
  const std::vector<std::uint32_t>& cover;   // closed neighborhood per vertex
  const std::vector<std::uint32_t>& suffix;  // union of covers from index on
  std::vector<int> pick;

  // Combinations of the requested size in lexicographic order; the first hit
  // is the lex-smallest dominating set of that size.
  bool run(int from, std::uint32_t covered, int remaining) {
    if (covered == full) return true;
    if (remaining == 0) return false;
    if ((covered | suffix[from]) != full) return false;
    for (int v = from; v <= n - remaining; ++v) {
      pick.push_back(v);
      if (run(v + 1, covered | cover[v], remaining - 1)) return true;
      pick.pop_back();
    }
    return false;
  }
};

} // namespace

DomsetSolution solve_exact_domset(const UndirectedGraph& g, const DomsetLimits& limits) {
  int n = g.vertex_count();
  if (n > limits.max_vertices) {
    throw CapacityError("dominating set solver: " + std::to_string(n) +
                        " vertices exceed the limit of " + std::to_string(limits.max_vertices));
  }
  if (n == 0) return DomsetSolution{0, VertexSet{}};

  std::vector<std::uint32_t> cover(n, 0);
  for (int v = 0; v < n; ++v) {
    cover[v] = 1u << v;
    for (int u : g.neighbors(v)) cover[v] |= 1u << u;
  }
  std::vector<std::uint32_t> suffix(static_cast<std::size_t>(n) + 1, 0);
  for (int v = n - 1; v >= 0; --v) suffix[v] = suffix[v + 1] | cover[v];
  std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);

  for (int size = 1; size <= n; ++size) {
    DomsetSearch search{n, full, cover, suffix, {}};
    if (search.run(0, 0, size)) {
      return DomsetSolution{size, VertexSet(std::move(search.pick))};
    }
  }
  throw InvariantError("the full vertex set failed to dominate");
}

bool decide_domset(const UndirectedGraph& g, std::int64_t l, const DomsetLimits& limits) {
  if (l < 0) throw InputError("l must be non-negative");
  return solve_exact_domset(g, limits).size <= l;
}

} // namespace dspan
