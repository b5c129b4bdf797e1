// Independent reference implementations used to cross-check the library.
// Everything here recomputes from definitions: Floyd-Warshall instead of BFS,
// full subset enumeration instead of branch-and-bound, no caps or pruning.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "dspan/bounds.hpp"
#include "dspan/digraph.hpp"
#include "dspan/domset.hpp"

namespace oracles {

constexpr std::int64_t kUnreachable = -1;

// All-pairs shortest paths by Floyd-Warshall; -1 marks unreachable pairs.
inline std::vector<std::vector<std::int64_t>> floyd_warshall(const dspan::DirectedGraph& g) {
  int n = g.vertex_count();
  const std::int64_t big = 1'000'000'000;
  std::vector<std::vector<std::int64_t>> dist(n, std::vector<std::int64_t>(n, big));
  for (int v = 0; v < n; ++v) dist[v][v] = 0;
  for (const dspan::Arc& a : g.arcs()) dist[a.tail][a.head] = 1;
  for (int m = 0; m < n; ++m) {
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        dist[u][v] = std::min(dist[u][v], dist[u][m] + dist[m][v]);
      }
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (dist[u][v] >= big) dist[u][v] = kUnreachable;
    }
  }
  return dist;
}

inline dspan::DirectedGraph drop_arcs(const dspan::DirectedGraph& g,
                                      const std::vector<dspan::Arc>& f) {
  std::vector<dspan::Arc> kept;
  for (const dspan::Arc& a : g.arcs()) {
    if (std::find(f.begin(), f.end(), a) == f.end()) kept.push_back(a);
  }
  return dspan::DirectedGraph(g.vertex_count(), std::move(kept));
}

// Spanner validity straight from the definition: for every ordered pair with
// finite original distance d, the remaining distance is finite and at most
// bound(d), compared in exact rational arithmetic.
inline bool is_spanner_definition(const dspan::DirectedGraph& g, const std::vector<dspan::Arc>& f,
                                  const dspan::SpannerBound& b) {
  auto before = floyd_warshall(g);
  auto after = floyd_warshall(drop_arcs(g, f));
  int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v || before[u][v] == kUnreachable) continue;
      if (after[u][v] == kUnreachable) return false;
      if (dspan::Rational(after[u][v]) > b.at(before[u][v])) return false;
    }
  }
  return true;
}

struct NaiveExact {
  std::int64_t k_max = -1; // -1: the graph itself violates the bound
  std::vector<dspan::Arc> witness;
};

// Full 2^m enumeration; ties at maximum size break to the lexicographically
// smallest arc set. Only usable for small m.
inline NaiveExact naive_solve_exact(const dspan::DirectedGraph& g, const dspan::SpannerBound& b) {
  const std::vector<dspan::Arc>& arcs = g.arcs();
  std::size_t m = arcs.size();
  NaiveExact result;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<dspan::Arc> f;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::uint64_t{1} << i)) f.push_back(arcs[i]);
    }
    if (!is_spanner_definition(g, f, b)) continue;
    auto size = static_cast<std::int64_t>(f.size());
    if (size > result.k_max || (size == result.k_max && f < result.witness)) {
      result.k_max = size;
      result.witness = std::move(f);
    }
  }
  return result;
}

struct NaiveDomset {
  std::int64_t size = 0;
  std::vector<int> witness;
};

// Full 2^n enumeration of vertex subsets; lex-smallest minimum dominating set.
inline NaiveDomset naive_min_domset(const dspan::UndirectedGraph& g) {
  int n = g.vertex_count();
  NaiveDomset best;
  best.size = -1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<int> x;
    for (int v = 0; v < n; ++v) {
      if (mask & (std::uint64_t{1} << v)) x.push_back(v);
    }
    if (!dspan::is_dominating(g, dspan::VertexSet(x))) continue;
    auto size = static_cast<std::int64_t>(x.size());
    if (best.size < 0 || size < best.size || (size == best.size && x < best.witness)) {
      best.size = size;
      best.witness = std::move(x);
    }
  }
  return best; // n = 0 dominates itself with the empty set
}

// Lengths of all simple directed paths from s to t, by exhaustive DFS.
inline std::set<std::int64_t> simple_path_lengths(const dspan::DirectedGraph& g, int s, int t) {
  std::set<std::int64_t> lengths;
  std::vector<char> on_path(g.vertex_count(), 0);
  std::int64_t depth = 0;
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == t) {
      lengths.insert(depth);
      return;
    }
    on_path[v] = 1;
    for (int w : g.out_neighbors(v)) {
      if (on_path[w]) continue;
      ++depth;
      self(self, w);
      --depth;
    }
    on_path[v] = 0;
  };
  dfs(dfs, s);
  return lengths;
}

// The contraction's defining arc set, recomputed from the old-to-new vertex
// map: untouched arcs map through, arcs touching either endpoint re-attach to
// the merged vertex, loops vanish, parallels merge. Callers verify the map's
// shape separately.
inline std::vector<dspan::Arc> contraction_arcs_by_definition(const dspan::DirectedGraph& g,
                                                              const std::vector<int>& old_to_new) {
  std::set<dspan::Arc> out;
  for (const dspan::Arc& a : g.arcs()) {
    int tail = old_to_new[a.tail];
    int head = old_to_new[a.head];
    if (tail == head) continue;
    out.insert(dspan::Arc{tail, head});
  }
  return {out.begin(), out.end()};
}

// Uniformly random simple digraph with n in [1, max_n] and a capped arc count.
inline dspan::DirectedGraph random_digraph(std::mt19937_64& rng, int max_n, int max_arcs) {
  int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n));
  std::int64_t all = static_cast<std::int64_t>(n) * (n - 1);
  std::int64_t cap = std::min<std::int64_t>(max_arcs, all);
  std::int64_t m = cap == 0 ? 0 : static_cast<std::int64_t>(rng() % (cap + 1));
  std::set<dspan::Arc> arcs;
  while (static_cast<std::int64_t>(arcs.size()) < m) {
    int tail = static_cast<int>(rng() % n);
    int head = static_cast<int>(rng() % n);
    if (tail != head) arcs.insert(dspan::Arc{tail, head});
  }
  return dspan::DirectedGraph(n, {arcs.begin(), arcs.end()});
}

inline dspan::UndirectedGraph random_undirected(std::mt19937_64& rng, int max_n) {
  int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n));
  std::vector<dspan::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng() % 2 == 0) edges.push_back(dspan::Edge{u, v});
    }
  }
  return dspan::UndirectedGraph(n, std::move(edges));
}

} // namespace oracles
