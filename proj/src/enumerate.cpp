#include "dspan/enumerate.hpp"

#include <random>

namespace dspan {

namespace {

int edge_slot_count(int n) {
  if (n < 0) throw InputError("negative vertex count");
  if (n > 11) throw InputError("labeled-graph enumeration supports n <= 11");
  return n * (n - 1) / 2;
}

/// Uniform in [0, 1), independent of distribution implementations so that
/// seeded output is stable everywhere.
double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void check_prob(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("probability must be in [0, 1]");
}

} // namespace

std::uint64_t labeled_graph_count(int n) {
  return std::uint64_t{1} << edge_slot_count(n);
}

UndirectedGraph undirected_from_code(int n, std::uint64_t code) {
  int slots = edge_slot_count(n);
  if (slots < 64 && code >= (std::uint64_t{1} << slots)) {
    throw InputError("graph code out of range for n = " + std::to_string(n));
  }
  std::vector<Edge> edges;
  int slot = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++slot) {
      if (code >> slot & 1) edges.push_back(Edge{u, v});
    }
  }
  return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph gen_path(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back(Edge{v, v + 1});
  return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph gen_cycle(int n) {
  if (n < 3) throw InputError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back(Edge{v, v + 1});
  edges.push_back(Edge{0, n - 1});
  return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph gen_complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back(Edge{u, v});
  }
  return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph gen_edgeless(int n) { return UndirectedGraph(n, {}); }

UndirectedGraph gen_random_graph(int n, double edge_prob, std::uint64_t seed) {
  if (n < 0) throw InputError("negative vertex count");
  check_prob(edge_prob);
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (next_unit(rng) < edge_prob) edges.push_back(Edge{u, v});
    }
  }
  return UndirectedGraph(n, std::move(edges));
}

DirectedGraph gen_random_digraph(int n, double arc_prob, std::uint64_t seed) {
  if (n < 0) throw InputError("negative vertex count");
  check_prob(arc_prob);
  std::mt19937_64 rng(seed);
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (next_unit(rng) < arc_prob) arcs.push_back(Arc{u, v});
    }
  }
  return DirectedGraph(n, std::move(arcs));
}

} // namespace dspan
