#include "dspan/digraph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace dspan {

namespace {

std::string arc_str(const Arc& a) {
  return "(" + std::to_string(a.tail) + ", " + std::to_string(a.head) + ")";
}

} // namespace

ArcSet::ArcSet(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
}

bool ArcSet::contains(const Arc& a) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), a);
}

bool ArcSet::is_subset_of(const ArcSet& other) const {
  return std::includes(other.arcs_.begin(), other.arcs_.end(), arcs_.begin(), arcs_.end());
}

DirectedGraph::DirectedGraph(int vertex_count, std::vector<Arc> arcs)
    : vertex_count_(vertex_count), arcs_(std::move(arcs)) {
  if (vertex_count_ < 0) throw InputError("negative vertex count");
  std::sort(arcs_.begin(), arcs_.end());
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc& a = arcs_[i];
    if (a.tail < 0 || a.tail >= vertex_count_ || a.head < 0 || a.head >= vertex_count_) {
      throw InputError("arc endpoint out of range: " + arc_str(a));
    }
    if (a.tail == a.head) throw InputError("loop arc not allowed: " + arc_str(a));
    if (i > 0 && arcs_[i - 1] == a) throw InputError("duplicate arc: " + arc_str(a));
  }
  adj_start_.assign(static_cast<std::size_t>(vertex_count_) + 1, 0);
  adj_head_.resize(arcs_.size());
  for (const Arc& a : arcs_) ++adj_start_[static_cast<std::size_t>(a.tail) + 1];
  for (int v = 0; v < vertex_count_; ++v) adj_start_[v + 1] += adj_start_[v];
  for (std::size_t i = 0; i < arcs_.size(); ++i) adj_head_[i] = arcs_[i].head;
}

bool DirectedGraph::has_arc(const Arc& a) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), a);
}

std::span<const int> DirectedGraph::out_neighbors(int v) const {
  if (v < 0 || v >= vertex_count_) throw InputError("vertex out of range: " + std::to_string(v));
  return {adj_head_.data() + adj_start_[v], adj_head_.data() + adj_start_[v + 1]};
}

UndirectedGraph::UndirectedGraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) throw InputError("negative vertex count");
  for (Edge& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.v >= vertex_count_) {
      throw InputError("edge endpoint out of range: (" + std::to_string(e.u) + ", " +
                       std::to_string(e.v) + ")");
    }
    if (e.u == e.v) throw InputError("loop edge not allowed at vertex " + std::to_string(e.u));
    if (i > 0 && edges_[i - 1] == e) {
      throw InputError("duplicate edge: (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
    }
  }
  adj_start_.assign(static_cast<std::size_t>(vertex_count_) + 1, 0);
  adj_vertex_.resize(edges_.size() * 2);
  for (const Edge& e : edges_) {
    ++adj_start_[static_cast<std::size_t>(e.u) + 1];
    ++adj_start_[static_cast<std::size_t>(e.v) + 1];
  }
  for (int v = 0; v < vertex_count_; ++v) adj_start_[v + 1] += adj_start_[v];
  std::vector<int> fill(adj_start_.begin(), adj_start_.end() - 1);
  for (const Edge& e : edges_) {
    adj_vertex_[fill[e.u]++] = e.v;
    adj_vertex_[fill[e.v]++] = e.u;
  }
  for (int v = 0; v < vertex_count_; ++v) {
    std::sort(adj_vertex_.begin() + adj_start_[v], adj_vertex_.begin() + adj_start_[v + 1]);
  }
}

bool UndirectedGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::span<const int> UndirectedGraph::neighbors(int v) const {
  if (v < 0 || v >= vertex_count_) throw InputError("vertex out of range: " + std::to_string(v));
  return {adj_vertex_.data() + adj_start_[v], adj_vertex_.data() + adj_start_[v + 1]};
}

DistanceMatrix::DistanceMatrix(int n) : n_(n) {
  if (n_ < 0) throw InputError("negative matrix size");
  entries_.assign(static_cast<std::size_t>(n_) * n_, Distance::infinity());
  for (int v = 0; v < n_; ++v) set(v, v, Distance::finite(0));
}

std::size_t DistanceMatrix::index(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) {
    throw InputError("matrix index out of range: (" + std::to_string(u) + ", " +
                     std::to_string(v) + ")");
  }
  return static_cast<std::size_t>(u) * n_ + v;
}

std::vector<Distance> bfs_distances(const DirectedGraph& g, int source) {
  if (source < 0 || source >= g.vertex_count()) {
    throw InputError("bfs source out of range: " + std::to_string(source));
  }
  std::vector<Distance> dist(g.vertex_count(), Distance::infinity());
  dist[source] = Distance::finite(0);
  std::queue<int> frontier;
  frontier.push(source);
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop();
    Distance next = dist[u] + Distance::finite(1);
    for (int v : g.out_neighbors(u)) {
      if (!dist[v].is_finite()) {
        dist[v] = next;
        frontier.push(v);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const DirectedGraph& g) {
  DistanceMatrix m(g.vertex_count());
  for (int u = 0; u < g.vertex_count(); ++u) {
    std::vector<Distance> row = bfs_distances(g, u);
    for (int v = 0; v < g.vertex_count(); ++v) m.set(u, v, row[v]);
  }
  return m;
}

DirectedGraph subdivide_arc(const DirectedGraph& g, const Arc& arc, int times) {
  if (!g.has_arc(arc)) throw InputError("cannot subdivide absent arc " + arc_str(arc));
  if (times < 1) throw InputError("subdivision count must be >= 1");
  int n = g.vertex_count();
  std::vector<Arc> arcs;
  arcs.reserve(g.arc_count() + times);
  for (const Arc& a : g.arcs()) {
    if (a != arc) arcs.push_back(a);
  }
  int prev = arc.tail;
  for (int i = 0; i < times; ++i) {
    arcs.push_back(Arc{prev, n + i});
    prev = n + i;
  }
  arcs.push_back(Arc{prev, arc.head});
  return DirectedGraph(n + times, std::move(arcs));
}

DirectedGraph contract_arc(const DirectedGraph& g, const Arc& arc) {
  std::vector<int> old_to_new;
  return contract_arc(g, arc, old_to_new);
}

DirectedGraph contract_arc(const DirectedGraph& g, const Arc& arc, std::vector<int>& old_to_new) {
  if (!g.has_arc(arc)) throw InputError("cannot contract absent arc " + arc_str(arc));
  int n = g.vertex_count();
  int merged = n - 2;
  old_to_new.assign(n, 0);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    old_to_new[v] = (v == arc.tail || v == arc.head) ? merged : next++;
  }
  std::vector<Arc> arcs;
  arcs.reserve(g.arc_count());
  for (const Arc& a : g.arcs()) {
    int tail = old_to_new[a.tail];
    int head = old_to_new[a.head];
    if (tail != head) arcs.push_back(Arc{tail, head});
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return DirectedGraph(n - 1, std::move(arcs));
}

DirectedGraph remove_arcs(const DirectedGraph& g, const ArcSet& f) {
  std::vector<Arc> arcs;
  arcs.reserve(g.arc_count());
  for (const Arc& a : f) {
    if (!g.has_arc(a)) throw InputError("cannot remove absent arc " + arc_str(a));
  }
  for (const Arc& a : g.arcs()) {
    if (!f.contains(a)) arcs.push_back(a);
  }
  return DirectedGraph(g.vertex_count(), std::move(arcs));
}

bool is_acyclic(const DirectedGraph& g) {
  int n = g.vertex_count();
  std::vector<int> in_degree(n, 0);
  for (const Arc& a : g.arcs()) ++in_degree[a.head];
  std::queue<int> ready;
  for (int v = 0; v < n; ++v) {
    if (in_degree[v] == 0) ready.push(v);
  }
  int emitted = 0;
  while (!ready.empty()) {
    int u = ready.front();
    ready.pop();
    ++emitted;
    for (int v : g.out_neighbors(u)) {
      if (--in_degree[v] == 0) ready.push(v);
    }
  }
  return emitted == n;
}

} // namespace dspan
