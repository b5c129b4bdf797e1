#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dspan/errors.hpp"

namespace dspan {

struct Arc {
  int tail = 0;
  int head = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Unweighted path length with a true infinity sentinel: addition absorbs,
/// every finite value compares below infinity. No finite surrogate values.
class Distance {
public:
  constexpr Distance() : value_(kInfSentinel) {}

  static constexpr Distance infinity() { return Distance(); }
  static constexpr Distance finite(std::int64_t v) {
    Distance d;
    d.value_ = v;
    return d;
  }

  constexpr bool is_finite() const { return value_ != kInfSentinel; }

  std::int64_t value() const {
    if (!is_finite()) throw InvariantError("value() on an infinite distance");
    return value_;
  }

  constexpr Distance operator+(Distance o) const {
    if (!is_finite() || !o.is_finite()) return infinity();
    return finite(value_ + o.value_);
  }

  friend constexpr bool operator==(Distance a, Distance b) { return a.value_ == b.value_; }
  friend constexpr bool operator<(Distance a, Distance b) {
    if (a.value_ == b.value_) return false;
    if (!a.is_finite()) return false;
    if (!b.is_finite()) return true;
    return a.value_ < b.value_;
  }
  friend constexpr bool operator<=(Distance a, Distance b) { return a == b || a < b; }
  friend constexpr bool operator>(Distance a, Distance b) { return b < a; }
  friend constexpr bool operator>=(Distance a, Distance b) { return b <= a; }

private:
  static constexpr std::int64_t kInfSentinel = -1;
  std::int64_t value_;
};

/// Immutable arc subset, kept sorted and duplicate-free.
class ArcSet {
public:
  ArcSet() = default;
  explicit ArcSet(std::vector<Arc> arcs);

  const std::vector<Arc>& arcs() const { return arcs_; }
  std::size_t size() const { return arcs_.size(); }
  bool empty() const { return arcs_.empty(); }
  bool contains(const Arc& a) const;
  bool is_subset_of(const ArcSet& other) const;

  auto begin() const { return arcs_.begin(); }
  auto end() const { return arcs_.end(); }

  friend bool operator==(const ArcSet&, const ArcSet&) = default;

private:
  std::vector<Arc> arcs_;
};

/// Immutable simple digraph: no loops, no parallel arcs, dense 0-based
/// vertices. Arcs are stored sorted by (tail, head); construction rejects
/// loops, duplicates, and out-of-range endpoints.
class DirectedGraph {
public:
  DirectedGraph() = default;
  DirectedGraph(int vertex_count, std::vector<Arc> arcs);

  int vertex_count() const { return vertex_count_; }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  bool has_arc(const Arc& a) const;

  /// Heads of arcs leaving v, ascending.
  std::span<const int> out_neighbors(int v) const;

  friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;

private:
  int vertex_count_ = 0;
  std::vector<Arc> arcs_;
  std::vector<int> adj_start_;
  std::vector<int> adj_head_;
};

struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph. Edges are normalized to u < v and
/// stored sorted; construction rejects loops, duplicates, and out-of-range
/// endpoints.
class UndirectedGraph {
public:
  UndirectedGraph() = default;
  UndirectedGraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;

  /// Neighbors of v, ascending (v itself excluded).
  std::span<const int> neighbors(int v) const;

  friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> adj_start_;
  std::vector<int> adj_vertex_;
};

/// Square matrix of pairwise distances; diagonal fixed at 0.
class DistanceMatrix {
public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n);

  int size() const { return n_; }
  Distance at(int u, int v) const { return entries_[index(u, v)]; }
  void set(int u, int v, Distance d) { entries_[index(u, v)] = d; }

private:
  std::size_t index(int u, int v) const;

  int n_ = 0;
  std::vector<Distance> entries_;
};

/// Shortest-path distance from source to every vertex; infinity when
/// unreachable.
std::vector<Distance> bfs_distances(const DirectedGraph& g, int source);

DistanceMatrix all_pairs_distances(const DirectedGraph& g);

/// Replaces arc (u, v) by a directed path u -> x1 -> ... -> xq -> v through
/// q fresh vertices appended after the existing ones, in path order.
DirectedGraph subdivide_arc(const DirectedGraph& g, const Arc& arc, int times);

/// Merges the endpoints of the given arc into one fresh vertex. Remaining
/// vertices keep their relative order and are compacted to 0..n-3; the
/// merged vertex takes the last index, n-2. Loops arising from the merge are
/// dropped and parallel arcs collapse.
DirectedGraph contract_arc(const DirectedGraph& g, const Arc& arc);

/// As above; also fills old_to_new (size n) with each old vertex's new index.
DirectedGraph contract_arc(const DirectedGraph& g, const Arc& arc, std::vector<int>& old_to_new);

/// Same vertex set, arcs minus f. Every arc of f must be present.
DirectedGraph remove_arcs(const DirectedGraph& g, const ArcSet& f);

bool is_acyclic(const DirectedGraph& g);

} // namespace dspan
