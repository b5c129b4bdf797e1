#pragma once

#include <cstdint>
#include <vector>

#include "dspan/digraph.hpp"

namespace dspan {

/// Immutable vertex subset, kept sorted and duplicate-free.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::vector<int> vertices);

  const std::vector<int>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  bool contains(int v) const;

  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
  std::vector<int> vertices_;
};

/// True iff every vertex of g lies in the closed neighborhood of some member
/// of x. Members must be vertices of g.
bool is_dominating(const UndirectedGraph& g, const VertexSet& x);

struct DomsetLimits {
  /// Exhaustive search is exponential in the vertex count; refuse past this.
  int max_vertices = 20;
};

struct DomsetSolution {
  int size = 0;
  VertexSet witness; // lexicographically smallest minimum dominating set
};

/// Minimum dominating set by exhaustive search in increasing cardinality,
/// pruning branches whose remaining vertices cannot cover what is still
/// undominated. The empty graph has minimum size 0.
DomsetSolution solve_exact_domset(const UndirectedGraph& g, const DomsetLimits& limits = {});

/// True iff some dominating set has size at most l.
bool decide_domset(const UndirectedGraph& g, std::int64_t l, const DomsetLimits& limits = {});

} // namespace dspan
