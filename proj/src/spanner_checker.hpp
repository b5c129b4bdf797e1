#pragma once

#include <vector>

#include "dspan/bounds.hpp"
#include "dspan/digraph.hpp"

namespace dspan::detail {

/// Incremental spanner-validity checks against a fixed graph and bound.
///
/// Holds a current removal set (arc ids into g.arcs()). The intended use
/// keeps the current set valid at all times: removing one more arc can only
/// change distances from sources that reach its tail, so valid_with() re-runs
/// BFS for just those sources and trusts the rest. Bound values are
/// pre-floored to integer caps per original distance; distances are integral,
/// so the integer comparison is exact.
class DeletionChecker {
public:
  DeletionChecker(const DirectedGraph& g, const SpannerBound& b);

  /// Does the graph satisfy the bound against itself (empty removal set)?
  bool empty_valid() const { return empty_valid_; }

  /// Would the current set plus arc_id still be valid? Only meaningful while
  /// the current set is valid.
  bool valid_with(int arc_id);

  void remove(int arc_id);
  void restore(int arc_id);

  /// From-scratch check of the current set: every source, every pair.
  bool current_valid();

  const DistanceMatrix& base_distances() const { return base_; }

private:
  bool source_row_ok(int source);

  const DirectedGraph& g_;
  int n_;
  DistanceMatrix base_;
  std::vector<std::int64_t> cap_;              // n*n; -1 = unconstrained pair
  std::vector<char> removed_;                  // per arc id
  std::vector<int> adj_start_;                 // CSR over tails
  std::vector<int> adj_head_;
  std::vector<int> adj_arc_;                   // arc id per adjacency slot
  std::vector<std::vector<int>> sources_reaching_; // per vertex v: sources with finite dist to v
  bool empty_valid_ = true;

  std::vector<std::int64_t> dist_buf_;
  std::vector<int> queue_buf_;
};

} // namespace dspan::detail
