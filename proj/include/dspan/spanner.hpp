#pragma once

#include <vector>

#include "dspan/bounds.hpp"
#include "dspan/digraph.hpp"

namespace dspan {

/// True iff removing f keeps every distance within the bound: for each
/// ordered pair u != v with d = dist(u, v, d_graph) finite, the remaining
/// graph satisfies dist(u, v, d_graph - f) <= bound(d). Pairs unreachable in
/// d_graph impose no constraint. f must be a subset of the graph's arcs.
bool is_spanner(const DirectedGraph& d_graph, const ArcSet& f, const SpannerBound& b);

struct BoundViolation {
  int from = 0;
  int to = 0;
  std::int64_t dist_original = 0;
  Distance dist_remaining;
  Rational bound_value;
};

/// Every pair the removal set f pushes past the bound, ordered by (from, to).
/// Empty exactly when is_spanner holds.
std::vector<BoundViolation> spanner_violations(const DirectedGraph& d_graph, const ArcSet& f,
                                               const SpannerBound& b);

/// Certain-No shortcut: with threshold t < 2 and k >= 1, removing any arc
/// (u, v) forces a detour of length >= 2 while the bound at distance 1 stays
/// below 2, so no removal set of size >= 1 can be valid.
bool trivial_no(const SpannerBound& b, std::int64_t k);

/// Arcs whose solo removal already violates the bound. Removal sets only
/// grow distances, so no valid removal set contains any of these.
ArcSet critical_arcs(const DirectedGraph& d_graph, const SpannerBound& b);

} // namespace dspan
