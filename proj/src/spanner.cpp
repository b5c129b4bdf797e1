#include "dspan/spanner.hpp"

#include <algorithm>

#include "spanner_checker.hpp"

namespace dspan {

namespace {

/// Arc ids of f within g.arcs(); throws when f is not a subset.
std::vector<int> arc_ids_of(const DirectedGraph& g, const ArcSet& f) {
  std::vector<int> ids;
  ids.reserve(f.size());
  const auto& arcs = g.arcs();
  for (const Arc& a : f) {
    auto it = std::lower_bound(arcs.begin(), arcs.end(), a);
    if (it == arcs.end() || *it != a) {
      throw InputError("removal set contains arc (" + std::to_string(a.tail) + ", " +
                       std::to_string(a.head) + ") absent from the graph");
    }
    ids.push_back(static_cast<int>(it - arcs.begin()));
  }
  return ids;
}

} // namespace

bool is_spanner(const DirectedGraph& d_graph, const ArcSet& f, const SpannerBound& b) {
  std::vector<int> ids = arc_ids_of(d_graph, f);
  detail::DeletionChecker checker(d_graph, b);
  for (int id : ids) checker.remove(id);
  return checker.current_valid();
}

std::vector<BoundViolation> spanner_violations(const DirectedGraph& d_graph, const ArcSet& f,
                                               const SpannerBound& b) {
  arc_ids_of(d_graph, f); // subset validation
  DistanceMatrix base = all_pairs_distances(d_graph);
  DistanceMatrix after = all_pairs_distances(remove_arcs(d_graph, f));
  std::vector<BoundViolation> violations;
  int n = d_graph.vertex_count();
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v || !base.at(u, v).is_finite()) continue;
      std::int64_t d = base.at(u, v).value();
      Distance h = after.at(u, v);
      if (h.is_finite() && h.value() <= b.cap_at(d)) continue;
      violations.push_back(BoundViolation{u, v, d, h, b.at(d)});
    }
  }
  return violations;
}

bool trivial_no(const SpannerBound& b, std::int64_t k) {
  return k >= 1 && b.threshold() < Rational(2);
}

ArcSet critical_arcs(const DirectedGraph& d_graph, const SpannerBound& b) {
  detail::DeletionChecker checker(d_graph, b);
  if (!checker.empty_valid()) {
    // Even the intact graph violates the bound; removing anything only makes
    // distances worse, so every arc fails its solo check.
    return ArcSet(d_graph.arcs());
  }
  std::vector<Arc> critical;
  for (int id = 0; id < static_cast<int>(d_graph.arc_count()); ++id) {
    if (!checker.valid_with(id)) critical.push_back(d_graph.arcs()[id]);
  }
  return ArcSet(std::move(critical));
}

} // namespace dspan
