#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dspan/bounds.hpp"
#include "dspan/digraph.hpp"
#include "dspan/domset.hpp"
#include "dspan/solve.hpp"

namespace dspan {

/// Role of one vertex in a reduced instance. Each source vertex i owns one
/// row: a left relay, a center relay, a right relay (center and right merge
/// into one vertex when the bound threshold floors to 2), optional chain
/// nodes splicing the center-to-right arc, and a target. A single root sits
/// above all rows.
enum class LayerKind {
  Root,
  RelayLeft,
  RelayCenter,
  RelayRight,
  RelayCenterRight, // merged center/right
  Target,
  ChainNode,
};

struct Layer {
  LayerKind kind = LayerKind::Root;
  int row = -1;      // owning source vertex; -1 for the root
  int position = 0;  // chain nodes only: 1-based, counted from the center side

  friend bool operator==(const Layer&, const Layer&) = default;
};

/// Directed instance produced by the dominating-set reduction: the digraph,
/// the bound it was built for, the removal budget, and the per-vertex layer
/// labeling that ties digraph vertices back to source vertices.
class ReducedInstance {
public:
  ReducedInstance(DirectedGraph graph, SpannerBound bound, std::int64_t budget_k,
                  std::vector<Layer> layers);

  const DirectedGraph& graph() const { return graph_; }
  const SpannerBound& bound() const { return bound_; }
  std::int64_t budget_k() const { return budget_k_; }
  const std::vector<Layer>& layers() const { return layers_; }
  const Layer& layer(int v) const { return layers_.at(v); }

  /// Number of source-graph vertices (rows).
  int source_n() const { return source_n_; }
  /// Center and right relays are one merged vertex per row.
  bool merged_relays() const { return merged_; }
  /// Chain nodes per row (0 unless the threshold floors to 4 or more).
  int chain_length() const { return chain_length_; }

  int root() const { return root_; }
  int relay_left(int row) const { return relay_left_.at(row); }
  int relay_center(int row) const { return relay_center_.at(row); }
  int relay_right(int row) const { return relay_right_.at(row); }
  int target(int row) const { return target_.at(row); }
  /// Chain vertices of a row ordered from the center relay outward.
  const std::vector<int>& chain(int row) const { return chains_.at(row); }

private:
  void index_layers();

  DirectedGraph graph_;
  SpannerBound bound_;
  std::int64_t budget_k_;
  std::vector<Layer> layers_;

  int source_n_ = 0;
  bool merged_ = false;
  int chain_length_ = 0;
  int root_ = -1;
  std::vector<int> relay_left_;
  std::vector<int> relay_center_;
  std::vector<int> relay_right_;
  std::vector<int> target_;
  std::vector<std::vector<int>> chains_;
};

/// Builds the reduced instance for "does g have a dominating set of size at
/// most l" under bound b. Per source vertex i: root arcs to the left relay,
/// center relay, and target; a path left -> center -> right -> target. Per
/// edge (i, j): arcs from right relay i to target j and vice versa. The
/// center-to-right arc is then contracted (floor(t) = 2), kept (floor(t) =
/// 3), or subdivided floor(t) - 3 times (floor(t) >= 4), where t is the
/// bound threshold. The removal budget is 2n - l.
///
/// Requires threshold t >= 2 (below 2 the decision is a certain No for any
/// positive budget) and 1 <= l <= n (l = 0 only for the empty graph).
ReducedInstance reduce(const UndirectedGraph& g, int l, const SpannerBound& b);

/// Removal set certifying the spanner side from a dominating set x: all
/// (root, target(i)) arcs plus (root, relay_center(i)) for every i not in x.
/// Size is 2n - |x| >= budget when |x| <= l.
ArcSet forward_witness(const ReducedInstance& inst, const UndirectedGraph& g, const VertexSet& x);

/// Dominating set extracted from a valid removal set f of size >= budget:
/// X = rows whose (root, center) arc survives, completed by every vertex X
/// leaves undominated. Arcs outside the (root, center) / (root, target)
/// forms are critical, so their presence in f signals a defective solver and
/// raises InvariantError.
VertexSet backward_witness(const ReducedInstance& inst, const UndirectedGraph& g, const ArcSet& f);

struct StructureReport {
  bool acyclic = false;
  bool vertex_count_ok = false;   // |V| <= 4n + n*t + 1
  bool budget_in_range = false;   // budget = 2n - l for some valid l
  bool root_target_dist_ok = false;  // dist(root, target(i)) = 1
  bool relay_span_ok = false;        // dist(center(i), right(i)) = floor(t) - 2
  bool path_triple_ok = false;       // root-to-target path lengths = {1, floor(t), floor(t) + 1}

  bool ok() const {
    return acyclic && vertex_count_ok && budget_in_range && root_target_dist_ok && relay_span_ok &&
           path_triple_ok;
  }
};

/// Exact structural facts every reduced instance must satisfy.
StructureReport check_structure(const ReducedInstance& inst);

struct EquivalenceReport {
  bool conclusive = true;       // false when a solver hit its capacity limit
  std::string note;             // capacity message when inconclusive
  std::int64_t budget_k = 0;
  bool domset_solved = false;
  int domset_size = -1;
  bool spanner_solved = false;
  std::int64_t spanner_k_max = 0;
  bool domset_yes = false;
  bool spanner_yes = false;
  bool roundtrip_checked = false; // witness maps exercised (Yes instances only)
  bool roundtrip_ok = true;

  bool agree() const { return domset_yes == spanner_yes; }
};

/// Answers the instance on both sides independently (exact dominating-set
/// solver vs. exact spanner solver on the reduced digraph) and, when both
/// say Yes, round-trips the witness maps and re-verifies each side.
EquivalenceReport verify_equivalence(const UndirectedGraph& g, int l, const SpannerBound& b,
                                     const SolverLimits& spanner_limits = {},
                                     const DomsetLimits& domset_limits = {});

/// Instance file format: the directed-graph text format extended with
/// `c bound <spec>`, `c budget <k>`, and one `c layer <vertex> <label>` line
/// per vertex, labels being ROOT, RELAY_L(i), RELAY_C(i), RELAY_R(i),
/// RELAY_CR(i), TARGET(i), or CHAIN(i,p) with 1-indexed rows and positions.
/// format_instance and parse_instance round-trip losslessly.
std::string format_instance(const ReducedInstance& inst);
ReducedInstance parse_instance(std::istream& in);
ReducedInstance parse_instance(const std::string& text);

} // namespace dspan
