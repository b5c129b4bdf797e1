#pragma once

#include "dspan/spanner.hpp"

namespace dspan {

struct SolverLimits {
  /// Exhaustive search over candidate arcs is exponential; refuse instead of
  /// silently degrading past this many candidates.
  int max_candidate_arcs = 25;
};

struct ExactSolution {
  /// Largest valid removal-set size. -1 means the graph violates the bound
  /// with nothing removed, so no removal set at all (not even the empty one)
  /// is valid.
  std::int64_t k_max = 0;
  /// Lexicographically smallest removal set of size k_max (by sorted arc
  /// sequence); empty when k_max <= 0.
  ArcSet witness;
};

/// Maximum number of removable arcs under the bound, by branch-and-bound
/// over the non-critical arcs. Validity is antitone (removing more arcs
/// never shrinks a distance), so supersets of invalid sets are pruned; the
/// size bound prunes branches that cannot beat the incumbent.
ExactSolution solve_exact(const DirectedGraph& d_graph, const SpannerBound& b,
                          const SolverLimits& limits = {});

/// Single pass over arcs in ascending (tail, head) order, keeping each arc
/// whose removal stays within the bound given everything kept so far. The
/// result always satisfies is_spanner. Throws InputError when the graph
/// itself violates the bound, since then no removal set is valid at all.
ArcSet solve_greedy(const DirectedGraph& d_graph, const SpannerBound& b);

/// Can at least k arcs be removed? Trivial-No shortcut first (threshold
/// below 2 with k >= 1), then k = 0 answers yes, then the exact solver.
bool decide(const DirectedGraph& d_graph, const SpannerBound& b, std::int64_t k,
            const SolverLimits& limits = {});

} // namespace dspan
