#include "dspan/solve.hpp"

#include "spanner_checker.hpp"

namespace dspan {

namespace {

struct ExactSearch {
  detail::DeletionChecker& checker;
  const std::vector<int>& candidates;
  std::vector<int> current;
  std::vector<int> best;

  // Depth-first over include/exclude decisions, include first. Candidates
  // ascend by (tail, head), so the first set recorded at any size is the
  // lexicographically smallest of that size; replacing only on strict
  // improvement keeps the final incumbent the lex-smallest maximum.
  void run(std::size_t idx) {
    if (current.size() > best.size()) best = current;
    if (idx == candidates.size()) return;
    if (current.size() + (candidates.size() - idx) <= best.size()) return;
    int id = candidates[idx];
    if (checker.valid_with(id)) {
      checker.remove(id);
      current.push_back(id);
      run(idx + 1);
      current.pop_back();
      checker.restore(id);
    }
    run(idx + 1);
  }
};

} // namespace

ExactSolution solve_exact(const DirectedGraph& d_graph, const SpannerBound& b,
                          const SolverLimits& limits) {
  detail::DeletionChecker checker(d_graph, b);
  if (!checker.empty_valid()) return ExactSolution{-1, ArcSet{}};

  std::vector<int> candidates;
  for (int id = 0; id < static_cast<int>(d_graph.arc_count()); ++id) {
    if (checker.valid_with(id)) candidates.push_back(id);
  }
  if (static_cast<int>(candidates.size()) > limits.max_candidate_arcs) {
    throw CapacityError("exact solver: " + std::to_string(candidates.size()) +
                        " non-critical candidate arcs exceed the limit of " +
                        std::to_string(limits.max_candidate_arcs));
  }

  ExactSearch search{checker, candidates, {}, {}};
  search.run(0);

  std::vector<Arc> witness;
  witness.reserve(search.best.size());
  for (int id : search.best) witness.push_back(d_graph.arcs()[id]);
  return ExactSolution{static_cast<std::int64_t>(search.best.size()), ArcSet(std::move(witness))};
}

ArcSet solve_greedy(const DirectedGraph& d_graph, const SpannerBound& b) {
  detail::DeletionChecker checker(d_graph, b);
  if (!checker.empty_valid()) {
    throw InputError("graph violates the bound with no arcs removed; no removal set is valid");
  }
  std::vector<Arc> kept;
  for (int id = 0; id < static_cast<int>(d_graph.arc_count()); ++id) {
    if (checker.valid_with(id)) {
      checker.remove(id);
      kept.push_back(d_graph.arcs()[id]);
    }
  }
  return ArcSet(std::move(kept));
}

bool decide(const DirectedGraph& d_graph, const SpannerBound& b, std::int64_t k,
            const SolverLimits& limits) {
  if (k < 0) throw InputError("k must be non-negative");
  if (trivial_no(b, k)) return false;
  if (k == 0) return true;
  return solve_exact(d_graph, b, limits).k_max >= k;
}

} // namespace dspan
