#include <doctest.h>

#include <random>

#include "dspan/domset.hpp"
#include "dspan/enumerate.hpp"
#include "dspan/errors.hpp"
#include "oracles.hpp"

using namespace dspan;

TEST_CASE("is_dominating checks closed neighborhoods") {
  UndirectedGraph p3 = gen_path(3);
  CHECK(is_dominating(p3, VertexSet({1})));
  CHECK_FALSE(is_dominating(p3, VertexSet({0}))); // far endpoint uncovered
  CHECK(is_dominating(p3, VertexSet({0, 2})));
  CHECK_FALSE(is_dominating(p3, VertexSet{}));

  UndirectedGraph edgeless = gen_edgeless(3);
  CHECK(is_dominating(edgeless, VertexSet({0, 1, 2})));
  CHECK_FALSE(is_dominating(edgeless, VertexSet({0, 1})));

  CHECK(is_dominating(UndirectedGraph(0, {}), VertexSet{}));
  CHECK_THROWS_AS(is_dominating(p3, VertexSet({3})), InputError);
  CHECK(VertexSet({2, 0, 2}) == VertexSet({0, 2})); // set semantics: sorted, deduplicated
}

TEST_CASE("solve_exact_domset worked examples") {
  DomsetSolution s = solve_exact_domset(gen_path(3));
  CHECK(s.size == 1);
  CHECK(s.witness == VertexSet({1}));

  s = solve_exact_domset(gen_edgeless(4));
  CHECK(s.size == 4);
  CHECK(s.witness == VertexSet({0, 1, 2, 3}));

  s = solve_exact_domset(gen_cycle(4));
  CHECK(s.size == 2);
  // {0, 1} dominates C4 (closed neighborhoods {3,0,1} and {0,1,2}) and is the
  // lex-smallest pair, beating the equally valid antipodal pair {0, 2}.
  CHECK(s.witness == VertexSet({0, 1}));

  s = solve_exact_domset(UndirectedGraph(0, {}));
  CHECK(s.size == 0);
  CHECK(s.witness.empty());
}

TEST_CASE("solve_exact_domset matches full enumeration") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 300; ++trial) {
    UndirectedGraph g = oracles::random_undirected(rng, 8);
    oracles::NaiveDomset expected = oracles::naive_min_domset(g);
    DomsetSolution got = solve_exact_domset(g);
    CHECK(got.size == expected.size);
    CHECK(got.witness.vertices() == expected.witness);
    CHECK(is_dominating(g, got.witness));
  }
}

TEST_CASE("solve_exact_domset reports capacity exhaustion") {
  DomsetLimits limits;
  limits.max_vertices = 5;
  CHECK_THROWS_AS(solve_exact_domset(gen_path(6), limits), CapacityError);
  CHECK_NOTHROW(solve_exact_domset(gen_path(6)));
  CHECK_THROWS_AS(solve_exact_domset(gen_edgeless(21)), CapacityError); // default limit 20
}

TEST_CASE("decide_domset thresholds the minimum size") {
  CHECK(decide_domset(gen_path(3), 1));
  CHECK_FALSE(decide_domset(gen_path(3), 0));
  CHECK_FALSE(decide_domset(gen_cycle(4), 1));
  CHECK(decide_domset(gen_cycle(4), 2));
  CHECK(decide_domset(UndirectedGraph(0, {}), 0)); // empty graph always Yes
  CHECK_THROWS_AS(decide_domset(gen_path(3), -1), InputError);
}

TEST_CASE("decide_domset is monotone non-decreasing in l") {
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 200; ++trial) {
    UndirectedGraph g = oracles::random_undirected(rng, 7);
    bool prev = false;
    for (int l = 0; l <= g.vertex_count(); ++l) {
      bool now = decide_domset(g, l);
      CHECK((now || !prev)); // once true, stays true
      prev = now;
    }
    CHECK(prev); // l = n always dominates
  }
}

TEST_CASE("adding an edge never increases the minimum dominating set size") {
  std::mt19937_64 rng(909);
  for (int trial = 0; trial < 200; ++trial) {
    UndirectedGraph g = oracles::random_undirected(rng, 7);
    int n = g.vertex_count();
    std::vector<Edge> missing;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (!g.has_edge(u, v)) missing.push_back({u, v});
      }
    }
    if (missing.empty()) continue;
    Edge extra = missing[rng() % missing.size()];
    std::vector<Edge> edges = g.edges();
    edges.push_back(extra);
    UndirectedGraph denser(n, edges);
    CHECK(solve_exact_domset(denser).size <= solve_exact_domset(g).size);
  }
}
