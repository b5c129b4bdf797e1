#include <doctest.h>

#include <random>

#include "dspan/bounds.hpp"
#include "dspan/errors.hpp"
#include "dspan/solve.hpp"
#include "dspan/spanner.hpp"
#include "oracles.hpp"

using namespace dspan;

namespace {

SpannerBound linear_cc(std::int64_t alpha, std::int64_t beta) {
  return SpannerBound::linear(ErrorFunction::constant(Rational(alpha)),
                              ErrorFunction::constant(Rational(beta)));
}

} // namespace

TEST_CASE("error function families evaluate per their formulas") {
  CHECK(evaluate(ErrorFunction::constant(Rational(3)), 7) == Rational(3));
  CHECK(evaluate(ErrorFunction::affine(Rational(1), Rational(2)), 4) == Rational(9));
  CHECK(evaluate(ErrorFunction::table({Rational(1), Rational(2), Rational(2)}), 10) ==
        Rational(2));
  CHECK(evaluate(ErrorFunction::table({Rational(1), Rational(2), Rational(2)}), 2) == Rational(2));
  CHECK(evaluate(ErrorFunction::power(Rational(3), Rational(2)), 5) == Rational(75));
  CHECK(evaluate(ErrorFunction::power(Rational(2), Rational(0)), 9) == Rational(2));
  CHECK_THROWS_AS(evaluate(ErrorFunction::constant(Rational(1)), 0), InputError);
}

TEST_CASE("error function construction rejects invalid parameters") {
  CHECK_THROWS_AS(ErrorFunction::constant(Rational(-1)), InputError);
  CHECK_THROWS_AS(ErrorFunction::affine(Rational(1), Rational(-2)), InputError);
  CHECK_THROWS_AS(ErrorFunction::power(Rational(1), Rational(-1, 2)), InputError);
  CHECK_THROWS_AS(ErrorFunction::table({}), InputError);
  CHECK_THROWS_AS(ErrorFunction::table({Rational(2), Rational(1)}), InputError); // decreasing
}

TEST_CASE("power with fractional exponent rounds up on the 1e-9 grid") {
  ErrorFunction f = ErrorFunction::power(Rational(1), Rational(1, 2));
  CHECK(evaluate(f, 1) == Rational(1)); // d = 1 is exact for every exponent
  Rational v = evaluate(f, 2);          // sqrt(2), directed rounding up
  CHECK(v * v >= Rational(2));
  Rational slack(1, 1000000000);
  CHECK((v - slack) * (v - slack) < Rational(2));
  CHECK(evaluate(f, 4) == Rational(2)); // exact in doubles, lands on the grid
}

TEST_CASE("spanner bounds combine the families") {
  SpannerBound lin = SpannerBound::linear(ErrorFunction::constant(Rational(1)),
                                          ErrorFunction::constant(Rational(2)));
  CHECK(bound_at(lin, 3) == Rational(5));
  CHECK(lin.threshold() == Rational(3));
  CHECK(bound_at(linear_cc(2, 0), 4) == Rational(8));
  SpannerBound gen = SpannerBound::general(ErrorFunction::affine(Rational(1), Rational(1)));
  CHECK(bound_at(gen, 5) == Rational(6));
  CHECK(gen.threshold() == Rational(2));
  CHECK_THROWS_AS(bound_at(lin, 0), InputError);
}

TEST_CASE("bound caps floor the rational bound onto integer distances") {
  SpannerBound b = SpannerBound::linear(ErrorFunction::constant(Rational(3, 2)),
                                        ErrorFunction::constant(Rational(0)));
  CHECK(b.at(3) == Rational(9, 2));
  CHECK(b.cap_at(3) == 4);
  CHECK(b.cap_at(2) == 3);
}

TEST_CASE("bound grammar parses and round-trips") {
  CHECK(SpannerBound::parse("linear(const:1;const:1)") == linear_cc(1, 1));
  CHECK(SpannerBound::parse("linear(affine:1:2;const:0)") ==
        SpannerBound::linear(ErrorFunction::affine(Rational(1), Rational(2)),
                             ErrorFunction::constant(Rational(0))));
  CHECK(SpannerBound::parse("general(table:1,2,2)") ==
        SpannerBound::general(ErrorFunction::table({Rational(1), Rational(2), Rational(2)})));
  CHECK(SpannerBound::parse("linear(const:1;table:3/2)").threshold() == Rational(5, 2));
  CHECK(SpannerBound::parse("general(power:2:0.5)") ==
        SpannerBound::general(ErrorFunction::power(Rational(2), Rational(1, 2))));

  for (const char* spec :
       {"linear(const:1;const:1)", "linear(const:3;const:0)", "linear(const:1;const:4)",
        "linear(const:2;const:1)", "general(affine:1:1)", "general(power:2:1/2)",
        "linear(table:1,3/2;const:0)"}) {
    SpannerBound b = SpannerBound::parse(spec);
    CHECK(SpannerBound::parse(b.format()) == b);
  }

  CHECK_THROWS_AS(SpannerBound::parse(""), InputError);
  CHECK_THROWS_AS(SpannerBound::parse("linear(const:1)"), InputError);
  CHECK_THROWS_AS(SpannerBound::parse("general(const:1;const:2)"), InputError);
  CHECK_THROWS_AS(SpannerBound::parse("cubic(const:1)"), InputError);
  CHECK_THROWS_AS(SpannerBound::parse("linear(const:-1;const:1)"), InputError);
  CHECK_THROWS_AS(SpannerBound::parse("linear(const:1;const:1"), InputError);
  CHECK_THROWS_AS(SpannerBound::parse("general(spline:1)"), InputError);
}

TEST_CASE("bounds are monotone in the distance") {
  for (const char* spec :
       {"linear(const:1;const:1)", "linear(const:3;const:0)", "linear(const:1;const:4)",
        "linear(const:2;const:1)", "general(affine:1:1)", "general(power:3/2:1/2)",
        "linear(affine:1:1;table:0,1,5)"}) {
    SpannerBound b = SpannerBound::parse(spec);
    for (std::int64_t d = 1; d < 100; ++d) {
      CHECK(b.at(d) <= b.at(d + 1));
    }
  }
}

TEST_CASE("is_spanner follows the definition") {
  // Empty removal keeps all distances, so validity only depends on whether
  // the bound clears each realized distance.
  DirectedGraph path(3, {{0, 1}, {1, 2}});
  CHECK(is_spanner(path, ArcSet{}, linear_cc(1, 0)));  // bound(d) = d exactly
  CHECK_FALSE(is_spanner(path, ArcSet{},
                         SpannerBound::general(ErrorFunction::table({Rational(1)}))));

  // Triangle: removing the shortcut is fine under a multiplicative 2 bound.
  DirectedGraph tri(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(is_spanner(tri, ArcSet({{0, 2}}), linear_cc(2, 0)));
  CHECK_FALSE(is_spanner(tri, ArcSet({{0, 1}}), linear_cc(2, 0)));

  // A single arc can never be removed under any finite bound.
  DirectedGraph single(2, {{0, 1}});
  CHECK_FALSE(is_spanner(single, ArcSet({{0, 1}}), linear_cc(100, 100)));

  CHECK_THROWS_AS(is_spanner(single, ArcSet({{1, 0}}), linear_cc(1, 1)), InputError);
}

TEST_CASE("is_spanner agrees with the definitional oracle on random cases") {
  std::mt19937_64 rng(501);
  for (int trial = 0; trial < 400; ++trial) {
    DirectedGraph g = oracles::random_digraph(rng, 6, 10);
    SpannerBound b = (trial % 3 == 0)   ? linear_cc(2, 0)
                     : (trial % 3 == 1) ? linear_cc(1, 2)
                                        : SpannerBound::parse("general(affine:1:1)");
    std::vector<Arc> f;
    for (const Arc& a : g.arcs()) {
      if (rng() % 3 == 0) f.push_back(a);
    }
    CHECK(is_spanner(g, ArcSet(f), b) == oracles::is_spanner_definition(g, f, b));
  }
}

TEST_CASE("violations name the failing pair with its distances") {
  DirectedGraph single(2, {{0, 1}});
  auto v = spanner_violations(single, ArcSet({{0, 1}}), linear_cc(2, 0));
  REQUIRE(v.size() == 1);
  CHECK(v[0].from == 0);
  CHECK(v[0].to == 1);
  CHECK(v[0].dist_original == 1);
  CHECK_FALSE(v[0].dist_remaining.is_finite());
  CHECK(v[0].bound_value == Rational(2));
  CHECK(spanner_violations(single, ArcSet{}, linear_cc(2, 0)).empty());
}

TEST_CASE("trivial_no fires exactly when t < 2 and k >= 1") {
  CHECK(trivial_no(linear_cc(1, 0), 1));
  CHECK_FALSE(trivial_no(linear_cc(1, 1), 1));
  CHECK_FALSE(trivial_no(linear_cc(1, 0), 0));
  CHECK(trivial_no(SpannerBound::parse("linear(const:1;table:9/10)"), 5)); // t = 19/10
  CHECK_FALSE(trivial_no(SpannerBound::parse("general(affine:1:1)"), 3));  // t = 2
}

TEST_CASE("critical arcs are exactly those whose solo removal fails") {
  DirectedGraph single(2, {{0, 1}});
  CHECK(critical_arcs(single, linear_cc(2, 0)) == ArcSet({{0, 1}}));

  DirectedGraph tri(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(critical_arcs(tri, linear_cc(2, 0)) == ArcSet({{0, 1}, {1, 2}}));

  // Bidirected triangle: every arc has a parallel 2-path and the bound
  // tolerates doubling, so nothing is critical.
  DirectedGraph bidir(3, {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}});
  CHECK(critical_arcs(bidir, linear_cc(2, 0)).empty());

  // When even the intact graph violates the bound, no removal set is valid,
  // so every arc is critical.
  DirectedGraph path(3, {{0, 1}, {1, 2}});
  SpannerBound tight = SpannerBound::general(ErrorFunction::table({Rational(1)}));
  CHECK(critical_arcs(path, tight) == ArcSet({{0, 1}, {1, 2}}));
}

TEST_CASE("solve_exact worked examples") {
  DirectedGraph single(2, {{0, 1}});
  ExactSolution s = solve_exact(single, linear_cc(2, 0));
  CHECK(s.k_max == 0);
  CHECK(s.witness.empty());

  DirectedGraph tri(3, {{0, 1}, {0, 2}, {1, 2}});
  s = solve_exact(tri, linear_cc(2, 0));
  CHECK(s.k_max == 1);
  CHECK(s.witness == ArcSet({{0, 2}}));

  // Intact graph already violates the bound: reported as k_max = -1.
  DirectedGraph path(3, {{0, 1}, {1, 2}});
  SpannerBound tight = SpannerBound::general(ErrorFunction::table({Rational(1)}));
  s = solve_exact(path, tight);
  CHECK(s.k_max == -1);
  CHECK(s.witness.empty());

  // Edgeless graph: nothing to remove, trivially valid.
  s = solve_exact(DirectedGraph(3, {}), linear_cc(1, 0));
  CHECK(s.k_max == 0);
}

TEST_CASE("solve_exact matches full enumeration including the witness") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 250; ++trial) {
    DirectedGraph g = oracles::random_digraph(rng, 5, 8);
    SpannerBound b = (trial % 2 == 0) ? linear_cc(2, 0) : linear_cc(1, 2);
    oracles::NaiveExact expected = oracles::naive_solve_exact(g, b);
    ExactSolution got = solve_exact(g, b);
    CHECK(got.k_max == expected.k_max);
    CHECK(got.witness.arcs() == expected.witness);
    if (got.k_max >= 0) {
      CHECK(is_spanner(g, got.witness, b));
      CHECK(static_cast<std::int64_t>(got.witness.size()) == got.k_max);
    }
  }
}

TEST_CASE("solve_exact reports capacity exhaustion") {
  // Bidirected K4 under an additive +2 bound: every arc has a two-hop
  // backup, so all 12 arcs are candidates; a limit of 4 must trip.
  std::vector<Arc> arcs;
  for (int u = 0; u < 4; ++u) {
    for (int v = 0; v < 4; ++v) {
      if (u != v) arcs.push_back({u, v});
    }
  }
  DirectedGraph k4(4, arcs);
  SolverLimits limits;
  limits.max_candidate_arcs = 4;
  CHECK_THROWS_AS(solve_exact(k4, linear_cc(1, 2), limits), CapacityError);
  CHECK_NOTHROW(solve_exact(k4, linear_cc(1, 2)));
}

TEST_CASE("solve_greedy follows the deterministic scan order") {
  DirectedGraph single(2, {{0, 1}});
  CHECK(solve_greedy(single, linear_cc(2, 0)).empty());

  DirectedGraph tri(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(solve_greedy(tri, linear_cc(2, 0)) == ArcSet({{0, 2}}));

  // No removal set exists at all: the greedy pass cannot return a valid F.
  DirectedGraph path(3, {{0, 1}, {1, 2}});
  SpannerBound tight = SpannerBound::general(ErrorFunction::table({Rational(1)}));
  CHECK_THROWS_AS(solve_greedy(path, tight), InputError);
}

TEST_CASE("greedy output is always valid and never beats exact") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 250; ++trial) {
    DirectedGraph g = oracles::random_digraph(rng, 5, 8);
    SpannerBound b = (trial % 2 == 0) ? linear_cc(2, 0) : linear_cc(1, 2);
    std::int64_t k_max = solve_exact(g, b).k_max;
    if (k_max < 0) {
      CHECK_THROWS_AS(solve_greedy(g, b), InputError);
      continue;
    }
    ArcSet f = solve_greedy(g, b);
    CHECK(is_spanner(g, f, b));
    CHECK(static_cast<std::int64_t>(f.size()) <= k_max);
  }
}

TEST_CASE("decide composes trivial_no, the k = 0 case, and the solver") {
  DirectedGraph tri(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(decide(tri, linear_cc(2, 0), 0));
  CHECK(decide(tri, linear_cc(2, 0), 1));
  CHECK_FALSE(decide(tri, linear_cc(2, 0), 2));
  DirectedGraph single(2, {{0, 1}});
  CHECK_FALSE(decide(single, linear_cc(2, 0), 1));
  CHECK(decide(single, linear_cc(1, 0), 0));       // k = 0 short-circuit
  CHECK_FALSE(decide(single, linear_cc(1, 0), 1)); // trivial-No, t = 1
  CHECK_THROWS_AS(decide(single, linear_cc(1, 1), -1), InputError);
}

TEST_CASE("decide is monotone non-increasing in k") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    DirectedGraph g = oracles::random_digraph(rng, 5, 8);
    SpannerBound b = (trial % 2 == 0) ? linear_cc(2, 0) : linear_cc(1, 2);
    bool prev = true;
    for (std::int64_t k = 0; k <= static_cast<std::int64_t>(g.arc_count()) + 1; ++k) {
      bool now = decide(g, b, k);
      CHECK((prev || !now)); // once false, stays false
      prev = now;
    }
  }
}
