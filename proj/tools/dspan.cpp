#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dspan/enumerate.hpp"
#include "dspan/graph_io.hpp"
#include "dspan/reduction.hpp"
#include "line_parse.hpp"

using nlohmann::json;

namespace {

struct Limits {
  dspan::SolverLimits spanner;
  dspan::DomsetLimits domset;
};

/// DSPAN_CAPACITY overrides both exhaustion limits with one integer.
Limits load_limits() {
  Limits limits;
  if (const char* env = std::getenv("DSPAN_CAPACITY")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || value < 1) {
      throw dspan::InputError("DSPAN_CAPACITY must be a positive integer, got '" +
                              std::string(env) + "'");
    }
    limits.spanner.max_candidate_arcs = static_cast<int>(value);
    limits.domset.max_vertices = static_cast<int>(value);
  }
  return limits;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    dspan::write_text_file(out_path, text);
  }
}

json arcs_to_json(const dspan::ArcSet& arcs) {
  json list = json::array();
  for (const dspan::Arc& a : arcs) list.push_back({a.tail + 1, a.head + 1});
  return list;
}

/// Solve/verify accept either a plain digraph plus --bound or a reduced
/// instance file carrying its own bound and budget.
struct LoadedInstance {
  dspan::DirectedGraph graph;
  dspan::SpannerBound bound;
  std::optional<std::int64_t> budget;
};

LoadedInstance load_graph_and_bound(const std::string& path, const std::string& bound_spec) {
  std::string text = dspan::read_text_file(path);
  if (!bound_spec.empty()) {
    return LoadedInstance{dspan::parse_directed(text), dspan::SpannerBound::parse(bound_spec), {}};
  }
  dspan::ReducedInstance inst = dspan::parse_instance(text);
  return LoadedInstance{inst.graph(), inst.bound(), inst.budget_k()};
}

/// Removal-set file: `a <tail> <head>` lines, 1-indexed; `c` comments and
/// blank lines are ignored.
dspan::ArcSet parse_arcset(const std::string& text, int n) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::vector<dspan::Arc> arcs;
  while (std::getline(in, line)) {
    ++line_no;
    if (dspan::detail::is_blank(line) || dspan::detail::is_comment(line)) continue;
    auto tokens = dspan::detail::split_ws(line);
    if (tokens[0] != "a" || tokens.size() != 3) {
      dspan::detail::parse_fail(line_no, "expected arc line 'a <tail> <head>'");
    }
    arcs.push_back(dspan::Arc{dspan::detail::parse_vertex(tokens[1], n, line_no),
                              dspan::detail::parse_vertex(tokens[2], n, line_no)});
  }
  return dspan::ArcSet(std::move(arcs));
}

int run_gen(const std::string& kind, int n, std::uint64_t seed, double p,
            const std::string& out_path) {
  dspan::UndirectedGraph g;
  if (kind == "random-graph") {
    g = dspan::gen_random_graph(n, p, seed);
  } else if (kind == "path") {
    g = dspan::gen_path(n);
  } else if (kind == "cycle") {
    g = dspan::gen_cycle(n);
  } else if (kind == "complete") {
    g = dspan::gen_complete(n);
  } else if (kind == "edgeless") {
    g = dspan::gen_edgeless(n);
  } else {
    throw dspan::InputError("unknown kind '" + kind +
                            "' (random-graph, path, cycle, complete, edgeless)");
  }
  emit(dspan::format_undirected(g), out_path);
  return 0;
}

int run_reduce(const std::string& path, int l, const std::string& bound_spec,
               const std::string& out_path) {
  dspan::UndirectedGraph g = dspan::parse_undirected(dspan::read_text_file(path));
  dspan::SpannerBound bound = dspan::SpannerBound::parse(bound_spec);
  dspan::ReducedInstance inst = dspan::reduce(g, l, bound);
  emit(dspan::format_instance(inst), out_path);
  return 0;
}

int run_solve(const std::string& path, const std::string& bound_spec, const std::string& mode,
              const std::string& out_path, const Limits& limits) {
  LoadedInstance loaded = load_graph_and_bound(path, bound_spec);
  json out;
  out["bound"] = loaded.bound.format();
  if (loaded.budget) out["budget_k"] = *loaded.budget;
  std::int64_t achieved = 0;
  if (mode == "exact") {
    dspan::ExactSolution sol = dspan::solve_exact(loaded.graph, loaded.bound, limits.spanner);
    out["mode"] = "exact";
    out["k_max"] = sol.k_max;
    out["witness"] = arcs_to_json(sol.witness);
    achieved = sol.k_max;
  } else if (mode == "greedy") {
    dspan::ArcSet f = dspan::solve_greedy(loaded.graph, loaded.bound);
    out["mode"] = "greedy";
    out["k_greedy"] = f.size();
    out["witness"] = arcs_to_json(f);
    achieved = static_cast<std::int64_t>(f.size());
  } else {
    throw dspan::InputError("unknown mode '" + mode + "' (exact or greedy)");
  }
  if (loaded.budget) out["meets_budget"] = *loaded.budget == 0 || achieved >= *loaded.budget;
  emit(out.dump(2) + "\n", out_path);
  return 0;
}

int run_verify(const std::string& path, const std::string& arcs_path,
               const std::string& bound_spec, const std::string& out_path) {
  LoadedInstance loaded = load_graph_and_bound(path, bound_spec);
  dspan::ArcSet f = parse_arcset(dspan::read_text_file(arcs_path), loaded.graph.vertex_count());
  for (const dspan::Arc& a : f) {
    if (!loaded.graph.has_arc(a)) {
      throw dspan::InputError("removal set contains arc (" + std::to_string(a.tail + 1) + ", " +
                              std::to_string(a.head + 1) + ") absent from the graph");
    }
  }
  auto violations = dspan::spanner_violations(loaded.graph, f, loaded.bound);
  json out;
  out["bound"] = loaded.bound.format();
  out["removed_arcs"] = f.size();
  out["valid"] = violations.empty();
  json list = json::array();
  for (const auto& v : violations) {
    json item;
    item["from"] = v.from + 1;
    item["to"] = v.to + 1;
    item["dist_original"] = v.dist_original;
    if (v.dist_remaining.is_finite()) {
      item["dist_remaining"] = v.dist_remaining.value();
    } else {
      item["dist_remaining"] = nullptr;
    }
    item["bound_value"] = v.bound_value.to_string();
    list.push_back(item);
  }
  out["violations"] = list;
  emit(out.dump(2) + "\n", out_path);
  return violations.empty() ? 0 : 1;
}

int run_equiv(int n_max, int l_min, int l_max, std::vector<std::string> bound_specs,
              std::uint64_t seed, int sample, bool timings, const std::string& out_path,
              const Limits& limits) {
  if (n_max < 1) throw dspan::InputError("--n-max must be >= 1");
  if (sample == 0 && n_max > 6) {
    throw dspan::InputError("exhaustive enumeration past n = 6 is impractical; use --sample");
  }
  if (bound_specs.empty()) {
    bound_specs = {"linear(const:1;const:1)", "linear(const:3;const:0)", "linear(const:1;const:4)",
                   "linear(const:2;const:1)", "general(affine:1:1)"};
  }
  std::vector<dspan::SpannerBound> bounds;
  for (const std::string& spec : bound_specs) bounds.push_back(dspan::SpannerBound::parse(spec));

  std::mt19937_64 rng(seed);
  json cases = json::array();
  std::int64_t total = 0, disagreements = 0, inconclusive = 0, roundtrip_failures = 0;

  for (int n = 1; n <= n_max; ++n) {
    std::vector<std::uint64_t> codes;
    std::uint64_t count = dspan::labeled_graph_count(n);
    if (sample == 0 || static_cast<std::uint64_t>(sample) >= count) {
      for (std::uint64_t code = 0; code < count; ++code) codes.push_back(code);
    } else {
      std::set<std::uint64_t> drawn;
      while (drawn.size() < static_cast<std::size_t>(sample)) drawn.insert(rng() % count);
      codes.assign(drawn.begin(), drawn.end());
    }
    int lo = std::max(1, l_min);
    for (std::uint64_t code : codes) {
      dspan::UndirectedGraph g = dspan::undirected_from_code(n, code);
      int hi = l_max > 0 ? std::min(n, l_max) : n;
      for (int l = lo; l <= hi; ++l) {
        for (std::size_t bi = 0; bi < bounds.size(); ++bi) {
          auto started = std::chrono::steady_clock::now();
          dspan::EquivalenceReport r =
              dspan::verify_equivalence(g, l, bounds[bi], limits.spanner, limits.domset);
          ++total;
          json c;
          c["n"] = n;
          c["code"] = code;
          c["l"] = l;
          c["bound"] = bound_specs[bi];
          c["budget_k"] = r.budget_k;
          c["conclusive"] = r.conclusive;
          if (r.domset_solved) {
            c["domset_size"] = r.domset_size;
            c["domset_yes"] = r.domset_yes;
          }
          if (r.spanner_solved) {
            c["k_max"] = r.spanner_k_max;
            c["spanner_yes"] = r.spanner_yes;
          }
          if (!r.conclusive) {
            c["note"] = r.note;
            ++inconclusive;
          } else {
            c["agree"] = r.agree();
            if (!r.agree()) ++disagreements;
          }
          if (r.roundtrip_checked) {
            c["roundtrip"] = r.roundtrip_ok ? "ok" : "failed";
            if (!r.roundtrip_ok) ++roundtrip_failures;
          } else {
            c["roundtrip"] = "not-applicable";
          }
          if (timings) {
            auto elapsed = std::chrono::steady_clock::now() - started;
            c["ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
          }
          cases.push_back(std::move(c));
        }
      }
    }
  }

  json out;
  out["cases"] = std::move(cases);
  out["summary"] = {{"cases", total},
                    {"disagreements", disagreements},
                    {"inconclusive", inconclusive},
                    {"roundtrip_failures", roundtrip_failures}};
  emit(out.dump(2) + "\n", out_path);
  return (disagreements > 0 || roundtrip_failures > 0) ? 1 : 0;
}

int run_stats(const std::string& path, const std::string& out_path) {
  std::string text = dspan::read_text_file(path);

  // Sniff the header to pick the format.
  std::istringstream in(text);
  std::string line, format;
  while (std::getline(in, line)) {
    auto tokens = dspan::detail::split_ws(line);
    if (tokens.size() >= 2 && tokens[0] == "p") {
      format = tokens[1];
      break;
    }
  }

  json out;
  if (format == "ug") {
    dspan::UndirectedGraph g = dspan::parse_undirected(text);
    out["format"] = "undirected";
    out["vertices"] = g.vertex_count();
    out["edges"] = g.edge_count();
  } else if (format == "dg") {
    dspan::DirectedGraph g;
    if (text.find("c budget") != std::string::npos) {
      dspan::ReducedInstance inst = dspan::parse_instance(text);
      g = inst.graph();
      out["format"] = "reduced-instance";
      out["bound"] = inst.bound().format();
      out["budget_k"] = inst.budget_k();
      out["source_vertices"] = inst.source_n();
    } else {
      g = dspan::parse_directed(text);
      out["format"] = "directed";
    }
    out["vertices"] = g.vertex_count();
    out["arcs"] = g.arc_count();
    out["acyclic"] = dspan::is_acyclic(g);
    dspan::DistanceMatrix m = dspan::all_pairs_distances(g);
    std::map<std::int64_t, std::int64_t> histogram;
    std::int64_t unreachable = 0;
    for (int u = 0; u < g.vertex_count(); ++u) {
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (u == v) continue;
        if (m.at(u, v).is_finite()) {
          ++histogram[m.at(u, v).value()];
        } else {
          ++unreachable;
        }
      }
    }
    json hist = json::array();
    for (const auto& [d, cnt] : histogram) hist.push_back({d, cnt});
    out["distance_histogram"] = hist;
    out["unreachable_pairs"] = unreachable;
  } else {
    throw dspan::InputError("no 'p dg' or 'p ug' header found in " + path);
  }
  emit(out.dump(2) + "\n", out_path);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"directed-graph spanner toolkit"};
  app.require_subcommand(1);

  std::string gen_kind, gen_out;
  int gen_n = 0;
  std::uint64_t gen_seed = 1;
  double gen_p = 0.5;
  CLI::App* gen = app.add_subcommand("gen", "generate an undirected graph file");
  gen->add_option("kind", gen_kind, "random-graph | path | cycle | complete | edgeless")
      ->required();
  gen->add_option("n", gen_n, "vertex count")->required();
  gen->add_option("--seed", gen_seed, "random-graph seed");
  gen->add_option("--p", gen_p, "random-graph edge probability");
  gen->add_option("-o,--out", gen_out, "output file (stdout by default)");

  std::string reduce_path, reduce_bound, reduce_out;
  int reduce_l = 0;
  CLI::App* reduce = app.add_subcommand("reduce", "build the reduced spanner instance");
  reduce->add_option("graph", reduce_path, "undirected graph file")->required();
  reduce->add_option("--l", reduce_l, "dominating-set budget")->required();
  reduce->add_option("--bound", reduce_bound, "bound spec, e.g. linear(const:1;const:1)")
      ->required();
  reduce->add_option("-o,--out", reduce_out, "output file (stdout by default)");

  std::string solve_path, solve_bound, solve_mode = "exact", solve_out;
  CLI::App* solve = app.add_subcommand("solve", "maximize removable arcs");
  solve->add_option("instance", solve_path, "reduced-instance file, or digraph file with --bound")
      ->required();
  solve->add_option("--bound", solve_bound, "bound spec (treats the input as a plain digraph)");
  solve->add_option("--mode", solve_mode, "exact | greedy");
  solve->add_option("-o,--out", solve_out, "output file (stdout by default)");

  std::string verify_path, verify_arcs, verify_bound, verify_out;
  CLI::App* verify = app.add_subcommand("verify", "check a removal set against the bound");
  verify->add_option("instance", verify_path, "reduced-instance file, or digraph file with --bound")
      ->required();
  verify->add_option("arcs", verify_arcs, "removal-set file ('a <tail> <head>' lines)")
      ->required();
  verify->add_option("--bound", verify_bound, "bound spec (treats the input as a plain digraph)");
  verify->add_option("-o,--out", verify_out, "output file (stdout by default)");

  int equiv_n_max = 4, equiv_l_min = 1, equiv_l_max = 0, equiv_sample = 0;
  std::uint64_t equiv_seed = 1;
  bool equiv_timings = false;
  std::vector<std::string> equiv_bounds;
  std::string equiv_out;
  CLI::App* equiv = app.add_subcommand("equiv", "cross-check both solvers over many instances");
  equiv->add_option("--n-max", equiv_n_max, "largest source-graph size (default 4)");
  equiv->add_option("--l-min", equiv_l_min, "smallest l (default 1)");
  equiv->add_option("--l-max", equiv_l_max, "largest l (default: n)");
  equiv->add_option("--bound", equiv_bounds, "bound spec (repeatable; default: five stock bounds)");
  equiv->add_option("--sample", equiv_sample, "random graphs per size instead of all of them");
  equiv->add_option("--seed", equiv_seed, "sampling seed");
  equiv->add_flag("--timings", equiv_timings, "include per-case timings (not byte-stable)");
  equiv->add_option("-o,--out", equiv_out, "output file (stdout by default)");

  std::string stats_path, stats_out;
  CLI::App* stats = app.add_subcommand("stats", "summarize a graph or instance file");
  stats->add_option("file", stats_path, "graph or reduced-instance file")->required();
  stats->add_option("-o,--out", stats_out, "output file (stdout by default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Limits limits = load_limits();
    if (gen->parsed()) return run_gen(gen_kind, gen_n, gen_seed, gen_p, gen_out);
    if (reduce->parsed()) return run_reduce(reduce_path, reduce_l, reduce_bound, reduce_out);
    if (solve->parsed()) return run_solve(solve_path, solve_bound, solve_mode, solve_out, limits);
    if (verify->parsed()) return run_verify(verify_path, verify_arcs, verify_bound, verify_out);
    if (equiv->parsed()) {
      return run_equiv(equiv_n_max, equiv_l_min, equiv_l_max, equiv_bounds, equiv_seed,
                       equiv_sample, equiv_timings, equiv_out, limits);
    }
    if (stats->parsed()) return run_stats(stats_path, stats_out);
  } catch (const dspan::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const std::overflow_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const dspan::InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const dspan::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
