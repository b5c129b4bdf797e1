#include "dspan/reduction.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "dspan/spanner.hpp"
#include "line_parse.hpp"

namespace dspan {

namespace {

std::string row_str(int row) { return std::to_string(row + 1); }

std::string format_layer_label(const Layer& layer) {
  switch (layer.kind) {
    case LayerKind::Root:
      return "ROOT";
    case LayerKind::RelayLeft:
      return "RELAY_L(" + row_str(layer.row) + ")";
    case LayerKind::RelayCenter:
      return "RELAY_C(" + row_str(layer.row) + ")";
    case LayerKind::RelayRight:
      return "RELAY_R(" + row_str(layer.row) + ")";
    case LayerKind::RelayCenterRight:
      return "RELAY_CR(" + row_str(layer.row) + ")";
    case LayerKind::Target:
      return "TARGET(" + row_str(layer.row) + ")";
    case LayerKind::ChainNode:
      return "CHAIN(" + row_str(layer.row) + "," + std::to_string(layer.position) + ")";
  }
  throw InvariantError("unknown layer kind");
}

Layer parse_layer_label(const std::string& label, int line_no) {
  if (label == "ROOT") return Layer{LayerKind::Root, -1, 0};
  std::size_t open = label.find('(');
  if (open == std::string::npos || label.back() != ')') {
    detail::parse_fail(line_no, "malformed layer label '" + label + "'");
  }
  std::string name = label.substr(0, open);
  std::string args = label.substr(open + 1, label.size() - open - 2);
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = args.find(',', start);
    if (comma == std::string::npos) {
      parts.push_back(args.substr(start));
      break;
    }
    parts.push_back(args.substr(start, comma - start));
    start = comma + 1;
  }
  auto arg_at = [&](std::size_t i) {
    long v = detail::parse_long(parts[i], line_no);
    if (v < 1) detail::parse_fail(line_no, "layer argument must be >= 1 in '" + label + "'");
    return static_cast<int>(v);
  };
  if (name == "CHAIN") {
    if (parts.size() != 2) detail::parse_fail(line_no, "CHAIN takes (row, position)");
    return Layer{LayerKind::ChainNode, arg_at(0) - 1, arg_at(1)};
  }
  if (parts.size() != 1) detail::parse_fail(line_no, "'" + name + "' takes one argument");
  int row = arg_at(0) - 1;
  if (name == "RELAY_L") return Layer{LayerKind::RelayLeft, row, 0};
  if (name == "RELAY_C") return Layer{LayerKind::RelayCenter, row, 0};
  if (name == "RELAY_R") return Layer{LayerKind::RelayRight, row, 0};
  if (name == "RELAY_CR") return Layer{LayerKind::RelayCenterRight, row, 0};
  if (name == "TARGET") return Layer{LayerKind::Target, row, 0};
  detail::parse_fail(line_no, "unknown layer label '" + label + "'");
}

/// Lengths of all simple directed paths between two vertices. Path marking
/// keeps this terminating even on cyclic graphs.
std::set<std::int64_t> simple_path_lengths(const DirectedGraph& g, int from, int to) {
  std::set<std::int64_t> lengths;
  std::vector<char> on_path(g.vertex_count(), 0);
  auto dfs = [&](auto&& self, int v, std::int64_t len) -> void {
    if (v == to) {
      if (len > 0) lengths.insert(len);
      return;
    }
    on_path[v] = 1;
    for (int u : g.out_neighbors(v)) {
      if (!on_path[u]) self(self, u, len + 1);
    }
    on_path[v] = 0;
  };
  dfs(dfs, from, 0);
  return lengths;
}

} // namespace

ReducedInstance::ReducedInstance(DirectedGraph graph, SpannerBound bound, std::int64_t budget_k,
                                 std::vector<Layer> layers)
    : graph_(std::move(graph)),
      bound_(std::move(bound)),
      budget_k_(budget_k),
      layers_(std::move(layers)) {
  index_layers();
}

void ReducedInstance::index_layers() {
  if (budget_k_ < 0) throw InputError("negative removal budget");
  if (static_cast<int>(layers_.size()) != graph_.vertex_count()) {
    throw InputError("expected one layer per vertex, got " + std::to_string(layers_.size()) +
                     " for " + std::to_string(graph_.vertex_count()) + " vertices");
  }
  for (const Layer& l : layers_) {
    if (l.kind == LayerKind::Root) continue;
    if (l.row < 0) throw InputError("layer row missing");
    source_n_ = std::max(source_n_, l.row + 1);
  }

  root_ = -1;
  relay_left_.assign(source_n_, -1);
  relay_center_.assign(source_n_, -1);
  relay_right_.assign(source_n_, -1);
  target_.assign(source_n_, -1);
  chains_.assign(source_n_, {});

  auto assign_once = [](std::vector<int>& slot, int row, int v, const char* what) {
    if (slot[row] != -1) {
      throw InputError("duplicate " + std::string(what) + " layer in row " + row_str(row));
    }
    slot[row] = v;
  };

  int merged_rows = 0, split_rows = 0;
  for (int v = 0; v < graph_.vertex_count(); ++v) {
    const Layer& l = layers_[v];
    switch (l.kind) {
      case LayerKind::Root:
        if (root_ != -1) throw InputError("more than one root layer");
        root_ = v;
        break;
      case LayerKind::RelayLeft:
        assign_once(relay_left_, l.row, v, "left relay");
        break;
      case LayerKind::RelayCenter:
        assign_once(relay_center_, l.row, v, "center relay");
        break;
      case LayerKind::RelayRight:
        assign_once(relay_right_, l.row, v, "right relay");
        break;
      case LayerKind::RelayCenterRight:
        assign_once(relay_center_, l.row, v, "merged relay");
        relay_right_[l.row] = v;
        break;
      case LayerKind::Target:
        assign_once(target_, l.row, v, "target");
        break;
      case LayerKind::ChainNode:
        if (l.position < 1) throw InputError("chain position must be >= 1");
        chains_[l.row].push_back(v);
        break;
    }
  }
  if (root_ == -1) throw InputError("no root layer");

  for (int row = 0; row < source_n_; ++row) {
    if (relay_left_[row] == -1) throw InputError("row " + row_str(row) + " lacks a left relay");
    if (target_[row] == -1) throw InputError("row " + row_str(row) + " lacks a target");
    if (relay_center_[row] == -1 || relay_right_[row] == -1) {
      throw InputError("row " + row_str(row) + " lacks center/right relays");
    }
    bool merged = relay_center_[row] == relay_right_[row];
    ++(merged ? merged_rows : split_rows);

    auto& chain = chains_[row];
    std::sort(chain.begin(), chain.end(),
              [&](int a, int b) { return layers_[a].position < layers_[b].position; });
    for (std::size_t p = 0; p < chain.size(); ++p) {
      if (layers_[chain[p]].position != static_cast<int>(p) + 1) {
        throw InputError("row " + row_str(row) + " chain positions are not 1.." +
                         std::to_string(chain.size()));
      }
    }
    if (merged && !chain.empty()) {
      throw InputError("row " + row_str(row) + " mixes merged relays with chain nodes");
    }
  }
  if (merged_rows > 0 && split_rows > 0) {
    throw InputError("rows disagree on merged vs. split relays");
  }
  merged_ = merged_rows > 0;
  chain_length_ = source_n_ > 0 ? static_cast<int>(chains_[0].size()) : 0;
  for (int row = 1; row < source_n_; ++row) {
    if (static_cast<int>(chains_[row].size()) != chain_length_) {
      throw InputError("rows disagree on chain length");
    }
  }
}

ReducedInstance reduce(const UndirectedGraph& g, int l, const SpannerBound& b) {
  int n = g.vertex_count();
  if (n == 0) {
    if (l != 0) throw InputError("the empty graph admits only l = 0");
    return ReducedInstance(DirectedGraph(1, {}), b, 0, {Layer{LayerKind::Root, -1, 0}});
  }
  if (l < 1 || l > n) {
    throw InputError("l must be in [1, " + std::to_string(n) + "], got " + std::to_string(l));
  }
  Rational t = b.threshold();
  if (t < Rational(2)) {
    throw InputError("bound threshold t = " + t.to_string() +
                     " is < 2: removing any arc forces a detour of length >= 2, so every "
                     "positive budget is a certain No and the construction excludes this case");
  }

  // Base layout: root, then the left-relay, center-relay, right-relay, and
  // target blocks, each n wide.
  int root = 0;
  std::vector<int> rl(n), rc(n), rr(n), tg(n);
  for (int i = 0; i < n; ++i) {
    rl[i] = 1 + i;
    rc[i] = 1 + n + i;
    rr[i] = 1 + 2 * n + i;
    tg[i] = 1 + 3 * n + i;
  }
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(6) * n + 2 * g.edge_count());
  for (int i = 0; i < n; ++i) {
    arcs.push_back(Arc{root, rl[i]});
    arcs.push_back(Arc{root, rc[i]});
    arcs.push_back(Arc{root, tg[i]});
    arcs.push_back(Arc{rl[i], rc[i]});
    arcs.push_back(Arc{rc[i], rr[i]});
    arcs.push_back(Arc{rr[i], tg[i]});
  }
  for (const Edge& e : g.edges()) {
    arcs.push_back(Arc{rr[e.u], tg[e.v]});
    arcs.push_back(Arc{rr[e.v], tg[e.u]});
  }
  DirectedGraph d(4 * n + 1, std::move(arcs));

  std::int64_t tf = t.floor();
  std::vector<std::vector<int>> chains(n);
  bool merged = false;
  if (tf == 2) {
    merged = true;
    for (int i = 0; i < n; ++i) {
      std::vector<int> old_to_new;
      d = contract_arc(d, Arc{rc[i], rr[i]}, old_to_new);
      root = old_to_new[root];
      for (int j = 0; j < n; ++j) {
        rl[j] = old_to_new[rl[j]];
        rc[j] = old_to_new[rc[j]];
        rr[j] = old_to_new[rr[j]];
        tg[j] = old_to_new[tg[j]];
      }
    }
  } else if (tf >= 4) {
    int q = static_cast<int>(tf - 3);
    for (int i = 0; i < n; ++i) {
      int base = d.vertex_count();
      d = subdivide_arc(d, Arc{rc[i], rr[i]}, q);
      for (int p = 0; p < q; ++p) chains[i].push_back(base + p);
    }
  }

  std::vector<Layer> layers(d.vertex_count());
  layers[root] = Layer{LayerKind::Root, -1, 0};
  for (int i = 0; i < n; ++i) {
    layers[rl[i]] = Layer{LayerKind::RelayLeft, i, 0};
    if (merged) {
      layers[rc[i]] = Layer{LayerKind::RelayCenterRight, i, 0};
    } else {
      layers[rc[i]] = Layer{LayerKind::RelayCenter, i, 0};
      layers[rr[i]] = Layer{LayerKind::RelayRight, i, 0};
    }
    layers[tg[i]] = Layer{LayerKind::Target, i, 0};
    for (std::size_t p = 0; p < chains[i].size(); ++p) {
      layers[chains[i][p]] = Layer{LayerKind::ChainNode, i, static_cast<int>(p) + 1};
    }
  }
  return ReducedInstance(std::move(d), b, 2 * static_cast<std::int64_t>(n) - l,
                         std::move(layers));
}

ArcSet forward_witness(const ReducedInstance& inst, const UndirectedGraph& g, const VertexSet& x) {
  if (g.vertex_count() != inst.source_n()) {
    throw InputError("graph has " + std::to_string(g.vertex_count()) +
                     " vertices but the instance was built from " +
                     std::to_string(inst.source_n()));
  }
  if (!is_dominating(g, x)) throw InputError("witness is not a dominating set");
  int n = inst.source_n();
  int root = inst.root();
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back(Arc{root, inst.target(i)});
  for (int i = 0; i < n; ++i) {
    if (!x.contains(i)) arcs.push_back(Arc{root, inst.relay_center(i)});
  }
  return ArcSet(std::move(arcs));
}

VertexSet backward_witness(const ReducedInstance& inst, const UndirectedGraph& g, const ArcSet& f) {
  if (g.vertex_count() != inst.source_n()) {
    throw InputError("graph has " + std::to_string(g.vertex_count()) +
                     " vertices but the instance was built from " +
                     std::to_string(inst.source_n()));
  }
  int n = inst.source_n();
  int root = inst.root();

  // Form check first: any arc outside the two removable forms is critical,
  // so a "valid" removal set containing one means a defective solver.
  std::vector<char> center_removed(n, 0);
  for (const Arc& a : f) {
    bool well_formed = false;
    if (a.tail == root && a.head >= 0 && a.head < inst.graph().vertex_count()) {
      const Layer& layer = inst.layer(a.head);
      if (layer.kind == LayerKind::RelayCenter || layer.kind == LayerKind::RelayCenterRight) {
        center_removed[layer.row] = 1;
        well_formed = true;
      } else if (layer.kind == LayerKind::Target) {
        well_formed = true;
      }
    }
    if (!well_formed) {
      throw InvariantError("removal set contains arc (" + std::to_string(a.tail) + ", " +
                           std::to_string(a.head) +
                           "), which is not a root-to-center or root-to-target arc");
    }
  }
  if (static_cast<std::int64_t>(f.size()) < inst.budget_k()) {
    throw InputError("removal set has " + std::to_string(f.size()) +
                     " arcs, below the budget of " + std::to_string(inst.budget_k()));
  }
  if (!is_spanner(inst.graph(), f, inst.bound())) {
    throw InputError("removal set does not satisfy the bound");
  }

  std::vector<int> result;
  std::vector<char> dominated(n, 0);
  for (int i = 0; i < n; ++i) {
    if (center_removed[i]) continue;
    result.push_back(i);
    dominated[i] = 1;
    for (int u : g.neighbors(i)) dominated[u] = 1;
  }
  for (int i = 0; i < n; ++i) {
    if (!dominated[i]) result.push_back(i);
  }
  VertexSet witness{std::move(result)};

  std::int64_t l = 2 * static_cast<std::int64_t>(n) - inst.budget_k();
  if (static_cast<std::int64_t>(witness.size()) > l || !is_dominating(g, witness)) {
    throw InvariantError("extracted set is not a dominating set within the budget");
  }
  return witness;
}

StructureReport check_structure(const ReducedInstance& inst) {
  StructureReport report;
  const DirectedGraph& d = inst.graph();
  int n = inst.source_n();
  Rational t = inst.bound().threshold();
  std::int64_t tf = t.floor();

  report.acyclic = is_acyclic(d);
  report.vertex_count_ok =
      Rational(d.vertex_count()) <= Rational(4 * n + 1) + t * Rational(n);
  report.budget_in_range = n == 0 ? inst.budget_k() == 0
                                  : inst.budget_k() >= n && inst.budget_k() <= 2 * n - 1;

  std::vector<Distance> from_root = bfs_distances(d, inst.root());
  report.root_target_dist_ok = true;
  for (int i = 0; i < n; ++i) {
    if (from_root[inst.target(i)] != Distance::finite(1)) report.root_target_dist_ok = false;
  }

  report.relay_span_ok = true;
  for (int i = 0; i < n; ++i) {
    Distance span = bfs_distances(d, inst.relay_center(i))[inst.relay_right(i)];
    if (span != Distance::finite(tf - 2)) report.relay_span_ok = false;
  }

  report.path_triple_ok = true;
  for (int i = 0; i < n; ++i) {
    std::set<std::int64_t> expected{1, tf, tf + 1};
    if (simple_path_lengths(d, inst.root(), inst.target(i)) != expected) {
      report.path_triple_ok = false;
    }
  }
  return report;
}

EquivalenceReport verify_equivalence(const UndirectedGraph& g, int l, const SpannerBound& b,
                                     const SolverLimits& spanner_limits,
                                     const DomsetLimits& domset_limits) {
  ReducedInstance inst = reduce(g, l, b);
  EquivalenceReport report;
  report.budget_k = inst.budget_k();
  try {
    DomsetSolution ds = solve_exact_domset(g, domset_limits);
    report.domset_solved = true;
    report.domset_size = ds.size;
    report.domset_yes = ds.size <= l;

    ExactSolution sp = solve_exact(inst.graph(), b, spanner_limits);
    report.spanner_solved = true;
    report.spanner_k_max = sp.k_max;
    report.spanner_yes = inst.budget_k() == 0 || sp.k_max >= inst.budget_k();

    if (report.domset_yes && report.spanner_yes) {
      report.roundtrip_checked = true;
      ArcSet forward = forward_witness(inst, g, ds.witness);
      bool forward_ok = static_cast<std::int64_t>(forward.size()) >= inst.budget_k() &&
                        is_spanner(inst.graph(), forward, b);
      VertexSet back = backward_witness(inst, g, sp.witness);
      bool back_ok = static_cast<int>(back.size()) <= l && is_dominating(g, back);
      report.roundtrip_ok = forward_ok && back_ok;
    }
  } catch (const CapacityError& e) {
    report.conclusive = false;
    report.note = e.what();
  }
  return report;
}

std::string format_instance(const ReducedInstance& inst) {
  std::ostringstream out;
  const DirectedGraph& d = inst.graph();
  out << "p dg " << d.vertex_count() << " " << d.arc_count() << "\n";
  out << "c bound " << inst.bound().format() << "\n";
  for (int v = 0; v < d.vertex_count(); ++v) {
    out << "c layer " << v + 1 << " " << format_layer_label(inst.layer(v)) << "\n";
  }
  for (const Arc& a : d.arcs()) {
    out << "a " << a.tail + 1 << " " << a.head + 1 << "\n";
  }
  out << "c budget " << inst.budget_k() << "\n";
  return out.str();
}

ReducedInstance parse_instance(std::istream& in) {
  using detail::is_blank;
  using detail::is_comment;
  using detail::parse_fail;
  using detail::parse_long;
  using detail::parse_vertex;
  using detail::split_ws;

  int line_no = 0;
  std::string line;
  int n = -1;
  long m = -1;
  std::vector<Arc> arcs;
  bool have_bound = false, have_budget = false;
  SpannerBound bound = SpannerBound::linear(ErrorFunction::constant(Rational(1)),
                                            ErrorFunction::constant(Rational(1)));
  std::int64_t budget = 0;
  std::vector<char> layer_seen;
  std::vector<Layer> layers;

  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    auto tokens = split_ws(line);
    if (tokens[0] == "c") {
      if (tokens.size() >= 2 && tokens[1] == "bound") {
        if (tokens.size() != 3) parse_fail(line_no, "expected 'c bound <spec>'");
        if (have_bound) parse_fail(line_no, "duplicate bound line");
        try {
          bound = SpannerBound::parse(tokens[2]);
        } catch (const InputError& e) {
          parse_fail(line_no, e.what());
        }
        have_bound = true;
      } else if (tokens.size() >= 2 && tokens[1] == "budget") {
        if (tokens.size() != 3) parse_fail(line_no, "expected 'c budget <k>'");
        if (have_budget) parse_fail(line_no, "duplicate budget line");
        budget = parse_long(tokens[2], line_no);
        have_budget = true;
      } else if (tokens.size() >= 2 && tokens[1] == "layer") {
        if (n < 0) parse_fail(line_no, "layer line before the 'p dg' header");
        if (tokens.size() != 4) parse_fail(line_no, "expected 'c layer <vertex> <label>'");
        int v = parse_vertex(tokens[2], n, line_no);
        if (layer_seen[v]) parse_fail(line_no, "duplicate layer for vertex " + tokens[2]);
        layer_seen[v] = 1;
        layers[v] = parse_layer_label(tokens[3], line_no);
      }
      continue; // other comments are ignored
    }
    if (tokens[0] == "p") {
      if (n >= 0) parse_fail(line_no, "duplicate header");
      if (tokens.size() != 4 || tokens[1] != "dg") parse_fail(line_no, "expected 'p dg <n> <m>'");
      long nv = parse_long(tokens[2], line_no);
      m = parse_long(tokens[3], line_no);
      if (nv < 0 || m < 0) parse_fail(line_no, "negative count in header");
      n = static_cast<int>(nv);
      layer_seen.assign(n, 0);
      layers.assign(n, Layer{});
      continue;
    }
    if (tokens[0] == "a") {
      if (n < 0) parse_fail(line_no, "arc line before the 'p dg' header");
      if (tokens.size() != 3) parse_fail(line_no, "expected arc line 'a <tail> <head>'");
      if (static_cast<long>(arcs.size()) == m) {
        parse_fail(line_no, "more arc lines than the " + std::to_string(m) + " declared");
      }
      arcs.push_back(Arc{parse_vertex(tokens[1], n, line_no), parse_vertex(tokens[2], n, line_no)});
      continue;
    }
    parse_fail(line_no, "unrecognized line '" + line + "'");
  }

  if (n < 0) throw InputError("missing header 'p dg <n> <m>'");
  if (static_cast<long>(arcs.size()) != m) {
    throw InputError("header declared " + std::to_string(m) + " arcs but found " +
                     std::to_string(arcs.size()));
  }
  if (!have_bound) throw InputError("instance lacks a 'c bound' line");
  if (!have_budget) throw InputError("instance lacks a 'c budget' line");
  for (int v = 0; v < n; ++v) {
    if (!layer_seen[v]) {
      throw InputError("vertex " + std::to_string(v + 1) + " lacks a layer line");
    }
  }
  return ReducedInstance(DirectedGraph(n, std::move(arcs)), std::move(bound), budget,
                         std::move(layers));
}

ReducedInstance parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

} // namespace dspan
