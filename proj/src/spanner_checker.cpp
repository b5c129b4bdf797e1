#include "spanner_checker.hpp"

namespace dspan::detail {

DeletionChecker::DeletionChecker(const DirectedGraph& g, const SpannerBound& b)
    : g_(g), n_(g.vertex_count()), base_(all_pairs_distances(g)) {
  // Caps per original distance, computed once per distinct distance value.
  std::vector<std::int64_t> cap_of_dist(static_cast<std::size_t>(n_) + 1, -1);
  cap_.assign(static_cast<std::size_t>(n_) * n_, -1);
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      if (u == v) continue;
      Distance d = base_.at(u, v);
      if (!d.is_finite()) continue;
      std::int64_t dv = d.value();
      if (cap_of_dist[dv] < 0) cap_of_dist[dv] = b.cap_at(dv);
      std::int64_t cap = cap_of_dist[dv];
      cap_[static_cast<std::size_t>(u) * n_ + v] = cap;
      if (dv > cap) empty_valid_ = false;
    }
  }

  removed_.assign(g_.arc_count(), 0);
  adj_start_.assign(static_cast<std::size_t>(n_) + 1, 0);
  adj_head_.resize(g_.arc_count());
  adj_arc_.resize(g_.arc_count());
  const auto& arcs = g_.arcs();
  for (const Arc& a : arcs) ++adj_start_[static_cast<std::size_t>(a.tail) + 1];
  for (int v = 0; v < n_; ++v) adj_start_[v + 1] += adj_start_[v];
  std::vector<int> fill(adj_start_.begin(), adj_start_.end() - 1);
  for (int id = 0; id < static_cast<int>(arcs.size()); ++id) {
    int slot = fill[arcs[id].tail]++;
    adj_head_[slot] = arcs[id].head;
    adj_arc_[slot] = id;
  }

  sources_reaching_.assign(n_, {});
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      if (base_.at(u, v).is_finite()) sources_reaching_[v].push_back(u);
    }
  }

  dist_buf_.assign(n_, -1);
  queue_buf_.reserve(n_);
}

void DeletionChecker::remove(int arc_id) { removed_[arc_id] = 1; }

void DeletionChecker::restore(int arc_id) { removed_[arc_id] = 0; }

bool DeletionChecker::valid_with(int arc_id) {
  removed_[arc_id] = 1;
  bool ok = true;
  for (int u : sources_reaching_[g_.arcs()[arc_id].tail]) {
    if (!source_row_ok(u)) {
      ok = false;
      break;
    }
  }
  removed_[arc_id] = 0;
  return ok;
}

bool DeletionChecker::current_valid() {
  for (int u = 0; u < n_; ++u) {
    if (!source_row_ok(u)) return false;
  }
  return true;
}

bool DeletionChecker::source_row_ok(int source) {
  std::fill(dist_buf_.begin(), dist_buf_.end(), -1);
  queue_buf_.clear();
  dist_buf_[source] = 0;
  queue_buf_.push_back(source);
  for (std::size_t qi = 0; qi < queue_buf_.size(); ++qi) {
    int u = queue_buf_[qi];
    std::int64_t next = dist_buf_[u] + 1;
    for (int slot = adj_start_[u]; slot < adj_start_[u + 1]; ++slot) {
      if (removed_[adj_arc_[slot]]) continue;
      int v = adj_head_[slot];
      if (dist_buf_[v] < 0) {
        dist_buf_[v] = next;
        queue_buf_.push_back(v);
      }
    }
  }
  const std::int64_t* caps = cap_.data() + static_cast<std::size_t>(source) * n_;
  for (int v = 0; v < n_; ++v) {
    if (caps[v] < 0) continue;
    if (dist_buf_[v] < 0 || dist_buf_[v] > caps[v]) return false;
  }
  return true;
}

} // namespace dspan::detail
