#pragma once

#include <cstdint>

#include "dspan/digraph.hpp"

namespace dspan {

/// Canonical enumeration of labeled undirected graphs on n vertices: codes
/// 0 .. 2^(n(n-1)/2) - 1, bit b of the code switching edge slot b, slots
/// ordered (0,1), (0,2), ..., (0,n-1), (1,2), ... lexicographically.
/// Supported for n <= 11 (the count fits in 64 bits).
std::uint64_t labeled_graph_count(int n);
UndirectedGraph undirected_from_code(int n, std::uint64_t code);

UndirectedGraph gen_path(int n);
UndirectedGraph gen_cycle(int n); // n >= 3
UndirectedGraph gen_complete(int n);
UndirectedGraph gen_edgeless(int n);

/// Each edge slot (in canonical order) is kept with probability edge_prob.
/// Deterministic per (n, edge_prob, seed).
UndirectedGraph gen_random_graph(int n, double edge_prob, std::uint64_t seed);

/// Each ordered pair (tail, head), tail != head, in ascending order, is kept
/// with probability arc_prob. Deterministic per (n, arc_prob, seed).
DirectedGraph gen_random_digraph(int n, double arc_prob, std::uint64_t seed);

} // namespace dspan
