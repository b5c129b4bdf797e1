#pragma once

#include <iosfwd>
#include <string>

#include "dspan/digraph.hpp"

namespace dspan {

/// Line-oriented text format.
///
/// Directed:    header `p dg <n> <m>`, then m lines `a <tail> <head>`.
/// Undirected:  header `p ug <n> <m>`, then m lines `e <u> <v>`.
/// Vertices are 1-indexed on disk, 0-indexed in memory. Lines starting with
/// `c ` (or a bare `c`) are comments; blank lines are ignored. Parse errors
/// carry the offending line number.

DirectedGraph parse_directed(std::istream& in);
DirectedGraph parse_directed(const std::string& text);

UndirectedGraph parse_undirected(std::istream& in);
UndirectedGraph parse_undirected(const std::string& text);

std::string format_directed(const DirectedGraph& g);
std::string format_undirected(const UndirectedGraph& g);

/// Whole-file helpers; read errors and parse errors both raise InputError.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace dspan
