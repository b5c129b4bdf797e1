#include "dspan/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "line_parse.hpp"

namespace dspan {

namespace {

using detail::is_blank;
using detail::is_comment;
using detail::parse_fail;
using detail::parse_long;
using detail::parse_vertex;
using detail::split_ws;

struct Header {
  std::string kind;
  int n = 0;
  long m = 0;
  int line_no = 0;
};

Header parse_header(std::istream& in, const std::string& expected_kind, int& line_no) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line) || is_comment(line)) continue;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0] != "p") {
      parse_fail(line_no, "expected header 'p " + expected_kind + " <n> <m>'");
    }
    if (tokens.size() != 4 || tokens[1] != expected_kind) {
      parse_fail(line_no, "expected header 'p " + expected_kind + " <n> <m>'");
    }
    Header h;
    h.kind = tokens[1];
    long n = parse_long(tokens[2], line_no);
    h.m = parse_long(tokens[3], line_no);
    if (n < 0 || h.m < 0) parse_fail(line_no, "negative count in header");
    h.n = static_cast<int>(n);
    h.line_no = line_no;
    return h;
  }
  throw InputError("missing header 'p " + expected_kind + " <n> <m>'");
}

} // namespace

DirectedGraph parse_directed(std::istream& in) {
  int line_no = 0;
  Header h = parse_header(in, "dg", line_no);
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(h.m));
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line) || is_comment(line)) continue;
    auto tokens = split_ws(line);
    if (tokens[0] != "a" || tokens.size() != 3) {
      parse_fail(line_no, "expected arc line 'a <tail> <head>'");
    }
    if (static_cast<long>(arcs.size()) == h.m) {
      parse_fail(line_no, "more arc lines than the " + std::to_string(h.m) + " declared");
    }
    int tail = parse_vertex(tokens[1], h.n, line_no);
    int head = parse_vertex(tokens[2], h.n, line_no);
    arcs.push_back(Arc{tail, head});
  }
  if (static_cast<long>(arcs.size()) != h.m) {
    throw InputError("header declared " + std::to_string(h.m) + " arcs but found " +
                     std::to_string(arcs.size()));
  }
  try {
    return DirectedGraph(h.n, std::move(arcs));
  } catch (const InputError& e) {
    throw InputError(std::string("invalid graph: ") + e.what());
  }
}

DirectedGraph parse_directed(const std::string& text) {
  std::istringstream in(text);
  return parse_directed(in);
}

UndirectedGraph parse_undirected(std::istream& in) {
  int line_no = 0;
  Header h = parse_header(in, "ug", line_no);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(h.m));
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line) || is_comment(line)) continue;
    auto tokens = split_ws(line);
    if (tokens[0] != "e" || tokens.size() != 3) {
      parse_fail(line_no, "expected edge line 'e <u> <v>'");
    }
    if (static_cast<long>(edges.size()) == h.m) {
      parse_fail(line_no, "more edge lines than the " + std::to_string(h.m) + " declared");
    }
    int u = parse_vertex(tokens[1], h.n, line_no);
    int v = parse_vertex(tokens[2], h.n, line_no);
    edges.push_back(Edge{u, v});
  }
  if (static_cast<long>(edges.size()) != h.m) {
    throw InputError("header declared " + std::to_string(h.m) + " edges but found " +
                     std::to_string(edges.size()));
  }
  try {
    return UndirectedGraph(h.n, std::move(edges));
  } catch (const InputError& e) {
    throw InputError(std::string("invalid graph: ") + e.what());
  }
}

UndirectedGraph parse_undirected(const std::string& text) {
  std::istringstream in(text);
  return parse_undirected(in);
}

std::string format_directed(const DirectedGraph& g) {
  std::ostringstream out;
  out << "p dg " << g.vertex_count() << " " << g.arc_count() << "\n";
  for (const Arc& a : g.arcs()) {
    out << "a " << a.tail + 1 << " " << a.head + 1 << "\n";
  }
  return out.str();
}

std::string format_undirected(const UndirectedGraph& g) {
  std::ostringstream out;
  out << "p ug " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const Edge& e : g.edges()) {
    out << "e " << e.u + 1 << " " << e.v + 1 << "\n";
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open file for writing: " + path);
  out << text;
  if (!out) throw InputError("failed writing file: " + path);
}

} // namespace dspan
