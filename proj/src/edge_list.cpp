#include "sixcycle/edge_list.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace sixcycle {

namespace {

bool is_blank_or_comment(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

// Reads exactly two unsigned integers and nothing else.
bool parse_pair(const std::string& line, unsigned long long& x, unsigned long long& y) {
  std::istringstream ss(line);
  if (!(ss >> x >> y)) return false;
  std::string rest;
  return !(ss >> rest);
}

}  // namespace

Graph read_edge_list(std::istream& in, DuplicatePolicy duplicates) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!is_blank_or_comment(line)) return true;
    }
    return false;
  };
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError("line " + std::to_string(line_no) + ": " + what);
  };

  if (!next_line()) throw ParseError("missing header line `n m`");
  unsigned long long n = 0, m = 0;
  if (!parse_pair(line, n, m)) throw fail("expected header `n m`");
  if (n > 0xFFFFFFFFull) throw fail("node count too large");

  std::vector<Edge> edges;
  edges.reserve(m);
  for (unsigned long long i = 0; i < m; ++i) {
    if (!next_line()) {
      throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    unsigned long long u = 0, v = 0;
    if (!parse_pair(line, u, v)) throw fail("expected edge `u v`");
    if (u >= n || v >= n) throw fail("node ID out of range");
    edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
  }
  if (next_line()) throw fail("trailing data after " + std::to_string(m) + " edges");

  try {
    return Graph::FromEdges(n, edges, duplicates);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Graph read_edge_list(const std::filesystem::path& path, DuplicatePolicy duplicates) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_edge_list(in, duplicates);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_nodes() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
}

}  // namespace sixcycle
