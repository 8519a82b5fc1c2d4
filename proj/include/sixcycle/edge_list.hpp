#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>

#include "sixcycle/graph.hpp"

namespace sixcycle {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text format:
//   # comment lines are skipped anywhere
//   n m
//   u v      (m lines, 0-based, whitespace separated)
//
// Malformed input and graph-validation failures both surface as ParseError.
Graph read_edge_list(std::istream& in, DuplicatePolicy duplicates = DuplicatePolicy::kReject);
Graph read_edge_list(const std::filesystem::path& path,
                     DuplicatePolicy duplicates = DuplicatePolicy::kReject);

void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace sixcycle
