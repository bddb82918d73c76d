#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "fracfactor/graph.hpp"

namespace fracfactor {

// Edge-list text format:
//
//   # optional comment lines anywhere
//   n m
//   u v        (m lines, 0 <= u < v < n)
//
// Loops, duplicate edges, out-of-range indices, u >= v and a wrong edge count
// are rejected with an InputError naming the offending line.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
std::string format_edge_list(const Graph& g);

}  // namespace fracfactor
