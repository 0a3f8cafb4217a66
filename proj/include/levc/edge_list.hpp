#pragma once

#include <iosfwd>

#include "levc/graph.hpp"

namespace levc {

// Edge-list text format:
//   * one edge per line: two nonnegative base-10 integers separated by
//     whitespace,
//   * '#' starts a comment to end of line, blank lines are ignored,
//   * an optional first significant line "n <count>" fixes the vertex count;
//     otherwise vertex count = 1 + max id seen.
// Malformed lines, self-loops, negative ids, and ids >= a declared count
// raise ParseError carrying the 1-based line number.
Graph read_edge_list(std::istream& in);

// Emits sorted "min max" pairs, one per line. A "n <count>" header is
// prepended only when the edges alone would not reconstruct vertex_count
// (isolated vertices, or an edgeless graph); read(write(g)) then restores
// g with identical ids.
void write_edge_list(std::ostream& out, const Graph& g);

} // namespace levc
