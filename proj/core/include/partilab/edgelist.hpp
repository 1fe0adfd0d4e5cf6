#pragma once

#include "partilab/graph.hpp"

#include <iosfwd>
#include <string>

namespace partilab {

// Text format:
//   p graph <n> <m>
//   e <u> <v>        (1-based ids)
// Lines starting with 'c' are comments. The reader rejects loops and
// duplicate edges; the writer emits edges sorted.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

} // namespace partilab
