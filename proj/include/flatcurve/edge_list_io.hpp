#ifndef FLATCURVE_EDGE_LIST_IO_HPP
#define FLATCURVE_EDGE_LIST_IO_HPP

#include <string>
#include <vector>

#include "flatcurve/graph.hpp"

namespace flatcurve {

// Edge-list text format: one edge per line as two whitespace-separated
// non-negative integers. Lines starting with '#' and blank lines are
// ignored. Anything else is a parse error with line context.
std::vector<Edge> read_edge_list(const std::string& path);

Graph load_graph(const std::string& path, EdgeListStats* stats = nullptr);

// Writes each active-topology edge once as "i j" with i < j, sorted.
void write_edge_list(const Graph& g, const std::string& path);

}  // namespace flatcurve

#endif
