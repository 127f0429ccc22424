#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "kwc/graph.hpp"

namespace kwc {

/// Edge-list document: a header line "n m" followed by m lines "u v".
/// Blank lines are ignored. Duplicate edges are merged.
Graph load_graph(std::string_view text);
Graph load_graph_file(const std::string& path);

/// Writes `g` in the same edge-list format load_graph accepts.
void write_graph(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

}  // namespace kwc
