#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "topoindex/graph.hpp"

namespace topoindex {

// Edge-list text: a header line "n m" followed by m lines "u v" with 0-based
// ids. Blank lines are ignored. Connectivity is not checked here.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

// graph6: header N(n) then the upper triangle of the adjacency matrix in
// column order (x(0,1) x(0,2) x(1,2) x(0,3) ...), six bits per byte, each
// byte offset by 63, zero-padded. Trailing '\n' / '\r' are tolerated.
// Padding bits must be zero so parse and write are mutually inverse.
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

enum class GraphFileFormat { EdgeList, Graph6 };

/// Edge list if the first non-blank line is two integers, graph6 otherwise.
GraphFileFormat sniff_format(std::string_view text);

/// All graphs in a file (one for edge lists, one per line for graph6).
/// Parse failures carry the 1-based line number.
std::vector<Graph> read_graph_file(const std::filesystem::path& path);

}  // namespace topoindex
