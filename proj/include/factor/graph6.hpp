#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "factor/graph.hpp"

namespace factor {

// graph6 text encoding for graphs on at most 62 vertices: header byte
// n+63, then the upper triangle read column by column ((0,1), (0,2),
// (1,2), (0,3), ...) packed into 6-bit groups, each offset by 63 and
// zero-padded at the end.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// Plain edge-list format: first line "n m", then m lines "u v".
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
void write_edge_list(std::ostream& out, const Graph& g);

// GraphViz output, one undirected graph per file.
void write_dot(std::ostream& out, const Graph& g, const std::string& name);

// Reads a graph from a file holding either a single graph6 line or an
// edge list (recognized by a leading digit).
Graph read_graph_file(const std::string& path);

// All graph6 lines of a file, blank lines skipped.
std::vector<std::string> read_graph6_lines(const std::string& path);

}  // namespace factor
