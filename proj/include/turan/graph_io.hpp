#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "turan/graph.hpp"

namespace turan::io {

enum class GraphFormat { graph6, edgelist };

GraphFormat parse_format(std::string_view name);
std::string format_name(GraphFormat f);

// graph6: standard printable-ASCII encoding. No header, no newline.
std::string to_graph6(const Graph& g);
// Accepts an optional ">>graph6<<" header; trailing newline/CR ignored.
Graph from_graph6(std::string_view text);

// One "u v" line per edge (u < v, lexicographic), 0-indexed.
std::string to_edgelist(const Graph& g);
// Blank lines ignored. The order is max label + 1 unless `min_order` is
// larger, which keeps trailing isolated vertices.
Graph from_edgelist(std::string_view text, int min_order = 0);

std::string write_graph(const Graph& g, GraphFormat f);

// Detects the format from the first non-blank line: a line of digits and
// whitespace is an edge list, anything else graph6.
GraphFormat detect_format(std::string_view text);
Graph read_graph(std::string_view text, int min_order = 0);
Graph read_graph_file(const std::string& path, int min_order = 0);

// All graphs of a multi-line graph6 stream.
std::vector<Graph> read_graph6_lines(std::string_view text);

}  // namespace turan::io
