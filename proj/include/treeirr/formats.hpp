#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "treeirr/graph.hpp"

namespace treeirr {

/// Malformed input in one of the supported file formats.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Edge-list text: one "u v" pair per line, whitespace-separated; '#' starts
/// a comment, blank lines are ignored. Vertex count is max label + 1.
Graph parse_edgelist(const std::string& text);
std::string write_edgelist(const Graph& g);

/// Standard graph6: 6-bit groups over the upper triangle of the adjacency
/// matrix in column-major order. Input tolerates an optional ">>graph6<<"
/// header; output never emits one.
Graph parse_graph6(const std::string& line);
std::string write_graph6(const Graph& g);

/// One graph per non-empty line.
std::vector<Graph> parse_graph6_lines(const std::string& text);

}  // namespace treeirr
