#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "mpg/graph.hpp"

namespace mpg {

/// Header "family k l n m", then "u v label[,label...]" per edge. Unnamed graphs use family "graph" with k = l = 0.
void write_edge_list(std::ostream& out, const PermGraph& g);
void write_edge_list(std::ostream& out, const Graph& g);

struct LoadedGraph {
    std::string family;
    Params params;
    /// Present when the family is st, pc or custom.
    std::optional<PermGraph> perm;
    Graph graph;
};

/// Throws std::invalid_argument on malformed input.
LoadedGraph read_edge_list(std::istream& in);

/// Colour name for DOT output: 1 red, 2 blue, 3 green, 4 hazel, 5 black, then further fixed names.
std::string dot_color(int color);

/// Undirected DOT; edge and vertex colours taken from `tc` when supplied.
void write_dot(std::ostream& out, const Graph& g, const TotalColoring* tc = nullptr, const std::string& name = "G");

/// "V u colour" per vertex, then "E u v colour" per edge.
void write_coloring(std::ostream& out, const Graph& g, const TotalColoring& tc);

}  // namespace mpg
