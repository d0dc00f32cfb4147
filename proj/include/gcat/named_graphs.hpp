#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcat/graph.hpp"

namespace gcat {

Graph cycle_graph(std::size_t n);                            // C_n, n >= 3
Graph path_graph(std::size_t n);                             // P_n on n vertices
Graph empty_graph(std::size_t n);                            // n isolated vertices
Graph complete_bipartite(std::size_t a, std::size_t b);      // K_{a,b}
Graph star_graph(std::size_t leaves);                        // K_{1,leaves}, centre "0"
Graph petersen_graph();
Graph cube_graph();                                          // Q_3

/// Built-in graphs by name: "petersen", "q3", "k33", "k5", and the families
/// "k<n>", "c<n>", "p<n>", "e<n>" (edgeless), "star<n>", "k<a>x<b>".
std::optional<Graph> named_graph(std::string_view name);

/// The fixed names plus one small member of each family.
std::vector<std::string> named_graph_examples();

}  // namespace gcat
