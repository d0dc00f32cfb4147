#pragma once

#include <string>
#include <string_view>

#include "gcat/graph.hpp"

namespace gcat {

/// {"directed": bool, "simple": bool, "vertices": [id...],
///  "edges": [{"id": id, "tail": id, "head": id}...]}
/// Numeric ids are accepted on input and written back as strings.
Graph graph_from_json(std::string_view text);
std::string graph_to_json(const Graph& g);

/// Plain edge list: one "tail head" pair per line, a single token declares an
/// isolated vertex, '#' starts a comment. The comment lines "# directed" and
/// "# multigraph" set the corresponding flags. Edge ids are "e0", "e1", ...
/// in line order.
Graph graph_from_edge_list(std::string_view text);
std::string graph_to_edge_list(const Graph& g);

/// DOT export (never parsed back). `labels`, when non-empty, replaces the
/// vertex labels index by index.
std::string graph_to_dot(const Graph& g, std::string_view name = "G",
                         const std::vector<std::string>& labels = {});

/// Reads a file, choosing JSON when the first non-blank byte is '{'.
Graph load_graph_file(const std::string& path);

}  // namespace gcat
