#include "gcat/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gcat/error.hpp"

namespace gcat {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string id_from_json(const nlohmann::json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InvalidInput(std::string(what) + " must be a string or integer id");
}

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

Graph graph_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("graph JSON: ") + e.what());
  }
  try {
    bool directed = j.value("directed", false);
    bool simple = j.value("simple", true);
    std::vector<VertexId> vs;
    for (const auto& v : j.at("vertices")) vs.push_back(id_from_json(v, "vertex"));
    std::vector<EdgeSpec> es;
    if (j.contains("edges"))
      for (const auto& e : j.at("edges"))
        es.push_back({id_from_json(e.at("id"), "edge id"), id_from_json(e.at("tail"), "tail"),
                      id_from_json(e.at("head"), "head")});
    return Graph(std::move(vs), std::move(es), directed, simple);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("graph JSON: ") + e.what());
  }
}

std::string graph_to_json(const Graph& g) {
  ordered_json j;
  j["directed"] = g.directed();
  j["simple"] = g.simple();
  j["vertices"] = ordered_json::array();
  for (const auto& v : g.vertices()) j["vertices"].push_back(v);
  j["edges"] = ordered_json::array();
  for (const auto& e : g.edges()) {
    ordered_json je;
    je["id"] = e.id;
    je["tail"] = g.vertex(e.tail);
    je["head"] = g.vertex(e.head);
    j["edges"].push_back(std::move(je));
  }
  return j.dump(2) + "\n";
}

Graph graph_from_edge_list(std::string_view text) {
  bool directed = false;
  bool multigraph = false;
  std::vector<VertexId> vs;
  std::set<VertexId> seen;
  std::vector<EdgeSpec> es;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  auto note_vertex = [&](const std::string& v) {
    if (seen.insert(v).second) vs.push_back(v);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) {
      std::string comment = line.substr(hash);
      if (comment == "# directed") directed = true;
      if (comment == "# multigraph") multigraph = true;
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() > 2)
      throw InvalidInput("edge list line " + std::to_string(lineno) + ": expected 'tail head'");
    note_vertex(tok[0]);
    if (tok.size() == 2) {
      note_vertex(tok[1]);
      es.push_back({edge_id(es.size()), tok[0], tok[1]});
    }
  }
  return Graph(std::move(vs), std::move(es), directed, !multigraph);
}

std::string graph_to_edge_list(const Graph& g) {
  std::ostringstream out;
  if (g.directed()) out << "# directed\n";
  if (!g.simple()) out << "# multigraph\n";
  std::vector<bool> touched(g.order(), false);
  for (const auto& e : g.edges()) touched[e.tail] = touched[e.head] = true;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (!touched[i]) out << g.vertex(i) << "\n";
  for (const auto& e : g.edges()) out << g.vertex(e.tail) << " " << g.vertex(e.head) << "\n";
  return out.str();
}

std::string graph_to_dot(const Graph& g, std::string_view name, const std::vector<std::string>& labels) {
  std::ostringstream out;
  const char* arrow = g.directed() ? " -> " : " -- ";
  out << (g.directed() ? "digraph " : "graph ") << "\"" << dot_escape(name) << "\" {\n";
  for (std::size_t i = 0; i < g.order(); ++i) {
    out << "  \"" << dot_escape(g.vertex(i)) << "\"";
    if (i < labels.size()) out << " [label=\"" << dot_escape(labels[i]) << "\"]";
    out << ";\n";
  }
  for (const auto& e : g.edges())
    out << "  \"" << dot_escape(g.vertex(e.tail)) << "\"" << arrow << "\""
        << dot_escape(g.vertex(e.head)) << "\";\n";
  out << "}\n";
  return out.str();
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return graph_from_json(text);
  return graph_from_edge_list(text);
}

}  // namespace gcat
