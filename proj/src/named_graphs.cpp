#include "gcat/named_graphs.hpp"

#include <charconv>

#include "gcat/error.hpp"

namespace gcat {

namespace {

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

std::optional<std::size_t> parse_count(std::string_view s) {
  if (s.empty() || s.size() > 4) return std::nullopt;
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
  EdgeList es;
  for (std::size_t i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return make_graph(n, es);
}

Graph path_graph(std::size_t n) {
  if (n == 0) throw InvalidInput("path needs at least 1 vertex");
  EdgeList es;
  for (std::size_t i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return make_graph(n, es);
}

Graph empty_graph(std::size_t n) { return make_graph(n, EdgeList{}); }

Graph complete_bipartite(std::size_t a, std::size_t b) {
  EdgeList es;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) es.emplace_back(i, a + j);
  return make_graph(a + b, es);
}

Graph star_graph(std::size_t leaves) { return complete_bipartite(1, leaves); }

Graph petersen_graph() {
  EdgeList es;
  for (std::size_t i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
    es.emplace_back(i, i + 5);                // spokes
    es.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return make_graph(10, es);
}

Graph cube_graph() {
  EdgeList es;
  for (std::size_t u = 0; u < 8; ++u)
    for (std::size_t bit = 1; bit < 8; bit <<= 1)
      if ((u & bit) == 0) es.emplace_back(u, u | bit);
  return make_graph(8, es);
}

std::optional<Graph> named_graph(std::string_view name) {
  if (name == "petersen") return petersen_graph();
  if (name == "q3" || name == "cube") return cube_graph();
  if (name == "k33") return complete_bipartite(3, 3);
  if (name.starts_with("star")) {
    if (auto n = parse_count(name.substr(4)); n && *n >= 1) return star_graph(*n);
    return std::nullopt;
  }
  if (name.size() < 2) return std::nullopt;
  std::string_view rest = name.substr(1);
  if (name[0] == 'k') {
    if (auto x = rest.find('x'); x != std::string_view::npos) {
      auto a = parse_count(rest.substr(0, x)), b = parse_count(rest.substr(x + 1));
      if (a && b && *a + *b >= 1) return complete_bipartite(*a, *b);
      return std::nullopt;
    }
    if (auto n = parse_count(rest); n && *n >= 1) return complete_graph(*n);
  }
  if (name[0] == 'c')
    if (auto n = parse_count(rest); n && *n >= 3) return cycle_graph(*n);
  if (name[0] == 'p')
    if (auto n = parse_count(rest); n && *n >= 1) return path_graph(*n);
  if (name[0] == 'e')
    if (auto n = parse_count(rest); n && *n >= 1) return empty_graph(*n);
  return std::nullopt;
}

std::vector<std::string> named_graph_examples() {
  return {"petersen", "q3", "k33", "k5", "k1", "k4", "c4", "c5", "p4", "e3", "star3", "k2x3"};
}

}  // namespace gcat
