#include "gcat/catalog.hpp"

#include <charconv>
#include <map>

#include "gcat/canonical.hpp"
#include "gcat/error.hpp"

namespace gcat {

std::vector<Graph> catalog_of_order(std::size_t n) {
  detail::require_budget("catalog", n, kMaxCatalogOrder);
  if (n == 0) return {};
  // every graph on n vertices is some graph on n-1 vertices plus a vertex
  std::vector<Graph> level{make_graph(1, {})};
  for (std::size_t k = 2; k <= n; ++k) {
    std::map<std::vector<std::uint32_t>, Graph> next;
    for (const Graph& g : level) {
      std::vector<std::pair<std::size_t, std::size_t>> base;
      for (const auto& e : g.edges()) base.push_back({e.tail, e.head});
      for (std::size_t mask = 0; mask < (std::size_t{1} << (k - 1)); ++mask) {
        auto es = base;
        for (std::size_t v = 0; v + 1 < k; ++v)
          if (mask >> v & 1) es.push_back({v, k - 1});
        Graph h = make_graph(k, es);
        auto code = canonical_form(h).code;
        if (!next.count(code)) next.emplace(std::move(code), canonical_graph(h));
      }
    }
    level.clear();
    for (auto& [code, g] : next) level.push_back(std::move(g));
  }
  return level;
}

std::vector<Graph> catalog(std::size_t max_order) {
  detail::require_budget("catalog", max_order, kMaxCatalogOrder);
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    auto level = catalog_of_order(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Graph> named_pool(std::string_view name) {
  bool connected_only = false;
  std::string_view digits;
  if (name.starts_with("conn")) {
    connected_only = true;
    digits = name.substr(4);
  } else if (name.starts_with("n")) {
    digits = name.substr(1);
  } else {
    throw InvalidInput("unknown pool '" + std::string(name) + "'");
  }
  std::size_t k = 0;
  auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (digits.empty() || ec != std::errc() || p != digits.data() + digits.size())
    throw InvalidInput("unknown pool '" + std::string(name) + "'");
  auto all = catalog(k);
  if (!connected_only) return all;
  std::vector<Graph> out;
  for (auto& g : all)
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace gcat
