#include "gcat/morphism.hpp"

#include <functional>

#include <json.hpp>

#include "gcat/canonical.hpp"
#include "gcat/error.hpp"

namespace gcat {

std::string_view to_string(MorphismKind kind) {
  switch (kind) {
    case MorphismKind::hom: return "hom";
    case MorphismKind::ega: return "ega";
    case MorphismKind::co: return "co";
    case MorphismKind::iso: return "iso";
  }
  return "?";
}

MorphismKind parse_morphism_kind(std::string_view s) {
  if (s == "hom") return MorphismKind::hom;
  if (s == "ega") return MorphismKind::ega;
  if (s == "co") return MorphismKind::co;
  if (s == "iso") return MorphismKind::iso;
  throw InvalidInput("unknown morphism kind '" + std::string(s) + "'");
}

namespace {

// The defining condition of `kind` restricted to the ordered source pair (x, y).
bool pair_ok(const Graph& g, const Graph& h, std::size_t x, std::size_t y, std::size_t fx, std::size_t fy,
             MorphismKind kind) {
  switch (kind) {
    case MorphismKind::hom:
      return !g.adjacent(x, y) || h.adjacent(fx, fy);
    case MorphismKind::ega:
      return !g.adjacent(x, y) || h.adjacent(fx, fy) || fx == fy;
    case MorphismKind::co:
      return !h.adjacent(fx, fy) || g.adjacent(x, y);
    case MorphismKind::iso:
      return (x == y) == (fx == fy) && g.multiplicity(x, y) == h.multiplicity(fx, fy);
  }
  return false;
}

void require_same_mode(const Graph& g, const Graph& h) {
  if (g.directed() != h.directed())
    throw InvalidInput("morphisms need both graphs directed or both undirected");
}

const char* failure_reason(MorphismKind kind) {
  switch (kind) {
    case MorphismKind::hom: return "edge not mapped to an edge";
    case MorphismKind::ega: return "edge neither mapped to an edge nor collapsed";
    case MorphismKind::co: return "image pair is an edge but the source pair is not";
    case MorphismKind::iso: return "not a bijection preserving edge multiplicities";
  }
  return "";
}

}  // namespace

MorphismCheck check_morphism(const VertexMap& f, const Graph& g, const Graph& h, MorphismKind kind) {
  require_same_mode(g, h);
  if (f.size() != g.order()) throw InvalidInput("vertex map is not total on the source");
  for (std::size_t x : f)
    if (x >= h.order()) throw InvalidInput("vertex map leaves the target vertex set");
  if (kind == MorphismKind::iso && g.order() != h.order())
    return {false, std::nullopt, "orders differ"};
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y)
      if (!pair_ok(g, h, x, y, f[x], f[y], kind))
        return {false, VertexPair{g.vertex(x), g.vertex(y)}, failure_reason(kind)};
  return {};
}

VertexMap vertex_map_from_ids(const std::map<VertexId, VertexId>& f, const Graph& g, const Graph& h) {
  VertexMap out(g.order(), h.order());
  for (const auto& [src, dst] : f) out[g.vertex_index(src)] = h.vertex_index(dst);
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i] == h.order()) throw InvalidInput("vertex map has no image for '" + g.vertex(i) + "'");
  return out;
}

std::map<VertexId, VertexId> vertex_map_to_ids(const VertexMap& f, const Graph& g, const Graph& h) {
  std::map<VertexId, VertexId> out;
  for (std::size_t i = 0; i < f.size(); ++i) out[g.vertex(i)] = h.vertex(f[i]);
  return out;
}

MorphismCheck check_morphism(const std::map<VertexId, VertexId>& f, const Graph& g, const Graph& h,
                             MorphismKind kind) {
  return check_morphism(vertex_map_from_ids(f, g, h), g, h, kind);
}

Morphism::Morphism(Graph source, Graph target, VertexMap map, MorphismKind kind)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)), kind_(kind) {
  auto check = check_morphism(map_, source_, target_, kind_);
  if (!check)
    throw InvalidInput("vertex map is not a " + std::string(to_string(kind_)) + ": " + check.reason);
}

namespace {

// Backtracking over source vertices in index order; each partial map is
// checked on the pairs it completes.
void enumerate(const Graph& g, const Graph& h, const std::function<bool(std::size_t, std::size_t, const VertexMap&)>& accept,
               const std::function<void(const VertexMap&)>& emit) {
  VertexMap f(g.order(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t x) {
    if (x == g.order()) {
      emit(f);
      return;
    }
    for (std::size_t a = 0; a < h.order(); ++a) {
      f[x] = a;
      if (accept(x, a, f)) rec(x + 1);
    }
  };
  rec(0);
}

}  // namespace

std::vector<VertexMap> enumerate_morphisms(const Graph& g, const Graph& h, MorphismKind kind,
                                           std::uint64_t budget) {
  require_same_mode(g, h);
  detail::require_budget("enumerate_morphisms", detail::sat_pow(h.order(), g.order()), budget);
  std::vector<VertexMap> out;
  if (kind == MorphismKind::iso && g.order() != h.order()) return out;
  enumerate(
      g, h,
      [&](std::size_t x, std::size_t a, const VertexMap& f) {
        for (std::size_t y = 0; y <= x; ++y)
          if (!pair_ok(g, h, x, y, a, f[y], kind) || !pair_ok(g, h, y, x, f[y], a, kind)) return false;
        return true;
      },
      [&](const VertexMap& f) { out.push_back(f); });
  return out;
}

std::vector<VertexMap> enumerate_all_maps(const Graph& g, const Graph& h, std::uint64_t budget) {
  detail::require_budget("enumerate_all_maps", detail::sat_pow(h.order(), g.order()), budget);
  std::vector<VertexMap> out;
  enumerate(
      g, h, [](std::size_t, std::size_t, const VertexMap&) { return true; },
      [&](const VertexMap& f) { out.push_back(f); });
  return out;
}

AutomorphismGroup automorphism_group(const Graph& g, std::uint64_t budget) {
  detail::require_budget("automorphism_group", detail::sat_factorial(g.order()), budget);
  AutomorphismGroup group;
  for_each_isomorphism(g, g, [&](std::span<const std::size_t> p) {
    group.elements.emplace_back(p.begin(), p.end());
    return true;
  });
  return group;
}

std::optional<VertexMap> find_isomorphism(const Graph& g, const Graph& h, std::uint64_t budget) {
  if (g.order() != h.order() || g.size() != h.size() || g.directed() != h.directed()) return std::nullopt;
  detail::require_budget("are_isomorphic", detail::sat_factorial(g.order()), budget);
  std::optional<VertexMap> witness;
  for_each_isomorphism(g, h, [&](std::span<const std::size_t> p) {
    witness.emplace(p.begin(), p.end());
    return false;
  });
  return witness;
}

bool are_isomorphic(const Graph& g, const Graph& h, std::uint64_t budget) {
  return find_isomorphism(g, h, budget).has_value();
}

std::optional<VertexMap> find_subgraph_embedding(const Graph& g, const Graph& h) {
  require_same_mode(g, h);
  if (g.order() > h.order() || g.size() > h.size()) return std::nullopt;
  std::optional<VertexMap> found;
  VertexMap f(g.order(), 0);
  std::vector<bool> used(h.order(), false);
  std::function<bool(std::size_t)> rec = [&](std::size_t x) {
    if (x == g.order()) {
      found = f;
      return true;
    }
    for (std::size_t a = 0; a < h.order(); ++a) {
      if (used[a] || h.degree(a) < g.degree(x)) continue;
      bool ok = g.multiplicity(x, x) <= h.multiplicity(a, a);
      for (std::size_t y = 0; ok && y < x; ++y)
        ok = g.multiplicity(x, y) <= h.multiplicity(a, f[y]) && g.multiplicity(y, x) <= h.multiplicity(f[y], a);
      if (!ok) continue;
      f[x] = a;
      used[a] = true;
      if (rec(x + 1)) return true;
      used[a] = false;
    }
    return false;
  };
  rec(0);
  return found;
}

std::string morphism_to_json(const VertexMap& f, const Graph& g, const Graph& h, MorphismKind kind) {
  nlohmann::ordered_json j;
  j["map"] = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < f.size(); ++i) j["map"][g.vertex(i)] = h.vertex(f[i]);
  j["kind"] = std::string(to_string(kind));
  return j.dump(2) + "\n";
}

std::pair<VertexMap, MorphismKind> morphism_from_json(std::string_view text, const Graph& g, const Graph& h) {
  try {
    auto j = nlohmann::json::parse(text);
    std::map<VertexId, VertexId> ids;
    for (const auto& [k, v] : j.at("map").items())
      ids[k] = v.is_string() ? v.get<std::string>() : std::to_string(v.get<long long>());
    return {vertex_map_from_ids(ids, g, h), parse_morphism_kind(j.value("kind", std::string("hom")))};
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("morphism JSON: ") + e.what());
  }
}

}  // namespace gcat
