#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcat/graph.hpp"

namespace gcat {

/// hom: edges go to edges. ega: edges go to edges or collapse onto one
/// vertex. co: edges of the target pull back to edges. iso: bijective, and
/// multiplicities agree in both directions.
enum class MorphismKind { hom, ega, co, iso };

std::string_view to_string(MorphismKind kind);
MorphismKind parse_morphism_kind(std::string_view s);

/// f[i] is the target vertex index of source vertex i.
using VertexMap = std::vector<std::size_t>;

struct MorphismCheck {
  bool ok = true;
  /// First violating source pair in (index, index) order.
  std::optional<VertexPair> violation;
  std::string reason;
  explicit operator bool() const noexcept { return ok; }
};

/// Graphs must agree on directedness. Throws InvalidInput if f is not a
/// total map into V(h).
MorphismCheck check_morphism(const VertexMap& f, const Graph& g, const Graph& h, MorphismKind kind);
MorphismCheck check_morphism(const std::map<VertexId, VertexId>& f, const Graph& g, const Graph& h,
                             MorphismKind kind);

/// Index map from an id map; throws InvalidInput unless it is total on V(g)
/// with images in V(h).
VertexMap vertex_map_from_ids(const std::map<VertexId, VertexId>& f, const Graph& g, const Graph& h);
std::map<VertexId, VertexId> vertex_map_to_ids(const VertexMap& f, const Graph& g, const Graph& h);

/// A vertex map whose kind has been verified at construction.
class Morphism {
 public:
  Morphism(Graph source, Graph target, VertexMap map, MorphismKind kind);

  const Graph& source() const noexcept { return source_; }
  const Graph& target() const noexcept { return target_; }
  const VertexMap& map() const noexcept { return map_; }
  MorphismKind kind() const noexcept { return kind_; }
  const VertexId& image(std::string_view v) const { return target_.vertex(map_[source_.vertex_index(v)]); }

 private:
  Graph source_;
  Graph target_;
  VertexMap map_;
  MorphismKind kind_;
};

inline constexpr std::uint64_t kDefaultMorphismBudget = 100'000'000;
inline constexpr std::uint64_t kDefaultSymmetryBudget = 3'628'800;  // 10!

/// Every map g -> h of the given kind, in lexicographic order of the image
/// vector. Refuses when |V(h)|^|V(g)| exceeds the budget.
std::vector<VertexMap> enumerate_morphisms(const Graph& g, const Graph& h, MorphismKind kind,
                                           std::uint64_t budget = kDefaultMorphismBudget);

/// Every map V(g) -> V(h), no edge condition.
std::vector<VertexMap> enumerate_all_maps(const Graph& g, const Graph& h,
                                          std::uint64_t budget = kDefaultMorphismBudget);

struct AutomorphismGroup {
  std::vector<VertexMap> elements;  // lexicographic; elements[0] is the identity
  std::size_t order() const noexcept { return elements.size(); }
};

/// Refuses when |V(g)|! exceeds the budget (10 vertices by default).
AutomorphismGroup automorphism_group(const Graph& g, std::uint64_t budget = kDefaultSymmetryBudget);

/// An isomorphism g -> h if one exists (the lexicographically first).
std::optional<VertexMap> find_isomorphism(const Graph& g, const Graph& h,
                                          std::uint64_t budget = kDefaultSymmetryBudget);
bool are_isomorphic(const Graph& g, const Graph& h, std::uint64_t budget = kDefaultSymmetryBudget);

/// g ≅ a subgraph of h (not necessarily induced): an injective hom.
std::optional<VertexMap> find_subgraph_embedding(const Graph& g, const Graph& h);

/// {"map": {src: dst, ...}, "kind": "hom|ega|co|iso"}
std::string morphism_to_json(const VertexMap& f, const Graph& g, const Graph& h, MorphismKind kind);
std::pair<VertexMap, MorphismKind> morphism_from_json(std::string_view text, const Graph& g, const Graph& h);

}  // namespace gcat
