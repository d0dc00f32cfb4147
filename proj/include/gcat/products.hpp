#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "gcat/graph.hpp"
#include "gcat/morphism.hpp"

namespace gcat {

enum class ProductKind { cross, cartesian, strong, disjunction };
enum class Category { gra, egra, cgra, set };

std::string_view to_string(ProductKind k);
std::string_view to_string(Category c);
ProductKind parse_product_kind(std::string_view s);
Category parse_category(std::string_view s);

/// A candidate product object on V(G1) x V(G2) (ids "(a,b)") with its
/// coordinate projections.
struct ProductWitness {
  Graph object;
  Graph left;
  Graph right;
  VertexMap proj1;
  VertexMap proj2;
  ProductKind construction = ProductKind::cross;
};

/// (u1,u2) ~ (v1,v2) iff u1v1 ∈ E1 and u2v2 ∈ E2.
ProductWitness cross_product(const Graph& g1, const Graph& g2);
/// (u1 = v1 and u2v2 ∈ E2) or (u2 = v2 and u1v1 ∈ E1).
ProductWitness cartesian_product(const Graph& g1, const Graph& g2);
/// Union of the cross and cartesian edge sets.
ProductWitness strong_product(const Graph& g1, const Graph& g2);
/// Distinct pairs with u1v1 ∈ E1 or u2v2 ∈ E2.
ProductWitness disjunction(const Graph& g1, const Graph& g2);
ProductWitness make_product(ProductKind kind, const Graph& g1, const Graph& g2);

/// A candidate coproduct object with its injections.
struct CoproductWitness {
  Graph object;
  Graph left;
  Graph right;
  VertexMap inj1;
  VertexMap inj2;
};

/// Disjoint union; vertex and edge ids are tagged "1:" / "2:".
CoproductWitness coproduct(const Graph& g1, const Graph& g2);
/// Disjoint union plus every edge between the two sides. Not a coproduct in
/// any of the graph categories; kept as a negative control for the verifier.
CoproductWitness join(const Graph& g1, const Graph& g2);

enum class UniversalFailure { no_mediator, non_unique_mediator, structure_map_not_morphism };
std::string_view to_string(UniversalFailure f);

struct UniversalCounterexample {
  Graph left;
  Graph right;
  Graph test_object;
  VertexMap f1;
  VertexMap f2;
  UniversalFailure reason = UniversalFailure::no_mediator;
  std::size_t mediators = 0;
  /// Legs run G_i -> H (coproduct check) rather than H -> G_i.
  bool dual = false;
};

struct UniversalCheckResult {
  bool passed = true;
  std::size_t tested_objects = 0;
  std::size_t tested_pairs = 0;
  std::optional<UniversalCounterexample> counterexample;
};

/// Morphisms of the category: hom / ega / co, or every map for Set.
std::vector<VertexMap> category_morphisms(Category c, const Graph& g, const Graph& h,
                                          std::uint64_t budget = kDefaultMorphismBudget);
bool is_category_morphism(Category c, const VertexMap& f, const Graph& g, const Graph& h);

/// For every H in the pool and every pair of category morphisms
/// f1: H -> G1, f2: H -> G2, counts the category morphisms f: H -> object
/// (searched over the whole map space) with proj_i ∘ f = f_i, and requires
/// exactly one. Stops at the first counterexample in enumeration order.
UniversalCheckResult verify_product(const ProductWitness& w, Category c, std::span<const Graph> pool,
                                    std::uint64_t budget = kDefaultMorphismBudget);

/// The dual check: for every H and f1: G1 -> H, f2: G2 -> H, exactly one
/// f: object -> H with f ∘ inj_i = f_i.
UniversalCheckResult verify_coproduct(const CoproductWitness& w, Category c, std::span<const Graph> pool,
                                      std::uint64_t budget = kDefaultMorphismBudget);

/// verify_product for every ordered factor pair drawn from the pool, with
/// the same pool as test objects. Counts accumulate across pairs.
UniversalCheckResult verify_product_over_pool(ProductKind kind, Category c, std::span<const Graph> pool,
                                              std::uint64_t budget = kDefaultMorphismBudget);

enum class CoproductCandidate { disjoint_union, join };
UniversalCheckResult verify_coproduct_over_pool(CoproductCandidate candidate, Category c,
                                                std::span<const Graph> pool,
                                                std::uint64_t budget = kDefaultMorphismBudget);

std::string universal_result_to_json(const UniversalCheckResult& r);

}  // namespace gcat
