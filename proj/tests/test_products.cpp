#include <catch_amalgamated.hpp>

#include "gcat/error.hpp"
#include "gcat/catalog.hpp"
#include "gcat/named_graphs.hpp"
#include "gcat/products.hpp"
#include "oracles.hpp"

using namespace gcat;

namespace {

// Adjacency of (a,b) and (c,d) read off the factor adjacencies.
bool oracle_adjacent(ProductKind k, bool a1, bool eq1, bool a2, bool eq2) {
  switch (k) {
    case ProductKind::cross: return a1 && a2;
    case ProductKind::cartesian: return (eq1 && a2) || (a1 && eq2);
    case ProductKind::strong: return (a1 && a2) || (eq1 && a2) || (a1 && eq2);
    case ProductKind::disjunction: return (a1 || a2) && !(eq1 && eq2);
  }
  return false;
}

std::string pair_id(const Graph& g, std::size_t a, const Graph& h, std::size_t b) {
  return "(" + g.vertex(a) + "," + h.vertex(b) + ")";
}

const ProductKind kKinds[] = {ProductKind::cross, ProductKind::cartesian, ProductKind::strong, ProductKind::disjunction};

}  // namespace

TEST_CASE("products agree with the definitional oracle and have projections") {
  auto pool = catalog(3);
  for (const auto& g : pool)
    for (const auto& h : pool)
      for (ProductKind k : kKinds) {
        auto w = make_product(k, g, h);
        REQUIRE(w.object.order() == g.order() * h.order());
        for (std::size_t a = 0; a < g.order(); ++a)
          for (std::size_t b = 0; b < h.order(); ++b)
            for (std::size_t c = 0; c < g.order(); ++c)
              for (std::size_t d = 0; d < h.order(); ++d) {
                auto x = w.object.vertex_index(pair_id(g, a, h, b));
                auto y = w.object.vertex_index(pair_id(g, c, h, d));
                CHECK(w.object.adjacent(x, y) == oracle_adjacent(k, g.adjacent(a, c), a == c, h.adjacent(b, d), b == d));
              }
        for (std::size_t v = 0; v < w.object.order(); ++v) {
          const auto& id = w.object.vertex(v);
          CHECK(id.rfind("(" + g.vertex(w.proj1[v]) + ",", 0) == 0);
          CHECK(id.ends_with("," + h.vertex(w.proj2[v]) + ")"));
        }
      }
}

TEST_CASE("order and size identities for factors up to 3 vertices") {
  auto pool = catalog(3);
  for (const auto& g : pool)
    for (const auto& h : pool) {
      auto cross = cross_product(g, h).object, cart = cartesian_product(g, h).object, strong = strong_product(g, h).object;
      CHECK(cross.order() == g.order() * h.order());
      CHECK(cross.size() == 2 * g.size() * h.size());
      CHECK(cart.size() == g.order() * h.size() + h.order() * g.size());
      CHECK(strong.size() == cross.size() + cart.size());
      // strong edge set is the disjoint union of the other two
      for (std::size_t x = 0; x < strong.order(); ++x)
        for (std::size_t y = 0; y < strong.order(); ++y) {
          CHECK(strong.adjacent(x, y) == (cross.adjacent(x, y) || cart.adjacent(x, y)));
          CHECK_FALSE((cross.adjacent(x, y) && cart.adjacent(x, y)));
        }
    }
}

TEST_CASE("coproduct and join") {
  auto u = coproduct(path_graph(2), cycle_graph(3));
  CHECK(u.object.order() == 5);
  CHECK(u.object.size() == 4);
  CHECK(u.object.find_vertex("1:0"));
  CHECK(u.object.find_vertex("2:2"));
  auto j = join(path_graph(2), cycle_graph(3));
  CHECK(j.object.size() == 4 + 6);
  CHECK(is_category_morphism(Category::gra, u.inj1, u.left, u.object));
  CHECK(is_category_morphism(Category::gra, u.inj2, u.right, u.object));
}

TEST_CASE("category morphism sets") {
  // Set has every map; Gra only homomorphisms
  CHECK(category_morphisms(Category::set, path_graph(2), path_graph(2)).size() == 4);
  CHECK(category_morphisms(Category::gra, path_graph(2), path_graph(2)).size() == 2);
  CHECK(category_morphisms(Category::egra, path_graph(2), path_graph(2)).size() == 4);
  // comorphisms from an edgeless graph must not create edges
  CHECK(category_morphisms(Category::cgra, empty_graph(2), complete_graph(2)).size() == 2);
}

TEST_CASE("universal property holds where expected on a small pool") {
  auto pool = catalog(2);
  CHECK(verify_product_over_pool(ProductKind::cross, Category::gra, pool).passed);
  CHECK(verify_product_over_pool(ProductKind::strong, Category::egra, pool).passed);
  CHECK(verify_product_over_pool(ProductKind::disjunction, Category::cgra, pool).passed);
  CHECK(verify_coproduct_over_pool(CoproductCandidate::disjoint_union, Category::gra, pool).passed);
  CHECK(verify_coproduct_over_pool(CoproductCandidate::disjoint_union, Category::set, pool).passed);
}

TEST_CASE("negative controls produce counterexamples") {
  auto pool = catalog(2);
  auto cart = verify_product_over_pool(ProductKind::cartesian, Category::gra, pool);
  CHECK_FALSE(cart.passed);
  REQUIRE(cart.counterexample);
  CHECK_FALSE(cart.counterexample->dual);
  auto cross_egra = verify_product_over_pool(ProductKind::cross, Category::egra, pool);
  CHECK_FALSE(cross_egra.passed);
  auto joined = verify_coproduct_over_pool(CoproductCandidate::join, Category::gra, pool);
  CHECK_FALSE(joined.passed);
  REQUIRE(joined.counterexample);
  CHECK(joined.counterexample->dual);
  std::string text = universal_result_to_json(cart);
  CHECK(text.find("counterexample") != std::string::npos);
}

TEST_CASE("directed factors and unknown labels are rejected") {
  Graph d = make_graph(2, {{0, 1}}, true);
  CHECK_THROWS_AS(cross_product(d, d), Unsupported);
  CHECK_THROWS_AS(parse_product_kind("tensorish"), InvalidInput);
  CHECK_THROWS_AS(parse_category("grp"), InvalidInput);
}
