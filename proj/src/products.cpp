#include "gcat/products.hpp"

#include <map>

#include <json.hpp>

#include "gcat/error.hpp"
#include "gcat/graph_io.hpp"

namespace gcat {

std::string_view to_string(ProductKind k) {
  switch (k) {
    case ProductKind::cross: return "cross";
    case ProductKind::cartesian: return "cartesian";
    case ProductKind::strong: return "strong";
    case ProductKind::disjunction: return "disjunction";
  }
  return "?";
}

std::string_view to_string(Category c) {
  switch (c) {
    case Category::gra: return "gra";
    case Category::egra: return "egra";
    case Category::cgra: return "cgra";
    case Category::set: return "set";
  }
  return "?";
}

std::string_view to_string(UniversalFailure f) {
  switch (f) {
    case UniversalFailure::no_mediator: return "no mediating morphism";
    case UniversalFailure::non_unique_mediator: return "non-unique mediating morphism";
    case UniversalFailure::structure_map_not_morphism: return "structure map is not a morphism";
  }
  return "?";
}

ProductKind parse_product_kind(std::string_view s) {
  if (s == "cross") return ProductKind::cross;
  if (s == "cartesian") return ProductKind::cartesian;
  if (s == "strong") return ProductKind::strong;
  if (s == "disjunction") return ProductKind::disjunction;
  throw InvalidInput("unknown product '" + std::string(s) + "'");
}

Category parse_category(std::string_view s) {
  if (s == "gra") return Category::gra;
  if (s == "egra") return Category::egra;
  if (s == "cgra") return Category::cgra;
  if (s == "set") return Category::set;
  throw InvalidInput("unknown category '" + std::string(s) + "'");
}

namespace {

void require_undirected(const Graph& g1, const Graph& g2) {
  if (g1.directed() || g2.directed()) throw Unsupported("products are built for undirected graphs");
}

ProductWitness build_product(ProductKind kind, const Graph& g1, const Graph& g2) {
  require_undirected(g1, g2);
  const std::size_t n1 = g1.order(), n2 = g2.order();
  auto adjacent = [&](std::size_t a1, std::size_t a2, std::size_t b1, std::size_t b2) {
    bool e1 = g1.adjacent(a1, b1), e2 = g2.adjacent(a2, b2);
    bool cross = e1 && e2;
    bool cartesian = (a1 == b1 && e2) || (a2 == b2 && e1);
    switch (kind) {
      case ProductKind::cross: return cross;
      case ProductKind::cartesian: return cartesian;
      case ProductKind::strong: return cross || cartesian;
      case ProductKind::disjunction: return e1 || e2;
    }
    return false;
  };
  std::vector<VertexId> ids;
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = 0; b < n2; ++b) ids.push_back("(" + g1.vertex(a) + "," + g2.vertex(b) + ")");
  std::vector<EdgeSpec> es;
  for (std::size_t p = 0; p < ids.size(); ++p)
    for (std::size_t q = p + 1; q < ids.size(); ++q)
      if (adjacent(p / n2, p % n2, q / n2, q % n2)) es.push_back({edge_id(es.size()), ids[p], ids[q]});
  ProductWitness w{Graph(ids, std::move(es), false, true), g1, g2, {}, {}, kind};
  w.proj1.resize(ids.size());
  w.proj2.resize(ids.size());
  for (std::size_t p = 0; p < ids.size(); ++p) {
    std::size_t i = w.object.vertex_index(ids[p]);
    w.proj1[i] = p / n2;
    w.proj2[i] = p % n2;
  }
  return w;
}

CoproductWitness build_sum(const Graph& g1, const Graph& g2, bool join_sides) {
  require_undirected(g1, g2);
  std::vector<VertexId> ids;
  std::vector<EdgeSpec> es;
  for (const auto& v : g1.vertices()) ids.push_back("1:" + v);
  for (const auto& v : g2.vertices()) ids.push_back("2:" + v);
  for (const auto& e : g1.edges()) es.push_back({"1:" + e.id, "1:" + g1.vertex(e.tail), "1:" + g1.vertex(e.head)});
  for (const auto& e : g2.edges()) es.push_back({"2:" + e.id, "2:" + g2.vertex(e.tail), "2:" + g2.vertex(e.head)});
  if (join_sides) {
    std::size_t k = 0;
    for (const auto& a : g1.vertices())
      for (const auto& b : g2.vertices()) es.push_back({"j" + std::to_string(k++), "1:" + a, "2:" + b});
  }
  CoproductWitness w{Graph(ids, std::move(es), false, g1.simple() && g2.simple()), g1, g2, {}, {}};
  for (const auto& v : g1.vertices()) w.inj1.push_back(w.object.vertex_index("1:" + v));
  for (const auto& v : g2.vertices()) w.inj2.push_back(w.object.vertex_index("2:" + v));
  return w;
}

VertexMap compose(const VertexMap& outer, const VertexMap& inner) {
  VertexMap out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

}  // namespace

ProductWitness cross_product(const Graph& g1, const Graph& g2) { return build_product(ProductKind::cross, g1, g2); }
ProductWitness cartesian_product(const Graph& g1, const Graph& g2) {
  return build_product(ProductKind::cartesian, g1, g2);
}
ProductWitness strong_product(const Graph& g1, const Graph& g2) { return build_product(ProductKind::strong, g1, g2); }
ProductWitness disjunction(const Graph& g1, const Graph& g2) {
  return build_product(ProductKind::disjunction, g1, g2);
}
ProductWitness make_product(ProductKind kind, const Graph& g1, const Graph& g2) {
  return build_product(kind, g1, g2);
}

CoproductWitness coproduct(const Graph& g1, const Graph& g2) { return build_sum(g1, g2, false); }
CoproductWitness join(const Graph& g1, const Graph& g2) { return build_sum(g1, g2, true); }

std::vector<VertexMap> category_morphisms(Category c, const Graph& g, const Graph& h, std::uint64_t budget) {
  switch (c) {
    case Category::gra: return enumerate_morphisms(g, h, MorphismKind::hom, budget);
    case Category::egra: return enumerate_morphisms(g, h, MorphismKind::ega, budget);
    case Category::cgra: return enumerate_morphisms(g, h, MorphismKind::co, budget);
    case Category::set: return enumerate_all_maps(g, h, budget);
  }
  return {};
}

bool is_category_morphism(Category c, const VertexMap& f, const Graph& g, const Graph& h) {
  switch (c) {
    case Category::gra: return check_morphism(f, g, h, MorphismKind::hom).ok;
    case Category::egra: return check_morphism(f, g, h, MorphismKind::ega).ok;
    case Category::cgra: return check_morphism(f, g, h, MorphismKind::co).ok;
    case Category::set: return f.size() == g.order();
  }
  return false;
}

UniversalCheckResult verify_product(const ProductWitness& w, Category c, std::span<const Graph> pool,
                                    std::uint64_t budget) {
  UniversalCheckResult r;
  if (!is_category_morphism(c, w.proj1, w.object, w.left) || !is_category_morphism(c, w.proj2, w.object, w.right)) {
    r.passed = false;
    r.counterexample =
        UniversalCounterexample{w.left, w.right, w.object, w.proj1, w.proj2, UniversalFailure::structure_map_not_morphism};
    return r;
  }
  for (const Graph& h : pool) {
    ++r.tested_objects;
    // every mediator candidate, keyed by its two composites
    std::map<std::pair<VertexMap, VertexMap>, std::size_t> mediators;
    for (const auto& f : category_morphisms(c, h, w.object, budget))
      ++mediators[{compose(w.proj1, f), compose(w.proj2, f)}];
    auto legs1 = category_morphisms(c, h, w.left, budget);
    auto legs2 = category_morphisms(c, h, w.right, budget);
    for (const auto& f1 : legs1)
      for (const auto& f2 : legs2) {
        ++r.tested_pairs;
        auto it = mediators.find({f1, f2});
        std::size_t count = it == mediators.end() ? 0 : it->second;
        if (count != 1) {
          r.passed = false;
          r.counterexample = UniversalCounterexample{
              w.left, w.right, h, f1, f2,
              count == 0 ? UniversalFailure::no_mediator : UniversalFailure::non_unique_mediator, count};
          return r;
        }
      }
  }
  return r;
}

UniversalCheckResult verify_coproduct(const CoproductWitness& w, Category c, std::span<const Graph> pool,
                                      std::uint64_t budget) {
  UniversalCheckResult r;
  if (!is_category_morphism(c, w.inj1, w.left, w.object) || !is_category_morphism(c, w.inj2, w.right, w.object)) {
    r.passed = false;
    r.counterexample =
        UniversalCounterexample{w.left, w.right, w.object, w.inj1, w.inj2, UniversalFailure::structure_map_not_morphism, 0, true};
    return r;
  }
  for (const Graph& h : pool) {
    ++r.tested_objects;
    std::map<std::pair<VertexMap, VertexMap>, std::size_t> mediators;
    for (const auto& f : category_morphisms(c, w.object, h, budget))
      ++mediators[{compose(f, w.inj1), compose(f, w.inj2)}];
    auto legs1 = category_morphisms(c, w.left, h, budget);
    auto legs2 = category_morphisms(c, w.right, h, budget);
    for (const auto& f1 : legs1)
      for (const auto& f2 : legs2) {
        ++r.tested_pairs;
        auto it = mediators.find({f1, f2});
        std::size_t count = it == mediators.end() ? 0 : it->second;
        if (count != 1) {
          r.passed = false;
          r.counterexample = UniversalCounterexample{
              w.left, w.right, h, f1, f2,
              count == 0 ? UniversalFailure::no_mediator : UniversalFailure::non_unique_mediator, count, true};
          return r;
        }
      }
  }
  return r;
}

namespace {

void accumulate(UniversalCheckResult& total, UniversalCheckResult part) {
  total.tested_objects += part.tested_objects;
  total.tested_pairs += part.tested_pairs;
  if (!part.passed) {
    total.passed = false;
    total.counterexample = std::move(part.counterexample);
  }
}

}  // namespace

UniversalCheckResult verify_product_over_pool(ProductKind kind, Category c, std::span<const Graph> pool,
                                              std::uint64_t budget) {
  UniversalCheckResult total;
  for (const Graph& g1 : pool)
    for (const Graph& g2 : pool) {
      accumulate(total, verify_product(make_product(kind, g1, g2), c, pool, budget));
      if (!total.passed) return total;
    }
  return total;
}

UniversalCheckResult verify_coproduct_over_pool(CoproductCandidate candidate, Category c, std::span<const Graph> pool,
                                                std::uint64_t budget) {
  UniversalCheckResult total;
  for (const Graph& g1 : pool)
    for (const Graph& g2 : pool) {
      auto w = candidate == CoproductCandidate::join ? join(g1, g2) : coproduct(g1, g2);
      accumulate(total, verify_coproduct(w, c, pool, budget));
      if (!total.passed) return total;
    }
  return total;
}

std::string universal_result_to_json(const UniversalCheckResult& r) {
  using json = nlohmann::ordered_json;
  json j;
  j["passed"] = r.passed;
  j["tested_objects"] = r.tested_objects;
  j["tested_pairs"] = r.tested_pairs;
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    auto map_json = [](const VertexMap& f, const Graph& src, const Graph& dst) {
      json m = json::object();
      for (std::size_t i = 0; i < f.size(); ++i) m[src.vertex(i)] = dst.vertex(f[i]);
      return m;
    };
    json jc;
    jc["reason"] = std::string(to_string(c.reason));
    jc["mediators"] = c.mediators;
    jc["left"] = json::parse(graph_to_json(c.left));
    jc["right"] = json::parse(graph_to_json(c.right));
    jc["test_object"] = json::parse(graph_to_json(c.test_object));
    if (c.reason == UniversalFailure::structure_map_not_morphism) {
      jc["map1"] = c.f1;
      jc["map2"] = c.f2;
    } else if (c.dual) {
      jc["f1"] = map_json(c.f1, c.left, c.test_object);
      jc["f2"] = map_json(c.f2, c.right, c.test_object);
    } else {
      jc["f1"] = map_json(c.f1, c.test_object, c.left);
      jc["f2"] = map_json(c.f2, c.test_object, c.right);
    }
    j["counterexample"] = std::move(jc);
  }
  return j.dump(2) + "\n";
}

}  // namespace gcat
