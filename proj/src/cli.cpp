#include "gcat/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcat/canonical.hpp"
#include "gcat/catalog.hpp"
#include "gcat/contraction.hpp"
#include "gcat/error.hpp"
#include "gcat/graph_io.hpp"
#include "gcat/invariants.hpp"
#include "gcat/morphism.hpp"
#include "gcat/named_graphs.hpp"
#include "gcat/orders.hpp"
#include "gcat/products.hpp"
#include "gcat/relational.hpp"
#include "gcat/transform.hpp"

namespace gcat::cli {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A file path, else a built-in name.
Graph resolve_graph(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return load_graph_file(arg);
  if (auto g = named_graph(arg)) return *g;
  throw InvalidInput("'" + arg + "' is neither a readable file nor a built-in graph name");
}

std::vector<long long> parse_integers(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  auto number = [&](std::string_view s) {
    long long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size())
      throw InvalidInput("bad integer '" + std::string(s) + "'");
    return v;
  };
  while (std::getline(ss, item, ',')) {
    auto dash = item.find('-', 1);
    if (dash == std::string::npos) {
      out.push_back(number(item));
      continue;
    }
    long long lo = number(std::string_view(item).substr(0, dash)), hi = number(std::string_view(item).substr(dash + 1));
    if (hi < lo || hi - lo > 100000) throw InvalidInput("bad range '" + item + "'");
    for (long long v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw InvalidInput("empty integer list");
  return out;
}

std::string bool_text(bool b) { return b ? "true\n" : "false\n"; }

struct Options {
  std::string format = "json";
  std::optional<std::uint64_t> budget;
  std::uint64_t seed = 1;

  std::uint64_t budget_or(std::uint64_t fallback) const { return budget.value_or(fallback); }
  void require(std::initializer_list<const char*> allowed) const {
    for (const char* a : allowed)
      if (format == a) return;
    throw InvalidInput("--format " + format + " is not available for this command");
  }
};

std::string emit_graph(const Graph& g, const Options& o, std::string_view name = "G") {
  if (o.format == "dot") return graph_to_dot(g, name);
  if (o.format == "text") return graph_to_edge_list(g);
  return graph_to_json(g);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  if (const char* e = std::getenv("GCAT_FORMAT")) opt.format = e;
  if (const char* e = std::getenv("GCAT_SEED")) opt.seed = std::strtoull(e, nullptr, 10);
  if (const char* e = std::getenv("GCAT_BUDGET")) opt.budget = std::strtoull(e, nullptr, 10);

  CLI::App app{"gcat: graphs, morphisms, products, minors, orders and transformation graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_option("--budget", opt.budget, "Largest search space to attempt")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "Seed for sampled runs");

  std::ostringstream buf;
  std::function<void()> action;

  // graph
  auto* graph = app.add_subcommand("graph", "Show, canonicalise or list graphs");
  graph->require_subcommand(1);
  std::string g1, g2, g3;
  {
    auto* show = graph->add_subcommand("show", "Print a graph");
    show->add_option("graph", g1, "File or built-in name")->required();
    show->callback([&] { action = [&] { buf << emit_graph(resolve_graph(g1), opt); }; });
    auto* canon = graph->add_subcommand("canonical", "Print the canonical relabelling");
    canon->add_option("graph", g1)->required();
    canon->callback([&] { action = [&] { buf << emit_graph(canonical_graph(resolve_graph(g1)), opt); }; });
    auto* names = graph->add_subcommand("names", "List built-in graph names");
    names->callback([&] {
      action = [&] {
        opt.require({"json", "text"});
        if (opt.format == "text")
          for (const auto& n : named_graph_examples()) buf << n << "\n";
        else
          buf << dump(json(named_graph_examples()));
      };
    });
    auto* incidence = graph->add_subcommand("incidence", "Incidence matrix of a directed graph");
    incidence->add_option("graph", g1)->required();
    incidence->callback([&] {
      action = [&] {
        opt.require({"json"});
        auto m = incidence_matrix(resolve_graph(g1));
        json j;
        j["rows"] = m.rows;
        j["cols"] = m.cols;
        json rows = json::array();
        for (std::size_t r = 0; r < m.rows.size(); ++r) {
          json row = json::array();
          for (std::size_t c = 0; c < m.cols.size(); ++c) row.push_back(m.at(r, c));
          rows.push_back(row);
        }
        j["matrix"] = rows;
        buf << dump(j);
      };
    });
  }

  // relsys
  auto* relsys = app.add_subcommand("relsys", "Relational systems");
  relsys->require_subcommand(1);
  {
    auto* info = relsys->add_subcommand("info", "Type symbol and arity of a relational system file");
    info->add_option("file", g1)->required();
    info->callback([&] {
      action = [&] {
        opt.require({"json"});
        auto rs = relational_system_from_json(read_file(g1));
        json j;
        j["carrier_size"] = rs.carrier().size();
        j["type_symbol"] = type_symbol(rs);
        if (rs.relations().empty()) j["arity"] = nullptr;
        else j["arity"] = arity(rs);
        buf << dump(j);
      };
    });
    auto* from = relsys->add_subcommand("from-graph", "A simple graph as a relational system");
    from->add_option("graph", g1)->required();
    from->callback([&] {
      action = [&] {
        opt.require({"json"});
        buf << relational_system_to_json(relational_system_from_graph(resolve_graph(g1)));
      };
    });
  }

  // morphism
  auto* morphism = app.add_subcommand("morphism", "Check or enumerate morphisms");
  morphism->require_subcommand(1);
  std::string kind = "hom", map_file;
  {
    auto* check = morphism->add_subcommand("check", "Check a vertex map");
    check->add_option("--source", g1)->required();
    check->add_option("--target", g2)->required();
    check->add_option("--map", map_file, "Morphism JSON {\"map\":{...},\"kind\":...}")->required();
    check->add_option("--kind", kind, "hom|ega|co|iso (overrides the file)");
    check->callback([&] {
      action = [&] {
        opt.require({"json", "text"});
        Graph g = resolve_graph(g1), h = resolve_graph(g2);
        auto [f, k] = morphism_from_json(read_file(map_file), g, h);
        if (check->count("--kind")) k = parse_morphism_kind(kind);
        auto r = check_morphism(f, g, h, k);
        if (opt.format == "text") {
          buf << bool_text(r.ok);
          return;
        }
        json j;
        j["kind"] = std::string(to_string(k));
        j["ok"] = r.ok;
        if (!r.ok) {
          j["reason"] = r.reason;
          if (r.violation) j["violation"] = {r.violation->first, r.violation->second};
        }
        buf << dump(j);
      };
    });
    auto* en = morphism->add_subcommand("enumerate", "All morphisms of one kind");
    en->add_option("--source", g1)->required();
    en->add_option("--target", g2)->required();
    en->add_option("--kind", kind)->required();
    en->callback([&] {
      action = [&] {
        opt.require({"json", "text"});
        Graph g = resolve_graph(g1), h = resolve_graph(g2);
        auto k = parse_morphism_kind(kind);
        auto maps = enumerate_morphisms(g, h, k, opt.budget_or(kDefaultMorphismBudget));
        if (opt.format == "text") {
          buf << maps.size() << "\n";
          return;
        }
        json j;
        j["kind"] = std::string(to_string(k));
        j["count"] = maps.size();
        j["maps"] = json::array();
        for (const auto& f : maps) {
          json m = json::object();
          for (std::size_t i = 0; i < f.size(); ++i) m[g.vertex(i)] = h.vertex(f[i]);
          j["maps"].push_back(m);
        }
        buf << dump(j);
      };
    });
  }

  auto* aut = app.add_subcommand("aut", "Automorphism group");
  aut->add_option("graph", g1)->required();
  bool list_elements = false;
  aut->add_flag("--elements", list_elements, "List every automorphism");
  aut->callback([&] {
    action = [&] {
      opt.require({"json", "text"});
      Graph g = resolve_graph(g1);
      auto group = automorphism_group(g, opt.budget_or(kDefaultSymmetryBudget));
      if (opt.format == "text") {
        buf << group.order() << "\n";
        return;
      }
      json j;
      j["order"] = group.order();
      if (list_elements) {
        j["elements"] = json::array();
        for (const auto& p : group.elements) {
          json m = json::object();
          for (std::size_t i = 0; i < p.size(); ++i) m[g.vertex(i)] = g.vertex(p[i]);
          j["elements"].push_back(m);
        }
      }
      buf << dump(j);
    };
  });

  auto* iso = app.add_subcommand("iso", "Isomorphism test with a witness");
  iso->add_option("first", g1)->required();
  iso->add_option("second", g2)->required();
  iso->callback([&] {
    action = [&] {
      opt.require({"json", "text"});
      Graph g = resolve_graph(g1), h = resolve_graph(g2);
      auto f = find_isomorphism(g, h, opt.budget_or(kDefaultSymmetryBudget));
      if (opt.format == "text") {
        buf << bool_text(f.has_value());
        return;
      }
      if (f) buf << morphism_to_json(*f, g, h, MorphismKind::iso);
      else buf << dump(json{{"isomorphic", false}});
    };
  });

  auto* invariant = app.add_subcommand("invariant", "Check a labelled quantity for relabelling invariance");
  std::string label;
  std::size_t trials = 200;
  bool exhaustive = false;
  invariant->add_option("graph", g1)->required();
  invariant->add_option("--name", label, "Quantity label")->required();
  invariant->add_option("--trials", trials, "Sampled relabellings");
  invariant->add_flag("--exhaustive", exhaustive, "Try every relabelling");
  invariant->callback([&] {
    action = [&] {
      opt.require({"json"});
      Graph g = resolve_graph(g1);
      auto r = exhaustive ? check_invariance_exhaustive(label, g, opt.budget_or(kDefaultSymmetryBudget))
                          : check_invariance(label, g, trials, opt.seed);
      buf << invariant_report_to_json(r);
    };
  });

  auto* params = app.add_subcommand("params", "Order, size, diameter, girth, vertex connectivity");
  params->add_option("graph", g1)->required();
  params->callback([&] {
    action = [&] {
      opt.require({"json"});
      buf << parameters_to_json(graph_parameters(resolve_graph(g1), opt.budget_or(std::uint64_t{1} << 24)));
    };
  });

  // product
  auto* product = app.add_subcommand("product", "Graph products and their universal property");
  product->require_subcommand(1);
  std::string category = "gra", pool_name = "n3", coproduct_kind;
  bool use_join = false;
  {
    auto* make = product->add_subcommand("make", "Build a product graph");
    make->add_option("--kind", kind, "cross|cartesian|strong|disjunction")->required();
    make->add_option("left", g1)->required();
    make->add_option("right", g2)->required();
    make->callback([&] {
      action = [&] {
        auto w = make_product(parse_product_kind(kind), resolve_graph(g1), resolve_graph(g2));
        buf << emit_graph(w.object, opt, kind);
      };
    });
    auto* co = product->add_subcommand("coproduct", "Build the disjoint union (or the join)");
    co->add_option("left", g1)->required();
    co->add_option("right", g2)->required();
    co->add_flag("--join", use_join, "Join instead of disjoint union");
    co->callback([&] {
      action = [&] {
        Graph a = resolve_graph(g1), b = resolve_graph(g2);
        buf << emit_graph(use_join ? join(a, b).object : coproduct(a, b).object, opt);
      };
    });
    auto* verify = product->add_subcommand("verify", "Check the universal property over a pool");
    verify->add_option("--kind", kind, "cross|cartesian|strong|disjunction");
    verify->add_option("--coproduct", coproduct_kind, "union|join: check a coproduct candidate instead");
    verify->add_option("--category", category, "gra|egra|cgra|set");
    verify->add_option("--pool", pool_name, "n<k> or conn<k>");
    verify->callback([&] {
      action = [&] {
        opt.require({"json", "text"});
        auto pool = named_pool(pool_name);
        auto c = parse_category(category);
        UniversalCheckResult r;
        if (!coproduct_kind.empty()) {
          if (coproduct_kind != "union" && coproduct_kind != "join")
            throw InvalidInput("--coproduct takes union or join");
          r = verify_coproduct_over_pool(
              coproduct_kind == "union" ? CoproductCandidate::disjoint_union : CoproductCandidate::join, c, pool,
              opt.budget_or(kDefaultMorphismBudget));
        } else {
          r = verify_product_over_pool(parse_product_kind(kind), c, pool, opt.budget_or(kDefaultMorphismBudget));
        }
        if (opt.format == "text") buf << (r.passed ? "pass\n" : "fail\n");
        else buf << universal_result_to_json(r);
      };
    });
  }

  // contractions and minors
  auto* contract_cmd = app.add_subcommand("contract", "Contract a graph along a partition");
  std::string partition_file;
  bool faithful = false;
  contract_cmd->add_option("graph", g1)->required();
  contract_cmd->add_option("--partition", partition_file, "Partition JSON {\"blocks\":[[...]]}")->required();
  contract_cmd->add_flag("--faithful", faithful, "Keep one edge per crossing host edge");
  contract_cmd->callback([&] {
    action = [&] {
      Graph g = resolve_graph(g1);
      Partition p = partition_from_json(read_file(partition_file), g);
      buf << emit_graph(faithful ? contract_faithful(p) : contract(p), opt);
    };
  });

  auto* exists = app.add_subcommand("contraction-exists", "Search for a contraction of a graph onto a target");
  exists->add_option("--graph", g1)->required();
  exists->add_option("--target", g2)->required();
  exists->callback([&] {
    action = [&] {
      opt.require({"json", "text"});
      auto p = find_contraction(resolve_graph(g1), resolve_graph(g2), opt.budget_or(kDefaultPartitionBudget));
      if (opt.format == "text") {
        buf << bool_text(p.has_value());
        return;
      }
      json j;
      j["exists"] = p.has_value();
      if (p) j["partition"] = json::parse(partition_to_json(*p));
      buf << dump(j);
    };
  });

  auto* minor = app.add_subcommand("minor", "Minor containment with branch sets");
  minor->add_option("--pattern", g1)->required();
  minor->add_option("--host", g2)->required();
  minor->callback([&] {
    action = [&] {
      opt.require({"json", "text"});
      auto w = find_minor(resolve_graph(g1), resolve_graph(g2), opt.budget_or(kDefaultMinorBudget));
      if (opt.format == "text") buf << bool_text(w.has_value());
      else if (w) buf << minor_witness_to_json(*w);
      else buf << dump(json{{"minor", false}});
    };
  });

  auto* topo = app.add_subcommand("topo-minor", "Topological minor (subdivision) containment");
  topo->add_option("--pattern", g1)->required();
  topo->add_option("--host", g2)->required();
  topo->callback([&] {
    action = [&] {
      opt.require({"json", "text"});
      auto w = find_topological_minor(resolve_graph(g1), resolve_graph(g2), opt.budget_or(kDefaultMinorBudget));
      if (opt.format == "text") buf << bool_text(w.has_value());
      else if (w) buf << subdivision_witness_to_json(*w);
      else buf << dump(json{{"topological_minor", false}});
    };
  });

  auto* planar = app.add_subcommand("planar", "Planarity by Kuratowski subdivision search");
  planar->add_option("graph", g1)->required();
  planar->callback([&] {
    action = [&] {
      opt.require({"json", "text"});
      bool p = is_planar(resolve_graph(g1), opt.budget_or(kDefaultMinorBudget));
      if (opt.format == "text") buf << bool_text(p);
      else buf << dump(json{{"planar", p}});
    };
  });

  auto* audit = app.add_subcommand("minor-audit", "Order axioms of the minor relation over a pool");
  std::string audit_pool = "n4";
  audit->add_option("--pool", audit_pool, "n<k> or conn<k>");
  audit->callback([&] {
    action = [&] {
      opt.require({"json", "text"});
      auto pool = named_pool(audit_pool);
      auto r = minor_order_audit(pool, opt.budget_or(kDefaultMinorBudget));
      if (opt.format == "text") buf << (r.passed() ? "pass\n" : "fail\n");
      else buf << minor_audit_to_json(r);
    };
  });

  auto* lowdeg = app.add_subcommand("low-degree", "Minor versus topological minor for patterns of maximum degree 3");
  std::string hosts_name = "n6", patterns_name = "n4";
  lowdeg->add_option("--patterns", patterns_name, "Pattern pool");
  lowdeg->add_option("--hosts", hosts_name, "Host pool");
  lowdeg->callback([&] {
    action = [&] {
      opt.require({"json", "text"});
      auto patterns = named_pool(patterns_name), hosts = named_pool(hosts_name);
      auto r = minor_equivalence_low_degree(patterns, hosts, opt.budget_or(kDefaultMinorBudget));
      if (opt.format == "text") buf << (r.passed() ? "pass\n" : "fail\n");
      else buf << low_degree_report_to_json(r);
    };
  });

  // orders
  auto* order = app.add_subcommand("order", "Quasi orders, well-founded orders and induction");
  order->require_subcommand(1);
  std::string order_file, divisibility;
  auto load_order = [&]() {
    if (!order_file.empty() && !divisibility.empty()) throw InvalidInput("give either --input or --divisibility");
    if (!divisibility.empty()) return divisibility_order(parse_integers(divisibility));
    if (order_file.empty()) throw InvalidInput("an order needs --input or --divisibility");
    return order_from_json(read_file(order_file));
  };
  auto order_cmd = [&](const char* name, const char* help, std::function<void(const OrderRelation&)> body) {
    auto* sub = order->add_subcommand(name, help);
    sub->add_option("--input", order_file, "Relational-system JSON with one binary relation");
    sub->add_option("--divisibility", divisibility, "Integers such as 2-12 or 2,3,4,6");
    sub->callback([&, body] { action = [&, body] { body(load_order()); }; });
  };
  order_cmd("classify", "Axioms and classification", [&](const OrderRelation& r) {
    opt.require({"json", "text"});
    auto c = classify_relation(r);
    if (opt.format == "text") buf << to_string(c.label) << "\n";
    else buf << classification_to_json(c);
  });
  order_cmd("minimal", "Minimal elements", [&](const OrderRelation& r) {
    opt.require({"json", "text"});
    auto m = minimal_elements(r);
    if (opt.format == "text")
      for (const auto& x : m) buf << x << "\n";
    else buf << dump(json{{"minimal", m}});
  });
  order_cmd("fold", "Induction fold counting the elements strictly below each element",
            [&](const OrderRelation& r) {
              opt.require({"json"});
              auto res = induction_fold<std::vector<VertexId>>(
                  r, [](const VertexId&, const FoldContext<std::vector<VertexId>>& ctx) {
                    std::vector<VertexId> below;
                    for (const auto& [id, value] : ctx) below.push_back(id);
                    return below;
                  });
              json j;
              j["schedule"] = res.schedule;
              j["below"] = json::object();
              for (const auto& x : r.carrier()) j["below"][x] = res.results.at(x);
              buf << dump(j);
            });
  order_cmd("antichain", "Largest antichain and longest chain", [&](const OrderRelation& r) {
    opt.require({"json", "text"});
    auto c = antichains_and_chains(r, opt.budget_or(kDefaultAntichainBudget));
    if (opt.format == "text") buf << c.max_antichain << " " << c.longest_chain << "\n";
    else buf << chain_report_to_json(c);
  });
  order_cmd("graph", "The order as an oriented graph", [&](const OrderRelation& r) {
    buf << emit_graph(order_to_oriented_graph(r), opt);
  });

  // transformation graphs
  auto* transform = app.add_subcommand("transform", "Transformation graphs");
  transform->require_subcommand(1);
  std::string values;
  std::size_t r_size = 1;
  bool literal = false, disjoint = false;
  auto emit_transform = [&](const TransformationGraph& t) {
    if (opt.format == "dot") buf << transformation_to_dot(t);
    else if (opt.format == "text") buf << graph_to_edge_list(t.graph);
    else buf << transformation_to_json(t);
  };
  {
    auto* div = transform->add_subcommand("divisor", "Divisibility graph");
    div->add_option("--values", values, "Integers such as 2-12 or 2,3,4,6")->required();
    div->callback([&] { action = [&] { emit_transform(divisibility_graph(parse_integers(values))); }; });
    auto* tree = transform->add_subcommand("tree", "Tree transformation graph");
    tree->add_option("--input", g1)->required();
    tree->callback([&] {
      action = [&] { emit_transform(tree_transformation_graph(resolve_graph(g1), opt.budget_or(kDefaultTransformBudget))); };
    });
    auto* matching = transform->add_subcommand("matching", "Perfect matching transformation graph");
    matching->add_option("--input", g1)->required();
    matching->callback([&] {
      action = [&] {
        emit_transform(matching_transformation_graph(resolve_graph(g1), opt.budget_or(kDefaultTransformBudget)));
      };
    });
    auto* real = transform->add_subcommand("realization", "Realization graph of a degree sequence");
    real->add_option("--degrees", values, "Comma-separated degrees")->required();
    real->callback([&] {
      action = [&] {
        std::vector<std::size_t> d;
        for (long long x : parse_integers(values)) {
          if (x < 0) throw InvalidInput("degrees must be nonnegative");
          d.push_back(static_cast<std::size_t>(x));
        }
        emit_transform(realization_graph(d, opt.budget_or(kDefaultRealizationBudget)));
      };
    });
    auto* sl = transform->add_subcommand("superline", "Super line graph");
    sl->add_option("--input", g1)->required();
    sl->add_option("--r", r_size, "Subset size");
    sl->add_option("--pattern", g2, "Pattern graph (default p3)");
    sl->add_flag("--literal", literal, "Do not require the copy to straddle both subsets");
    sl->add_flag("--disjoint", disjoint, "Only disjoint subsets may be adjacent");
    sl->callback([&] {
      action = [&] {
        Graph h = g2.empty() ? path_graph(3) : resolve_graph(g2);
        emit_transform(super_line_graph(resolve_graph(g1), r_size, h,
                                        literal ? SuperLineMode::literal : SuperLineMode::cross,
                                        disjoint ? SuperLineOverlap::disjoint_only : SuperLineOverlap::allowed,
                                        opt.budget_or(kDefaultSuperLineBudget)));
      };
    });
    auto* line = transform->add_subcommand("line", "Line graph");
    line->add_option("--input", g1)->required();
    line->callback([&] { action = [&] { buf << emit_graph(line_graph(resolve_graph(g1)), opt, "L"); }; });
  }

  auto* cat = app.add_subcommand("catalog", "Isomorphism classes of small simple graphs");
  std::size_t max_order = 4;
  bool counts_only = false;
  cat->add_option("--max-order", max_order, "Largest order (at most 7)");
  cat->add_flag("--counts", counts_only, "Only the number of classes per order");
  cat->callback([&] {
    action = [&] {
      opt.require({"json", "text"});
      if (max_order > kMaxCatalogOrder) throw ResourceLimit("catalog", max_order, kMaxCatalogOrder);
      json j;
      j["counts"] = json::array();
      j["graphs"] = json::array();
      for (std::size_t n = 1; n <= max_order; ++n) {
        auto level = catalog_of_order(n);
        j["counts"].push_back(level.size());
        if (opt.format == "text") buf << n << " " << level.size() << "\n";
        if (!counts_only)
          for (const auto& g : level) j["graphs"].push_back(json::parse(graph_to_json(g)));
      }
      if (counts_only) j.erase("graphs");
      if (opt.format == "json") buf << dump(j);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    // subcommand help arrives as a ParseError with exit code 0
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  try {
    if (opt.format != "json" && opt.format != "dot" && opt.format != "text")
      throw InvalidInput("unknown format '" + opt.format + "'");
    if (opt.budget && *opt.budget == 0) throw InvalidInput("budget must be positive");
    if (!action) throw InvalidInput("no command given");
    action();
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  out << buf.str();
  return kOk;
}

}  // namespace gcat::cli
