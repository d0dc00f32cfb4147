#include "gcat/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <tuple>

#include "gcat/error.hpp"

namespace gcat {

namespace {

using Signature = std::vector<std::uint32_t>;

// color, loop multiplicity, then sorted (neighbour colour, out-mult, in-mult) triples
Signature signature(const Graph& g, std::size_t v, const std::vector<std::uint32_t>& color) {
  std::vector<std::array<std::uint32_t, 3>> nb;
  for (std::size_t u = 0; u < g.order(); ++u) {
    if (u == v) continue;
    std::uint32_t out = g.multiplicity(v, u), in = g.multiplicity(u, v);
    if (out != 0 || in != 0) nb.push_back({color[u], out, in});
  }
  std::sort(nb.begin(), nb.end());
  Signature s{color[v], g.multiplicity(v, v)};
  for (const auto& t : nb) s.insert(s.end(), t.begin(), t.end());
  return s;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> refine_colors(std::span<const Graph* const> graphs) {
  std::vector<std::vector<std::uint32_t>> colors;
  for (const Graph* g : graphs) colors.emplace_back(g->order(), 0);
  std::size_t classes = 1;
  for (;;) {
    std::map<Signature, std::uint32_t> rank;
    std::vector<std::vector<Signature>> sigs(graphs.size());
    for (std::size_t k = 0; k < graphs.size(); ++k)
      for (std::size_t v = 0; v < graphs[k]->order(); ++v) {
        sigs[k].push_back(signature(*graphs[k], v, colors[k]));
        rank.emplace(sigs[k].back(), 0);
      }
    std::uint32_t next = 0;
    for (auto& [sig, r] : rank) r = next++;
    for (std::size_t k = 0; k < graphs.size(); ++k)
      for (std::size_t v = 0; v < graphs[k]->order(); ++v) colors[k][v] = rank[sigs[k][v]];
    // refinement only splits classes, so an unchanged count means a fixed point
    if (rank.size() == classes) break;
    classes = rank.size();
  }
  return colors;
}

namespace {

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {
    const Graph* gs[] = {&g};
    color_ = refine_colors(gs)[0];
    // positions are handed out class by class in colour order
    std::vector<std::size_t> by_color(n_);
    std::iota(by_color.begin(), by_color.end(), 0);
    std::stable_sort(by_color.begin(), by_color.end(),
                     [&](std::size_t a, std::size_t b) { return color_[a] < color_[b]; });
    for (std::size_t v : by_color) slot_color_.push_back(color_[v]);
    used_.assign(n_, false);
  }

  CanonicalForm run() {
    search(0);
    CanonicalForm cf;
    cf.code = {static_cast<std::uint32_t>(n_), g_.directed() ? 1u : 0u};
    for (std::uint32_t c : slot_color_) cf.code.push_back(c);
    for (const auto& row : best_rows_) cf.code.insert(cf.code.end(), row.begin(), row.end());
    cf.order = best_order_;
    return cf;
  }

 private:
  Signature row_for(std::size_t pos) const {
    Signature row;
    std::size_t v = order_[pos];
    for (std::size_t q = 0; q <= pos; ++q) row.push_back(g_.multiplicity(v, order_[q]));
    if (g_.directed())
      for (std::size_t q = 0; q < pos; ++q) row.push_back(g_.multiplicity(order_[q], v));
    return row;
  }

  // -1, 0, +1 comparing current rows [0, pos] with the best rows
  int compare_prefix(std::size_t pos) const {
    if (best_rows_.empty()) return -1;
    for (std::size_t q = 0; q <= pos; ++q) {
      if (rows_[q] < best_rows_[q]) return -1;
      if (best_rows_[q] < rows_[q]) return 1;
    }
    return 0;
  }

  void search(std::size_t pos) {
    if (pos == n_) {
      if (compare_prefix(n_ == 0 ? 0 : n_ - 1) < 0 || best_rows_.empty()) {
        best_rows_ = rows_;
        best_order_ = order_;
      }
      return;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (used_[v] || color_[v] != slot_color_[pos]) continue;
      used_[v] = true;
      order_.push_back(v);
      rows_.push_back(row_for(pos));
      if (compare_prefix(pos) <= 0) search(pos + 1);
      rows_.pop_back();
      order_.pop_back();
      used_[v] = false;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::uint32_t> color_;
  std::vector<std::uint32_t> slot_color_;
  std::vector<bool> used_;
  std::vector<std::size_t> order_;
  std::vector<Signature> rows_;
  std::vector<Signature> best_rows_;
  std::vector<std::size_t> best_order_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() == 0) return {{0u, g.directed() ? 1u : 0u}, {}};
  return Canonizer(g).run();
}

Graph canonical_graph(const Graph& g) {
  CanonicalForm cf = canonical_form(g);
  std::vector<std::size_t> pos(g.order());
  for (std::size_t p = 0; p < cf.order.size(); ++p) pos[cf.order[p]] = p;
  std::vector<std::tuple<std::size_t, std::size_t>> pairs;
  for (const auto& e : g.edges()) {
    std::size_t a = pos[e.tail], b = pos[e.head];
    if (!g.directed() && b < a) std::swap(a, b);
    pairs.emplace_back(a, b);
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<VertexId> vs;
  for (std::size_t i = 0; i < g.order(); ++i) vs.push_back(std::to_string(i));
  std::vector<EdgeSpec> es;
  for (const auto& [a, b] : pairs) es.push_back({edge_id(es.size()), vs[a], vs[b]});
  return Graph(std::move(vs), std::move(es), g.directed(), g.simple());
}

void for_each_isomorphism(const Graph& g, const Graph& h,
                          const std::function<bool(std::span<const std::size_t>)>& visit) {
  if (g.order() != h.order() || g.size() != h.size() || g.directed() != h.directed()) return;
  const std::size_t n = g.order();
  const Graph* gs[] = {&g, &h};
  auto colors = refine_colors(gs);
  const auto& cg = colors[0];
  const auto& ch = colors[1];
  {
    auto a = cg, b = ch;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return;
  }
  std::vector<std::size_t> map(n, n);
  std::vector<bool> used(n, false);
  bool keep_going = true;

  auto consistent = [&](std::size_t u, std::size_t x) {
    if (g.multiplicity(u, u) != h.multiplicity(x, x)) return false;
    for (std::size_t w = 0; w < n; ++w) {
      if (map[w] == n || w == u) continue;
      if (g.multiplicity(u, w) != h.multiplicity(x, map[w])) return false;
      if (g.multiplicity(w, u) != h.multiplicity(map[w], x)) return false;
    }
    return true;
  };

  // source vertices are assigned in index order so visits come out lexicographically
  std::function<void(std::size_t)> extend = [&](std::size_t u) {
    if (!keep_going) return;
    if (u == n) {
      keep_going = visit(map);
      return;
    }
    for (std::size_t x = 0; x < n && keep_going; ++x) {
      if (used[x] || cg[u] != ch[x] || !consistent(u, x)) continue;
      map[u] = x;
      used[x] = true;
      extend(u + 1);
      used[x] = false;
      map[u] = n;
    }
  };
  extend(0);
}

}  // namespace gcat
