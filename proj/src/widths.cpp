#include "treecode/widths.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include "treecode/error.hpp"
#include "treecode/realization.hpp"

namespace treecode {

namespace {

std::uint32_t bit(std::size_t i) { return std::uint32_t(1) << i; }

std::size_t popcount(std::uint32_t m) { return std::size_t(std::popcount(m)); }

// Incremental column-rank over every subset, one depth-first branch per
// lowest element. GF(2) with dim <= 64 packs columns into words.
class RankFiller {
 public:
  RankFiller(const LinearCode& c, std::vector<std::uint8_t>& out)
      : n_(c.length()), k_(c.dim()), q_(c.field().order()), field_(c.field()), out_(out) {
    const Matrix& g = c.generator();
    packed_ = q_ == 2 && k_ <= 64;
    if (packed_) {
      words_.assign(n_, 0);
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t r = 0; r < k_; ++r)
          if (g.at(r, j)) words_[j] |= std::uint64_t(1) << r;
    } else {
      cols_.assign(n_, std::vector<Element>(k_));
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t r = 0; r < k_; ++r) cols_[j][r] = g.at(r, j);
    }
  }

  void branch(std::size_t j) {
    if (packed_) {
      std::vector<std::uint64_t> slot(64, 0);
      step_packed(j, 0, 0, slot);
    } else {
      std::vector<Element> slot(k_ * k_, 0);
      std::vector<bool> present(k_, false);
      std::vector<Element> scratch((n_ + 1) * k_);
      step_general(j, 0, 0, slot, present, scratch, 0);
    }
  }

 private:
  void packed(std::size_t start, std::uint32_t mask, std::size_t rank, std::vector<std::uint64_t>& slot) {
    for (std::size_t j = start; j < n_; ++j) step_packed(j, mask, rank, slot);
  }

  void step_packed(std::size_t j, std::uint32_t mask, std::size_t rank, std::vector<std::uint64_t>& slot) {
    std::uint32_t m = mask | bit(j);
    std::uint64_t v = words_[j];
    while (v) {
      int p = std::countr_zero(v);
      if (!slot[p]) break;
      v ^= slot[p];
    }
    if (v) {
      int p = std::countr_zero(v);
      slot[p] = v;
      out_[m] = std::uint8_t(rank + 1);
      packed(j + 1, m, rank + 1, slot);
      slot[p] = 0;
    } else {
      out_[m] = std::uint8_t(rank);
      packed(j + 1, m, rank, slot);
    }
  }

  void general(std::size_t start, std::uint32_t mask, std::size_t rank, std::vector<Element>& slot,
               std::vector<bool>& present, std::vector<Element>& scratch, std::size_t depth) {
    for (std::size_t j = start; j < n_; ++j)
      step_general(j, mask, rank, slot, present, scratch, depth);
  }

  void step_general(std::size_t j, std::uint32_t mask, std::size_t rank, std::vector<Element>& slot,
                    std::vector<bool>& present, std::vector<Element>& scratch, std::size_t depth) {
    std::uint32_t m = mask | bit(j);
    Element* v = scratch.data() + depth * k_;
    std::copy(cols_[j].begin(), cols_[j].end(), v);
    std::size_t lead = k_;
    for (std::size_t p = 0; p < k_; ++p) {
      if (!v[p]) continue;
      if (!present[p]) {
        lead = p;
        break;
      }
      Element a = v[p];
      const Element* s = slot.data() + p * k_;
      for (std::size_t i = p; i < k_; ++i) v[i] = field_.sub(v[i], field_.mul(a, s[i]));
    }
    if (lead < k_) {
      Element inv = field_.inv(v[lead]);
      Element* s = slot.data() + lead * k_;
      for (std::size_t i = 0; i < k_; ++i) s[i] = field_.mul(inv, v[i]);
      present[lead] = true;
      out_[m] = std::uint8_t(rank + 1);
      general(j + 1, m, rank + 1, slot, present, scratch, depth + 1);
      present[lead] = false;
    } else {
      out_[m] = std::uint8_t(rank);
      general(j + 1, m, rank, slot, present, scratch, depth + 1);
    }
  }

  std::size_t n_, k_;
  unsigned q_;
  Field field_;
  std::vector<std::uint8_t>& out_;
  bool packed_ = false;
  std::vector<std::uint64_t> words_;
  std::vector<std::vector<Element>> cols_;
};

// kappa and sigma of the minimal realization on an arbitrary tree, from a
// rank table. own[v] is the label mask placed on v.
class TreeEvaluator {
 public:
  explicit TreeEvaluator(const SubsetRankTable& t) : t_(t) {}

  std::pair<std::size_t, std::size_t> operator()(std::size_t vertices,
                                                 const std::vector<TreeEdge>& edges,
                                                 const std::vector<std::uint32_t>& own) {
    const std::size_t k = t_.dim();
    if (vertices == 1) return {k, 0};
    adj_.assign(vertices, {});
    for (const auto& [a, b] : edges) {
      adj_[a].push_back(b);
      adj_[b].push_back(a);
    }
    order_.assign(1, 0);
    parent_.assign(vertices, vertices);
    parent_[0] = 0;
    for (std::size_t i = 0; i < order_.size(); ++i)
      for (auto w : adj_[order_[i]])
        if (parent_[w] == vertices) {
          parent_[w] = order_[i];
          order_.push_back(w);
        }
    sub_.assign(own.begin(), own.end());
    for (std::size_t i = order_.size(); i-- > 1;) sub_[parent_[order_[i]]] |= sub_[order_[i]];

    std::size_t sig = 0, kap = 0;
    for (std::size_t i = 1; i < order_.size(); ++i) sig = std::max(sig, t_.state(sub_[order_[i]]));
    for (std::size_t v = 0; v < vertices; ++v) {
      long long d = (long long)k;
      for (auto w : adj_[v]) {
        std::uint32_t away = parent_[w] == v && w != 0 ? sub_[w] : t_.full() & ~sub_[v];
        d -= (long long)t_.cross_section(away);
      }
      if (d < 0) throw InternalError("kappa: negative constraint dimension");
      kap = std::max(kap, std::size_t(d));
    }
    return {kap, sig};
  }

 private:
  const SubsetRankTable& t_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> order_, parent_;
  std::vector<std::uint32_t> sub_;
};

std::vector<std::uint32_t> leaf_masks(std::size_t vertices, std::size_t n) {
  std::vector<std::uint32_t> own(vertices, 0);
  for (std::size_t i = 0; i < n; ++i) own[i] = bit(i);
  return own;
}

std::size_t cubic_vertices(std::size_t n) { return n <= 2 ? n : 2 * n - 2; }

IndexTreeDecomposition leaf_decomposition(const LinearCode& c, std::size_t vertices,
                                          const std::vector<TreeEdge>& edges) {
  std::vector<Vertex> placement(c.length());
  for (std::size_t i = 0; i < placement.size(); ++i) placement[i] = i;
  return IndexTreeDecomposition(Tree(vertices, edges), c.labels(), placement);
}

std::vector<CoordLabel> ordering_from(const std::vector<std::size_t>& positions,
                                      const LinearCode& c) {
  std::vector<CoordLabel> out;
  for (auto p : positions) out.push_back(c.labels()[p]);
  return out;
}

// Trees on m unlabeled nodes, one per isomorphism class, m <= 6.
std::string canonical_rooted(const std::vector<std::vector<std::size_t>>& adj, std::size_t v,
                             std::size_t from) {
  std::vector<std::string> parts;
  for (auto w : adj[v])
    if (w != from) parts.push_back(canonical_rooted(adj, w, v));
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (const auto& p : parts) s += p;
  return s + ")";
}

std::vector<Tree> tree_shapes(std::size_t m) {
  std::vector<Tree> out;
  if (m == 1) return {Tree::single_vertex()};
  if (m == 2) return {Tree::path(2)};
  std::set<std::string> seen;
  std::vector<std::size_t> seq(m - 2, 0);
  while (true) {
    // Prüfer decode.
    std::vector<std::size_t> degree(m, 1);
    for (auto x : seq) ++degree[x];
    std::vector<TreeEdge> edges;
    for (auto x : seq)
      for (std::size_t leaf = 0; leaf < m; ++leaf)
        if (degree[leaf] == 1) {
          edges.emplace_back(leaf, x);
          --degree[leaf];
          --degree[x];
          break;
        }
    std::vector<std::size_t> last;
    for (std::size_t v = 0; v < m; ++v)
      if (degree[v] == 1) last.push_back(v);
    edges.emplace_back(last[0], last[1]);

    std::vector<std::vector<std::size_t>> adj(m);
    for (auto [a, b] : edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::string best;
    for (std::size_t r = 0; r < m; ++r) {
      auto s = canonical_rooted(adj, r, m);
      if (best.empty() || s < best) best = s;
    }
    if (seen.insert(best).second) out.emplace_back(m, edges);

    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == m) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  return out;
}

// Connected node sets of t as bitmasks.
std::vector<std::uint32_t> subtrees(const Tree& t) {
  std::vector<std::uint32_t> out;
  const std::size_t m = t.vertex_count();
  for (std::uint32_t mask = 1; mask < bit(m); ++mask) {
    std::size_t inside = 0;
    for (const auto& [a, b] : t.edges()) inside += (mask & bit(a)) && (mask & bit(b));
    if (inside + 1 == popcount(mask)) out.push_back(mask);
  }
  return out;
}

// Search for beta with max bag size <= bound, every vertex on a subtree of t.
bool assign_subtrees(const std::vector<std::uint32_t>& adj, const std::vector<std::uint32_t>& options,
                     std::size_t bound, std::size_t v, std::vector<std::uint32_t>& chosen,
                     std::vector<std::size_t>& load, std::uint64_t& steps) {
  if (v == adj.size()) return true;
  for (auto s : options) {
    ++steps;
    bool ok = true;
    for (std::size_t u = 0; u < v && ok; ++u)
      if ((adj[v] & bit(u)) && !(chosen[u] & s)) ok = false;
    for (std::size_t x = 0; x < load.size() && ok; ++x)
      if ((s & bit(x)) && load[x] + 1 > bound) ok = false;
    if (!ok) continue;
    for (std::size_t x = 0; x < load.size(); ++x)
      if (s & bit(x)) ++load[x];
    chosen[v] = s;
    if (assign_subtrees(adj, options, bound, v + 1, chosen, load, steps)) return true;
    for (std::size_t x = 0; x < load.size(); ++x)
      if (s & bit(x)) --load[x];
  }
  return false;
}

std::vector<std::uint32_t> simple_adjacency(const Multigraph& g, std::size_t cap) {
  if (g.vertex_count() == 0) throw Error("graph has no vertices");
  if (g.vertex_count() > cap || g.vertex_count() > 31)
    throw Error("graph width: " + std::to_string(g.vertex_count()) + " vertices exceeds the cap of " +
                std::to_string(std::min<std::size_t>(cap, 31)));
  std::vector<std::uint32_t> adj;
  for (auto m : g.adjacency_masks()) adj.push_back(std::uint32_t(m));
  return adj;
}

WidthReport brute_force(const Multigraph& g, std::size_t cap, bool paths_only) {
  if (g.vertex_count() > cap) throw Error("brute-force width: graph exceeds the cap");
  auto adj = simple_adjacency(g, cap);
  const std::size_t n = adj.size();
  std::vector<std::pair<Tree, std::vector<std::uint32_t>>> shapes;
  for (std::size_t m = 1; m <= n; ++m) {
    if (paths_only) {
      Tree p = Tree::path(m);
      shapes.emplace_back(p, subtrees(p));
    } else {
      for (auto& t : tree_shapes(m)) shapes.emplace_back(t, subtrees(t));
    }
  }
  WidthReport rep;
  rep.measure = paths_only ? "graph pathwidth" : "graph treewidth";
  rep.method = "definitional";
  for (std::size_t bound = 1; bound <= n; ++bound)
    for (const auto& [t, options] : shapes) {
      std::vector<std::uint32_t> chosen(n, 0);
      std::vector<std::size_t> load(t.vertex_count(), 0);
      if (!assign_subtrees(adj, options, bound, 0, chosen, load, rep.search_space)) continue;
      GraphTreeDecomposition gtd{t, std::vector<std::vector<std::size_t>>(t.vertex_count())};
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t x = 0; x < t.vertex_count(); ++x)
          if (chosen[v] & bit(x)) gtd.bags[x].push_back(v);
      auto check = check_graph_decomposition(g, gtd);
      if (!check.valid) throw InternalError("brute-force width: invalid decomposition " + check.witness);
      rep.value = check.width;
      rep.graph_decomposition = gtd;
      return rep;
    }
  throw InternalError("brute-force width: no decomposition found");
}

// Shared frontier search over prefix sets: `grow(S, v)` is the width cost of
// moving v into S, and a set is kept when every step so far costs <= k.
struct PrefixSearch {
  std::vector<std::size_t> order;
  std::size_t width = 0;
  std::uint64_t states = 0;
};

PrefixSearch prefix_search(std::size_t n,
                           const std::function<std::size_t(std::uint32_t, std::size_t)>& cost) {
  const std::uint32_t full = n == 32 ? ~0u : bit(n) - 1;
  PrefixSearch out;
  std::vector<std::uint64_t> seen((std::size_t(1) << n) / 64 + 1);
  auto test = [&](std::uint32_t s) { return (seen[s >> 6] >> (s & 63)) & 1; };
  for (std::size_t k = 0;; ++k) {
    std::fill(seen.begin(), seen.end(), 0);
    seen[0] = 1;
    std::vector<std::uint32_t> level{0};
    for (std::size_t depth = 0; depth < n && !level.empty(); ++depth) {
      std::vector<std::uint32_t> next;
      for (auto s : level)
        for (std::size_t v = 0; v < n; ++v) {
          if (s & bit(v)) continue;
          std::uint32_t t = s | bit(v);
          if (test(t) || cost(s, v) > k) continue;
          seen[t >> 6] |= std::uint64_t(1) << (t & 63);
          next.push_back(t);
        }
      out.states += next.size();
      level = std::move(next);
    }
    if (!test(full)) continue;
    out.width = k;
    std::uint32_t t = full;
    while (t) {
      bool found = false;
      for (std::size_t v = 0; v < n && !found; ++v) {
        if (!(t & bit(v))) continue;
        std::uint32_t s = t & ~bit(v);
        if (test(s) && cost(s, v) <= k) {
          out.order.push_back(v);
          t = s;
          found = true;
        }
      }
      if (!found) throw InternalError("prefix search: broken back-trace");
    }
    std::reverse(out.order.begin(), out.order.end());
    return out;
  }
}

// Vertices outside S + v adjacent to v's component in G[S + v].
std::uint32_t elimination_neighbors(const std::vector<std::uint32_t>& adj, std::uint32_t s,
                                    std::size_t v) {
  std::uint32_t comp = bit(v), todo = bit(v), reach = 0;
  while (todo) {
    std::size_t u = std::size_t(std::countr_zero(todo));
    todo &= todo - 1;
    reach |= adj[u];
    std::uint32_t nb = adj[u] & s & ~comp;
    comp |= nb;
    todo |= nb;
  }
  return reach & ~s & ~bit(v);
}

std::uint32_t boundary(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
  std::uint32_t out = 0;
  for (std::uint32_t rest = s; rest; rest &= rest - 1) {
    std::size_t u = std::size_t(std::countr_zero(rest));
    if (adj[u] & ~s) out |= bit(u);
  }
  return out;
}

}  // namespace

SubsetRankTable::SubsetRankTable(const LinearCode& c, std::size_t cap, unsigned threads)
    : n_(c.length()), k_(c.dim()) {
  if (n_ > cap || n_ > 30)
    throw Error("subset rank table: length " + std::to_string(n_) + " exceeds the cap of " +
                std::to_string(std::min<std::size_t>(cap, 30)));
  full_ = bit(n_) - 1;
  p_.assign(std::size_t(1) << n_, 0);
  RankFiller filler(c, p_);
  if (threads <= 1 || n_ < 12) {
    for (std::size_t j = 0; j < n_; ++j) filler.branch(j);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      RankFiller local(c, p_);
      for (std::size_t j; (j = next.fetch_add(1)) < n_;) local.branch(j);
    });
  for (auto& t : pool) t.join();
}

std::size_t kappa(const LinearCode& c, const IndexTreeDecomposition& td) {
  auto d = minimal_constraint_dims(c, td);
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

std::size_t sigma(const LinearCode& c, const IndexTreeDecomposition& td) {
  auto d = minimal_state_dims_by_projections(c, td);
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

CubicWidths code_widths(const LinearCode& c, std::size_t cap) {
  const std::size_t n = c.length();
  if (n == 0) throw Error("code widths: empty index set");
  if (n > cap)
    throw Error("code widths: length " + std::to_string(n) + " exceeds the cubic-enumeration cap of " +
                std::to_string(cap) + "; use the graph theorems for incidence codes");
  SubsetRankTable table(c, cap);
  TreeEvaluator eval(table);
  const std::size_t vertices = cubic_vertices(n);
  auto own = leaf_masks(vertices, n);

  CubicWidths out;
  out.treewidth.measure = "code treewidth";
  out.branchwidth.measure = "code branchwidth";
  out.treewidth.method = out.branchwidth.method = "exhaustive";
  out.branchwidth.note = "minimum over leaf-bijective cubic decompositions only";
  std::vector<TreeEdge> best_k, best_s;
  bool first = true;
  for_each_cubic_tree(n, [&](const std::vector<TreeEdge>& edges) {
    auto [k, s] = eval(vertices, edges, own);
    auto& tally = out.sandwich;
    ++tally.evaluated;
    if (k < s) ++tally.below;
    if (k > 2 * s) {
      ++tally.above;
      if (s == 0 && k == 1) ++tally.above_degenerate;
    }
    if (first || k < out.treewidth.value) {
      out.treewidth.value = k;
      best_k = edges;
    }
    if (first || s < out.branchwidth.value) {
      out.branchwidth.value = s;
      best_s = edges;
    }
    first = false;
  });
  out.treewidth.search_space = out.branchwidth.search_space = out.sandwich.evaluated;
  out.treewidth.decomposition = leaf_decomposition(c, vertices, best_k);
  out.branchwidth.decomposition = leaf_decomposition(c, vertices, best_s);
  return out;
}

WidthReport code_treewidth(const LinearCode& c, std::size_t cap) { return code_widths(c, cap).treewidth; }

WidthReport code_branchwidth(const LinearCode& c, std::size_t cap) {
  return code_widths(c, cap).branchwidth;
}

WidthReport branchwidth_any_internal_degree(const LinearCode& c, std::size_t cap) {
  const std::size_t n = c.length();
  if (n == 0 || n > cap) throw Error("branchwidth search: length outside 1.." + std::to_string(cap));
  SubsetRankTable table(c, cap);
  TreeEvaluator eval(table);
  WidthReport rep;
  rep.measure = "code branchwidth, internal degree >= 3";
  rep.method = "exhaustive";
  rep.note = "experimental: includes non-cubic trees";
  bool first = true;
  const std::size_t vertices = cubic_vertices(n);
  for_each_cubic_tree(n, [&](const std::vector<TreeEdge>& edges) {
    std::vector<std::size_t> internal;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (edges[e].first >= n && edges[e].second >= n) internal.push_back(e);
    for (std::uint32_t pick = 0; pick < bit(internal.size()); ++pick) {
      // Contract the picked internal edges with a small union-find.
      std::vector<std::size_t> root(vertices);
      for (std::size_t v = 0; v < vertices; ++v) root[v] = v;
      std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
        return root[v] == v ? v : root[v] = find(root[v]);
      };
      for (std::size_t i = 0; i < internal.size(); ++i)
        if (pick & bit(i)) root[find(edges[internal[i]].second)] = find(edges[internal[i]].first);
      std::map<std::size_t, std::size_t> index;
      for (std::size_t v = 0; v < vertices; ++v) index.emplace(find(v), index.size());
      std::vector<TreeEdge> kept;
      for (std::size_t e = 0; e < edges.size(); ++e) {
        auto a = index[find(edges[e].first)], b = index[find(edges[e].second)];
        if (a != b) kept.emplace_back(a, b);
      }
      std::vector<std::uint32_t> own(index.size(), 0);
      for (std::size_t i = 0; i < n; ++i) own[index[find(i)]] |= bit(i);
      auto s = eval(index.size(), kept, own).second;
      ++rep.search_space;
      if (first || s < rep.value) {
        rep.value = s;
        std::vector<Vertex> placement;
        for (std::size_t i = 0; i < n; ++i) placement.push_back(index[find(i)]);
        rep.decomposition = IndexTreeDecomposition(Tree(index.size(), kept), c.labels(), placement);
        first = false;
      }
    }
  });
  return rep;
}

TrellisWidths trellis_widths(const LinearCode& c, std::size_t cap, unsigned threads) {
  const std::size_t n = c.length();
  if (n == 0) throw Error("trellis widths: empty index set");
  SubsetRankTable t(c, cap, threads);
  const std::size_t k = c.dim();
  const std::uint32_t full = t.full();
  const std::size_t size = std::size_t(1) << n;
  // f: least max state dim over chains to S; g: least max constraint dim.
  std::vector<std::uint8_t> f(size, 0), g(size, 0);
  auto step_kappa = [&](std::uint32_t s, std::uint32_t prev) {
    return t.projection(s) + t.projection(full & ~prev) - k;
  };
  for (std::uint32_t s = 1; s < size; ++s) {
    std::size_t bf = ~std::size_t(0), bg = ~std::size_t(0);
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      std::uint32_t prev = s & ~(rest & -rest);
      bf = std::min<std::size_t>(bf, f[prev]);
      bg = std::min(bg, std::max<std::size_t>(g[prev], step_kappa(s, prev)));
    }
    f[s] = std::uint8_t(std::max(bf, t.state(s)));
    g[s] = std::uint8_t(bg);
  }
  auto trace = [&](bool for_kappa) {
    std::vector<std::size_t> order;
    std::uint32_t s = full;
    while (s) {
      bool found = false;
      for (std::uint32_t rest = s; rest && !found; rest &= rest - 1) {
        std::uint32_t low = rest & -rest, prev = s & ~low;
        bool ok = for_kappa ? std::max<std::size_t>(g[prev], step_kappa(s, prev)) == g[s]
                            : std::max<std::size_t>(f[prev], t.state(s)) == f[s];
        if (ok) {
          order.push_back(std::size_t(std::countr_zero(low)));
          s = prev;
          found = true;
        }
      }
      if (!found) throw InternalError("trellis widths: broken back-trace");
    }
    std::reverse(order.begin(), order.end());
    return ordering_from(order, c);
  };
  TrellisWidths out;
  out.sigma.measure = "sigma_trellis";
  out.kappa.measure = "kappa_trellis";
  out.sigma.method = out.kappa.method = "subset-dp";
  out.sigma.search_space = out.kappa.search_space = size;
  out.sigma.value = f[full];
  out.kappa.value = g[full];
  out.sigma.ordering = trace(false);
  out.kappa.ordering = trace(true);
  out.sigma.decomposition = path_decomposition(out.sigma.ordering);
  out.kappa.decomposition = path_decomposition(out.kappa.ordering);
  if (sigma(c, *out.sigma.decomposition) != out.sigma.value ||
      kappa(c, *out.kappa.decomposition) != out.kappa.value)
    throw InternalError("trellis widths: witness does not re-evaluate to the reported value");
  return out;
}

TrellisWidths trellis_widths_by_permutation(const LinearCode& c, std::size_t cap) {
  TrellisWidths out;
  out.sigma.measure = "sigma_trellis";
  out.kappa.measure = "kappa_trellis";
  out.sigma.method = out.kappa.method = "exhaustive";
  bool first = true;
  for_each_path_decomposition(
      c.labels(),
      [&](const IndexTreeDecomposition& td) {
        auto s = sigma(c, td), k = kappa(c, td);
        ++out.sigma.search_space;
        if (first || s < out.sigma.value) {
          out.sigma.value = s;
          out.sigma.decomposition = td;
        }
        if (first || k < out.kappa.value) {
          out.kappa.value = k;
          out.kappa.decomposition = td;
        }
        first = false;
      },
      cap);
  out.kappa.search_space = out.sigma.search_space;
  for (auto* rep : {&out.sigma, &out.kappa}) {
    const auto& td = *rep->decomposition;
    rep->ordering.assign(td.labels().size(), CoordLabel{});
    for (std::size_t i = 0; i < td.labels().size(); ++i) rep->ordering[td.placement()[i]] = td.labels()[i];
  }
  return out;
}

GraphTreeDecomposition decomposition_from_elimination(const Multigraph& g,
                                                      const std::vector<std::size_t>& order) {
  const std::size_t n = g.vertex_count();
  if (order.size() != n) throw Error("elimination ordering: wrong length");
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || pos[order[i]] != n) throw Error("elimination ordering: not a permutation");
    pos[order[i]] = i;
  }
  auto masks = g.adjacency_masks();
  std::vector<std::uint64_t> fill(masks.begin(), masks.end());
  std::vector<std::vector<std::size_t>> bags(n);
  std::vector<TreeEdge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t v = order[i];
    std::vector<std::size_t> later;
    for (std::size_t u = 0; u < n; ++u)
      if ((fill[v] >> u & 1) && pos[u] > i) later.push_back(u);
    for (auto a : later)
      for (auto b : later)
        if (a != b) fill[a] |= std::uint64_t(1) << b;
    bags[i] = later;
    bags[i].push_back(v);
    std::sort(bags[i].begin(), bags[i].end());
    if (i + 1 == n) continue;
    std::size_t parent = i + 1;
    if (!later.empty()) {
      parent = n;
      for (auto u : later) parent = std::min(parent, pos[u]);
    }
    edges.emplace_back(i, parent);
  }
  return {Tree(n, edges), bags};
}

WidthReport graph_treewidth(const Multigraph& g, std::size_t cap) {
  auto adj = simple_adjacency(g, cap);
  auto search = prefix_search(adj.size(), [&](std::uint32_t s, std::size_t v) {
    return popcount(elimination_neighbors(adj, s, v));
  });
  WidthReport rep;
  rep.measure = "graph treewidth";
  rep.method = "elimination-dp";
  rep.value = search.width;
  rep.search_space = search.states;
  rep.graph_decomposition = decomposition_from_elimination(g, search.order);
  auto check = check_graph_decomposition(g, *rep.graph_decomposition);
  if (!check.valid || check.width != rep.value)
    throw InternalError("graph treewidth: witness check failed " + check.witness);
  return rep;
}

WidthReport graph_pathwidth(const Multigraph& g, std::size_t cap) {
  auto adj = simple_adjacency(g, cap);
  const std::size_t n = adj.size();
  auto search = prefix_search(n, [&](std::uint32_t s, std::size_t v) {
    return popcount(boundary(adj, s | bit(v)));
  });
  WidthReport rep;
  rep.measure = "graph pathwidth";
  rep.method = "vertex-separation-dp";
  rep.value = search.width;
  rep.search_space = search.states;
  // Bag i holds v_i and the earlier vertices that still have later neighbors.
  GraphTreeDecomposition gtd{Tree::path(n), {}};
  std::uint32_t prefix = 0;
  for (auto v : search.order) {
    std::vector<std::size_t> bag{v};
    for (std::uint32_t rest = boundary(adj, prefix); rest; rest &= rest - 1)
      bag.push_back(std::size_t(std::countr_zero(rest)));
    std::sort(bag.begin(), bag.end());
    gtd.bags.push_back(bag);
    prefix |= bit(v);
  }
  auto check = check_graph_decomposition(g, gtd);
  if (!check.valid || check.width != rep.value)
    throw InternalError("graph pathwidth: witness check failed " + check.witness);
  rep.graph_decomposition = gtd;
  return rep;
}

WidthReport graph_treewidth_brute_force(const Multigraph& g, std::size_t cap) {
  return brute_force(g, cap, false);
}

WidthReport graph_pathwidth_brute_force(const Multigraph& g, std::size_t cap) {
  return brute_force(g, cap, true);
}

}  // namespace treecode
