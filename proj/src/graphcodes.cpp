#include "treecode/graphcodes.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "treecode/error.hpp"

namespace treecode {

LinearCode incidence_code(const Multigraph& g, const Field& field) {
  const auto& edges = g.edges();
  Matrix a(field, g.vertex_count(), edges.size());
  for (std::size_t j = 0; j < edges.size(); ++j) {
    const auto& e = edges[j];
    if (e.u == e.v) continue;
    a.set(std::min(e.u, e.v), j, 1);
    a.set(std::max(e.u, e.v), j, field.neg(1));
  }
  return LinearCode(field, g.edge_labels(), a);
}

Multigraph g_bar(const Multigraph& g) {
  auto ids = g.vertex_ids();
  std::uint32_t x = ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
  std::size_t xpos = ids.size();
  ids.push_back(x);
  std::vector<GraphEdge> edges;
  for (auto [u, v] : g.adjacent_pairs())
    for (int copy = 0; copy < 2; ++copy) edges.push_back({u, v, fresh_label()});
  for (std::size_t v = 0; v < xpos; ++v)
    for (int copy = 0; copy < 2; ++copy) edges.push_back({xpos, v, fresh_label()});
  return Multigraph(ids, edges);
}

Multigraph y_family(std::size_t i) {
  if (i < 1 || i > kMaxYIndex)
    throw Error("y_family: index must lie in 1.." + std::to_string(kMaxYIndex));
  std::vector<GraphEdge> edges;
  std::vector<std::size_t> leaves{1, 2, 3};
  std::size_t n = 4;
  for (auto l : leaves) edges.push_back({0, l, fresh_label()});
  for (std::size_t level = 2; level <= i; ++level) {
    std::vector<std::size_t> next;
    for (auto l : leaves)
      for (int copy = 0; copy < 2; ++copy) {
        edges.push_back({l, n, fresh_label()});
        next.push_back(n++);
      }
    leaves = std::move(next);
  }
  return Multigraph::with_vertices(n, edges);
}

Multigraph path_graph(std::size_t n) {
  std::vector<GraphEdge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, fresh_label()});
  return Multigraph::with_vertices(n, e);
}

Multigraph cycle_graph(std::size_t n) {
  if (n < 3) throw Error("cycle_graph: need at least 3 vertices");
  std::vector<GraphEdge> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back({i, (i + 1) % n, fresh_label()});
  return Multigraph::with_vertices(n, e);
}

Multigraph complete_graph(std::size_t n) {
  std::vector<GraphEdge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.push_back({i, j, fresh_label()});
  return Multigraph::with_vertices(n, e);
}

Multigraph star_graph(std::size_t leaves) {
  std::vector<GraphEdge> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.push_back({0, i, fresh_label()});
  return Multigraph::with_vertices(leaves + 1, e);
}

std::vector<Multigraph> simple_graphs(std::size_t n) {
  if (n > 6) throw Error("simple_graphs: at most 6 vertices");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::vector<std::size_t>> index(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      index[i][j] = index[j][i] = pairs.size();
      pairs.emplace_back(i, j);
    }
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  // Keep a graph when its mask is the smallest among all relabelings.
  std::vector<Multigraph> out;
  for (std::uint32_t m = 0; m < (1u << pairs.size()); ++m) {
    bool smallest = true;
    for (const auto& perm : perms) {
      std::uint32_t image = 0;
      for (std::size_t e = 0; e < pairs.size(); ++e)
        if (m >> e & 1) image |= 1u << index[perm[pairs[e].first]][perm[pairs[e].second]];
      if (image < m) {
        smallest = false;
        break;
      }
    }
    if (!smallest) continue;
    std::vector<GraphEdge> edges;
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if (m >> e & 1) edges.push_back({pairs[e].first, pairs[e].second, fresh_label()});
    out.push_back(Multigraph::with_vertices(n, edges));
  }
  return out;
}

YbarCode ybar_code(std::size_t i, const Field& field, std::size_t max_d_index) {
  if (i < 1 || i > kMaxYIndex) throw Error("ybar_code: index out of range");
  auto g = g_bar(y_family(i));
  auto code = incidence_code(g, field);
  YbarParameters p;
  p.i = i;
  p.n = code.length();
  p.k = code.dim();
  const std::size_t block = (std::size_t(1) << i) - 1;
  p.expected_n = 12 * block + 2;
  p.expected_k = 3 * block + 1;
  if (i <= max_d_index && codeword_count(code, kDefaultEnumerationBound)) p.d = min_weight(code);
  return {g, code, p};
}

}  // namespace treecode
