#include "treecode/random.hpp"

#include <algorithm>
#include <set>

#include "treecode/error.hpp"

namespace treecode {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

LinearCode random_code_on(const Field& field, std::vector<CoordLabel> labels, std::size_t rows,
                          Rng& rng) {
  Matrix g(field, rows, labels.size());
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < labels.size(); ++c)
      g.set(r, c, Element(uniform(rng, 0, field.order() - 1)));
  return LinearCode(field, std::move(labels), g);
}

LinearCode random_code(const Field& field, std::size_t n, std::size_t rows, Rng& rng) {
  return random_code_on(field, fresh_labels(n), rows, rng);
}

Tree random_tree(std::size_t n, Rng& rng) {
  if (n == 0) throw Error("random_tree: need at least one vertex");
  if (n <= 2) return Tree::path(n);
  std::vector<std::size_t> pruefer(n - 2);
  for (auto& x : pruefer) x = uniform(rng, 0, n - 1);
  std::vector<std::size_t> degree(n, 1);
  for (auto x : pruefer) ++degree[x];
  std::vector<TreeEdge> edges;
  for (auto x : pruefer) {
    std::size_t leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, x);
    --degree[leaf];
    --degree[x];
  }
  std::vector<std::size_t> last;
  for (std::size_t v = 0; v < n; ++v)
    if (degree[v] == 1) last.push_back(v);
  edges.emplace_back(last[0], last[1]);
  return Tree(n, std::move(edges));
}

IndexTreeDecomposition random_decomposition(Tree tree, std::vector<CoordLabel> labels, Rng& rng) {
  std::vector<Vertex> place(labels.size());
  for (auto& v : place) v = uniform(rng, 0, tree.vertex_count() - 1);
  return IndexTreeDecomposition(std::move(tree), std::move(labels), std::move(place));
}

Multigraph random_connected_graph(std::size_t vertices, std::size_t edges, Rng& rng) {
  Tree t = random_tree(vertices, rng);
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (auto [a, b] : t.edges()) pairs.insert({std::min(a, b), std::max(a, b)});
  const std::size_t max_edges = vertices * (vertices - 1) / 2;
  edges = std::clamp(edges, pairs.size(), max_edges);
  while (pairs.size() < edges) {
    std::size_t a = uniform(rng, 0, vertices - 1), b = uniform(rng, 0, vertices - 1);
    if (a != b) pairs.insert({std::min(a, b), std::max(a, b)});
  }
  std::vector<GraphEdge> list;
  auto labels = fresh_labels(pairs.size());
  std::size_t i = 0;
  for (auto [a, b] : pairs) list.push_back({a, b, labels[i++]});
  return Multigraph::with_vertices(vertices, std::move(list));
}

std::vector<CoordLabel> random_subset(const std::vector<CoordLabel>& labels, std::size_t size,
                                      Rng& rng) {
  std::vector<std::size_t> idx(labels.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(std::min(size, idx.size()));
  std::sort(idx.begin(), idx.end());
  std::vector<CoordLabel> out;
  for (auto i : idx) out.push_back(labels[i]);
  return out;
}

}  // namespace treecode
