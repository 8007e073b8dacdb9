#include "treecode/trees.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "treecode/error.hpp"

namespace treecode {

Tree::Tree(std::size_t vertex_count, std::vector<TreeEdge> edges)
    : edges_(std::move(edges)), adjacency_(vertex_count) {
  if (vertex_count == 0) throw Error("tree: at least one vertex is required");
  if (edges_.size() + 1 != vertex_count)
    throw Error("tree: " + std::to_string(vertex_count) + " vertices need " +
                std::to_string(vertex_count - 1) + " edges, got " +
                std::to_string(edges_.size()));
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    auto [u, v] = edges_[e];
    if (u >= vertex_count || v >= vertex_count || u == v)
      throw Error("tree: invalid edge " + std::to_string(e));
    adjacency_[u].push_back(e);
    adjacency_[v].push_back(e);
  }
  std::vector<bool> seen(vertex_count, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (EdgeId e : adjacency_[x]) {
      Vertex y = other_end(e, x);
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached != vertex_count) throw Error("tree: edges do not connect all vertices");
}

Tree Tree::path(std::size_t n) {
  std::vector<TreeEdge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(i - 1, i);
  return Tree(n, std::move(edges));
}

Tree Tree::star(std::size_t leaves) {
  std::vector<TreeEdge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Tree(leaves + 1, std::move(edges));
}

Vertex Tree::other_end(EdgeId e, Vertex v) const {
  const auto& [a, b] = edges_.at(e);
  if (a == v) return b;
  if (b == v) return a;
  throw Error("tree: vertex " + std::to_string(v) + " is not on edge " + std::to_string(e));
}

std::vector<bool> Tree::side(EdgeId e, Vertex v) const {
  other_end(e, v);  // validates
  std::vector<bool> in(vertex_count(), false);
  std::vector<Vertex> stack{v};
  in[v] = true;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (EdgeId f : adjacency_[x]) {
      if (f == e) continue;
      Vertex y = other_end(f, x);
      if (!in[y]) {
        in[y] = true;
        stack.push_back(y);
      }
    }
  }
  return in;
}

std::vector<Vertex> Tree::path_between(Vertex x, Vertex z) const {
  std::vector<Vertex> parent(vertex_count(), vertex_count());
  std::vector<Vertex> stack{x};
  parent[x] = x;
  while (!stack.empty()) {
    Vertex a = stack.back();
    stack.pop_back();
    for (EdgeId f : adjacency_[a]) {
      Vertex b = other_end(f, a);
      if (parent[b] == vertex_count()) {
        parent[b] = a;
        stack.push_back(b);
      }
    }
  }
  std::vector<Vertex> path{z};
  while (path.back() != x) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

bool Tree::is_path() const {
  return std::all_of(adjacency_.begin(), adjacency_.end(),
                     [](const auto& inc) { return inc.size() <= 2; });
}

bool Tree::is_cubic() const {
  return std::all_of(adjacency_.begin(), adjacency_.end(),
                     [](const auto& inc) { return inc.size() <= 1 || inc.size() == 3; });
}

IndexTreeDecomposition::IndexTreeDecomposition(Tree tree, std::vector<CoordLabel> labels,
                                               std::vector<Vertex> placement)
    : tree_(std::move(tree)), labels_(std::move(labels)), placement_(std::move(placement)) {
  if (labels_.size() != placement_.size())
    throw Error("tree decomposition: every label needs exactly one vertex");
  std::set<CoordLabel> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw Error("tree decomposition: duplicate labels");
  for (Vertex v : placement_)
    if (v >= tree_.vertex_count())
      throw Error("tree decomposition: vertex " + std::to_string(v) + " is not in the tree");
}

Vertex IndexTreeDecomposition::vertex_of(CoordLabel label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end())
    throw Error("tree decomposition: unknown label " + std::to_string(label.id));
  return placement_[static_cast<std::size_t>(it - labels_.begin())];
}

std::vector<CoordLabel> IndexTreeDecomposition::labels_at(Vertex v) const {
  std::vector<CoordLabel> out;
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (placement_[i] == v) out.push_back(labels_[i]);
  return out;
}

std::vector<CoordLabel> IndexTreeDecomposition::labels_in(const std::vector<bool>& vertices) const {
  std::vector<CoordLabel> out;
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (vertices.at(placement_[i])) out.push_back(labels_[i]);
  return out;
}

EdgeSplit split_away_from(const IndexTreeDecomposition& td, EdgeId e, Vertex v) {
  if (e >= td.tree().edge_count()) throw Error("split: edge " + std::to_string(e) + " does not exist");
  Vertex inner = td.tree().other_end(e, v);
  EdgeSplit s;
  s.inside_vertices = td.tree().side(e, inner);
  std::vector<bool> rest(s.inside_vertices.size());
  for (std::size_t i = 0; i < rest.size(); ++i) rest[i] = !s.inside_vertices[i];
  s.inside = td.labels_in(s.inside_vertices);
  s.outside = td.labels_in(rest);
  return s;
}

EdgeSplit split(const IndexTreeDecomposition& td, EdgeId e) {
  if (e >= td.tree().edge_count()) throw Error("split: edge " + std::to_string(e) + " does not exist");
  return split_away_from(td, e, td.tree().edge(e).second);
}

std::uint64_t cubic_tree_count(std::size_t leaves) {
  std::uint64_t count = 1;
  for (std::size_t odd = 3; leaves >= 3 && odd <= 2 * leaves - 5; odd += 2) count *= odd;
  return count;
}

namespace {

void insert_leaves(std::size_t next_leaf, std::size_t leaves, std::vector<TreeEdge>& edges,
                   const std::function<void(const std::vector<TreeEdge>&)>& visit) {
  if (next_leaf == leaves) {
    visit(edges);
    return;
  }
  const Vertex internal = leaves + next_leaf - 2;
  const std::size_t existing = edges.size();
  for (std::size_t j = 0; j < existing; ++j) {
    // Subdivide edge j = (a, b) by `internal` and hang the new leaf from it.
    const TreeEdge original = edges[j];
    edges[j] = {original.first, internal};
    edges.emplace_back(internal, original.second);
    edges.emplace_back(next_leaf, internal);
    insert_leaves(next_leaf + 1, leaves, edges, visit);
    edges.pop_back();
    edges.pop_back();
    edges[j] = original;
  }
}

}  // namespace

void for_each_cubic_tree(std::size_t leaves,
                         const std::function<void(const std::vector<TreeEdge>&)>& visit) {
  std::vector<TreeEdge> edges;
  if (leaves <= 1) {
    visit(edges);
    return;
  }
  edges.reserve(2 * leaves);
  edges.emplace_back(0, 1);
  insert_leaves(2, leaves, edges, visit);
}

void for_each_cubic_decomposition(
    std::span<const CoordLabel> labels,
    const std::function<void(const IndexTreeDecomposition&)>& visit, std::size_t cap) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error("cubic decompositions need a nonempty index set");
  if (n > cap)
    throw Error("cubic decomposition enumeration cap exceeded (" + std::to_string(n) + " > " +
                std::to_string(cap) + ")");
  std::vector<CoordLabel> lab(labels.begin(), labels.end());
  std::vector<Vertex> placement(n);
  std::iota(placement.begin(), placement.end(), Vertex{0});
  const std::size_t vertices = n <= 2 ? n : 2 * n - 2;
  for_each_cubic_tree(n, [&](const std::vector<TreeEdge>& edges) {
    visit(IndexTreeDecomposition(Tree(vertices, edges), lab, placement));
  });
}

IndexTreeDecomposition path_decomposition(std::span<const CoordLabel> order) {
  if (order.empty()) throw Error("path decomposition of an empty index set");
  std::vector<Vertex> placement(order.size());
  std::iota(placement.begin(), placement.end(), Vertex{0});
  return IndexTreeDecomposition(Tree::path(order.size()),
                                std::vector<CoordLabel>(order.begin(), order.end()),
                                std::move(placement));
}

void for_each_path_decomposition(
    std::span<const CoordLabel> labels,
    const std::function<void(const IndexTreeDecomposition&)>& visit, std::size_t cap) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error("path decompositions need a nonempty index set");
  if (n > cap)
    throw Error("path decomposition enumeration cap exceeded (" + std::to_string(n) + " > " +
                std::to_string(cap) + ")");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<CoordLabel> order(n);
  do {
    if (n >= 2 && perm.front() > perm.back()) continue;
    for (std::size_t i = 0; i < n; ++i) order[i] = labels[perm[i]];
    visit(path_decomposition(order));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

bool satisfies_t3_paths(const GraphTreeDecomposition& gtd, std::size_t graph_vertices) {
  const auto& t = gtd.tree;
  std::vector<std::vector<bool>> member(t.vertex_count(), std::vector<bool>(graph_vertices, false));
  for (Vertex x = 0; x < t.vertex_count(); ++x)
    for (auto v : gtd.bags[x]) member[x][v] = true;
  for (Vertex x = 0; x < t.vertex_count(); ++x)
    for (Vertex z = x + 1; z < t.vertex_count(); ++z) {
      auto path = t.path_between(x, z);
      for (std::size_t v = 0; v < graph_vertices; ++v) {
        if (!(member[x][v] && member[z][v])) continue;
        for (Vertex y : path)
          if (!member[y][v]) return false;
      }
    }
  return true;
}

bool satisfies_t3_connected(const GraphTreeDecomposition& gtd, std::size_t graph_vertices) {
  const auto& t = gtd.tree;
  for (std::size_t v = 0; v < graph_vertices; ++v) {
    std::vector<bool> holds(t.vertex_count(), false);
    std::size_t count = 0;
    Vertex start = 0;
    for (Vertex x = 0; x < t.vertex_count(); ++x)
      if (std::find(gtd.bags[x].begin(), gtd.bags[x].end(), v) != gtd.bags[x].end()) {
        holds[x] = true;
        start = x;
        ++count;
      }
    if (count <= 1) continue;
    std::vector<bool> seen(t.vertex_count(), false);
    std::vector<Vertex> stack{start};
    seen[start] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      Vertex a = stack.back();
      stack.pop_back();
      for (EdgeId e : t.incident(a)) {
        Vertex b = t.other_end(e, a);
        if (holds[b] && !seen[b]) {
          seen[b] = true;
          ++reached;
          stack.push_back(b);
        }
      }
    }
    if (reached != count) return false;
  }
  return true;
}

DecompositionCheck check_graph_decomposition(const Multigraph& g,
                                             const GraphTreeDecomposition& gtd) {
  DecompositionCheck out;
  const std::size_t n = g.vertex_count();
  if (gtd.bags.size() != gtd.tree.vertex_count())
    throw Error("graph decomposition: one bag per tree vertex is required");
  for (const auto& bag : gtd.bags)
    for (auto v : bag)
      if (v >= n) throw Error("graph decomposition: bag holds an unknown vertex");

  std::vector<bool> covered(n, false);
  for (const auto& bag : gtd.bags)
    for (auto v : bag) covered[v] = true;
  for (std::size_t v = 0; v < n; ++v)
    if (!covered[v]) {
      out.violation = "T1";
      out.witness = "vertex " + std::to_string(g.vertex_ids()[v]) + " is in no bag";
      return out;
    }

  for (auto [u, v] : g.adjacent_pairs()) {
    bool together = std::any_of(gtd.bags.begin(), gtd.bags.end(), [&](const auto& bag) {
      return std::find(bag.begin(), bag.end(), u) != bag.end() &&
             std::find(bag.begin(), bag.end(), v) != bag.end();
    });
    if (!together) {
      out.violation = "T2";
      out.witness = "adjacent pair {" + std::to_string(g.vertex_ids()[u]) + "," +
                    std::to_string(g.vertex_ids()[v]) + "} shares no bag";
      return out;
    }
  }

  if (!satisfies_t3_paths(gtd, n)) {
    out.violation = "T3";
    // Locate a concrete witness for the report.
    const auto& t = gtd.tree;
    for (Vertex x = 0; x < t.vertex_count() && out.witness.empty(); ++x)
      for (Vertex z = x + 1; z < t.vertex_count() && out.witness.empty(); ++z)
        for (auto v : gtd.bags[x]) {
          if (std::find(gtd.bags[z].begin(), gtd.bags[z].end(), v) == gtd.bags[z].end()) continue;
          for (Vertex y : t.path_between(x, z))
            if (std::find(gtd.bags[y].begin(), gtd.bags[y].end(), v) == gtd.bags[y].end()) {
              out.witness = "vertex " + std::to_string(g.vertex_ids()[v]) + " is in bags " +
                            std::to_string(x) + " and " + std::to_string(z) + " but not " +
                            std::to_string(y);
              break;
            }
          if (!out.witness.empty()) break;
        }
    return out;
  }

  out.valid = true;
  std::size_t widest = 0;
  for (const auto& bag : gtd.bags) widest = std::max(widest, bag.size());
  out.width = widest == 0 ? 0 : widest - 1;
  return out;
}

}  // namespace treecode
