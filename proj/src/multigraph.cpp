#include "treecode/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "treecode/error.hpp"

namespace treecode {

Multigraph::Multigraph(std::vector<std::uint32_t> vertex_ids, std::vector<GraphEdge> edges)
    : ids_(std::move(vertex_ids)), edges_(std::move(edges)) {
  std::set<std::uint32_t> ids(ids_.begin(), ids_.end());
  if (ids.size() != ids_.size()) throw Error("multigraph: duplicate vertex id");
  std::set<CoordLabel> labels;
  for (const auto& e : edges_) {
    if (e.u >= ids_.size() || e.v >= ids_.size())
      throw Error("multigraph: edge " + std::to_string(e.label.id) + " has an unknown endpoint");
    if (!labels.insert(e.label).second)
      throw Error("multigraph: duplicate edge label " + std::to_string(e.label.id));
  }
}

Multigraph Multigraph::with_vertices(std::size_t n, std::vector<GraphEdge> edges) {
  std::vector<std::uint32_t> ids(n);
  std::iota(ids.begin(), ids.end(), 0u);
  return Multigraph(std::move(ids), std::move(edges));
}

std::vector<CoordLabel> Multigraph::edge_labels() const {
  std::vector<CoordLabel> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(e.label);
  return out;
}

std::vector<std::uint64_t> Multigraph::adjacency_masks() const {
  if (ids_.size() > 64) throw Error("multigraph: adjacency masks need at most 64 vertices");
  std::vector<std::uint64_t> adj(ids_.size(), 0);
  for (const auto& e : edges_) {
    if (e.u == e.v) continue;
    adj[e.u] |= std::uint64_t{1} << e.v;
    adj[e.v] |= std::uint64_t{1} << e.u;
  }
  return adj;
}

bool Multigraph::adjacent(std::size_t u, std::size_t v) const {
  if (u == v) return false;
  return std::any_of(edges_.begin(), edges_.end(), [&](const GraphEdge& e) {
    return (e.u == u && e.v == v) || (e.u == v && e.v == u);
  });
}

std::vector<std::pair<std::size_t, std::size_t>> Multigraph::adjacent_pairs() const {
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& e : edges_)
    if (e.u != e.v) pairs.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  return {pairs.begin(), pairs.end()};
}

std::size_t Multigraph::component_count() const {
  std::vector<std::size_t> parent(ids_.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t comps = ids_.size();
  for (const auto& e : edges_) {
    auto a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps;
}

}  // namespace treecode
