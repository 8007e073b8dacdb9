#pragma once

#include <cstdint>
#include <vector>

#include "treecode/codes.hpp"

namespace treecode {

/// An edge between vertex *positions* u and v (u == v is a self-loop).
struct GraphEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  CoordLabel label;
};

/// Undirected multigraph; parallel edges and self-loops are allowed. Vertices
/// carry external ids (used in files) and are addressed internally by position.
class Multigraph {
 public:
  Multigraph() = default;
  /// Throws Error on duplicate vertex ids, duplicate edge labels, or edge
  /// endpoints out of range.
  Multigraph(std::vector<std::uint32_t> vertex_ids, std::vector<GraphEdge> edges);

  /// Vertices 0..n-1 with ids equal to positions.
  static Multigraph with_vertices(std::size_t n, std::vector<GraphEdge> edges);

  std::size_t vertex_count() const { return ids_.size(); }
  const std::vector<std::uint32_t>& vertex_ids() const { return ids_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  std::vector<CoordLabel> edge_labels() const;

  /// Adjacency bitmasks of the underlying simple graph (loops and
  /// multiplicities dropped). Requires vertex_count() <= 64.
  std::vector<std::uint64_t> adjacency_masks() const;
  bool adjacent(std::size_t u, std::size_t v) const;
  /// Distinct unordered adjacent pairs (u < v), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> adjacent_pairs() const;
  std::size_t component_count() const;
  bool connected() const { return component_count() <= 1; }

 private:
  std::vector<std::uint32_t> ids_;
  std::vector<GraphEdge> edges_;
};

}  // namespace treecode
