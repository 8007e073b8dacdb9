#pragma once

// Trees, tree decompositions (T, omega) of coordinate index sets, their
// enumeration, and tree decompositions (T, beta) of graphs.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "treecode/codes.hpp"
#include "treecode/multigraph.hpp"

namespace treecode {

using Vertex = std::size_t;
using EdgeId = std::size_t;
using TreeEdge = std::pair<Vertex, Vertex>;

/// A tree on vertices 0..n-1. Edge ids are positions in edges().
class Tree {
 public:
  /// Throws Error unless the edges form a spanning tree on `vertex_count` >= 1 vertices.
  Tree(std::size_t vertex_count, std::vector<TreeEdge> edges);

  static Tree single_vertex() { return Tree(1, {}); }
  /// The path 0 - 1 - ... - (n-1).
  static Tree path(std::size_t n);
  /// Vertex 0 joined to leaves 1..leaves.
  static Tree star(std::size_t leaves);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<TreeEdge>& edges() const { return edges_; }
  const TreeEdge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<EdgeId>& incident(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return incident(v).size(); }
  bool is_leaf(Vertex v) const { return degree(v) == 1; }
  Vertex other_end(EdgeId e, Vertex v) const;

  /// Membership mask of the component of T - e that contains `v` (an endpoint of e).
  std::vector<bool> side(EdgeId e, Vertex v) const;
  /// Vertices on the unique x..z path, inclusive.
  std::vector<Vertex> path_between(Vertex x, Vertex z) const;

  bool is_path() const;
  /// Every internal node has degree 3.
  bool is_cubic() const;

 private:
  std::vector<TreeEdge> edges_;
  std::vector<std::vector<EdgeId>> adjacency_;
};

/// (T, omega): omega places each coordinate label on a tree vertex.
class IndexTreeDecomposition {
 public:
  /// placement[i] is the vertex of labels[i]. Throws Error on duplicate
  /// labels or vertices out of range.
  IndexTreeDecomposition(Tree tree, std::vector<CoordLabel> labels,
                         std::vector<Vertex> placement);

  const Tree& tree() const { return tree_; }
  const std::vector<CoordLabel>& labels() const { return labels_; }
  const std::vector<Vertex>& placement() const { return placement_; }
  Vertex vertex_of(CoordLabel label) const;
  /// omega^{-1}(v), in labels() order.
  std::vector<CoordLabel> labels_at(Vertex v) const;
  /// omega^{-1}(S) for a vertex membership mask S, in labels() order.
  std::vector<CoordLabel> labels_in(const std::vector<bool>& vertices) const;

 private:
  Tree tree_;
  std::vector<CoordLabel> labels_;
  std::vector<Vertex> placement_;
};

/// The two sides of T - e. `inside_vertices` marks T_e; `inside` is J(e) and
/// `outside` is the complement, both in the decomposition's label order.
struct EdgeSplit {
  std::vector<CoordLabel> inside;
  std::vector<CoordLabel> outside;
  std::vector<bool> inside_vertices;
};

/// T_e is the component containing the edge's first endpoint.
EdgeSplit split(const IndexTreeDecomposition& td, EdgeId e);
/// T_e is the component that does not contain `v` (an endpoint of e).
EdgeSplit split_away_from(const IndexTreeDecomposition& td, EdgeId e, Vertex v);

inline constexpr std::size_t kDefaultCubicCap = 10;
inline constexpr std::size_t kDefaultPathCap = 9;

/// (2m-5)!! for m >= 3, and 1 for m <= 2.
std::uint64_t cubic_tree_count(std::size_t leaves);

/// Visits every leaf-labeled cubic tree on `leaves` labeled leaves exactly once,
/// as an edge list in which leaf i is vertex i and internal nodes are
/// numbered leaves, leaves+1, ... in order of creation. For leaves <= 2 the
/// tree is a single vertex (1) or a single edge (2). The edge list passed to
/// `visit` is only valid during the call.
void for_each_cubic_tree(std::size_t leaves,
                         const std::function<void(const std::vector<TreeEdge>&)>& visit);

/// Every (T, omega) in Q: T cubic, omega a bijection onto the leaves, label
/// labels[i] on leaf i. Throws Error if |labels| < 1 or above `cap`.
void for_each_cubic_decomposition(
    std::span<const CoordLabel> labels,
    const std::function<void(const IndexTreeDecomposition&)>& visit,
    std::size_t cap = kDefaultCubicCap);

/// Every bijective path decomposition, one per ordering up to reversal
/// (keeping the ordering whose first label index is smaller than its last).
void for_each_path_decomposition(
    std::span<const CoordLabel> labels,
    const std::function<void(const IndexTreeDecomposition&)>& visit,
    std::size_t cap = kDefaultPathCap);

/// Path decomposition placing order[j] on path vertex j.
IndexTreeDecomposition path_decomposition(std::span<const CoordLabel> order);

/// (T, beta): bags[x] is the set of graph vertex positions placed on tree node x.
struct GraphTreeDecomposition {
  Tree tree;
  std::vector<std::vector<std::size_t>> bags;
};

struct DecompositionCheck {
  bool valid = false;
  std::size_t width = 0;    // max bag size - 1, when valid
  std::string violation;    // "T1", "T2" or "T3"
  std::string witness;      // human-readable description of the violation
};

/// Checks (T1)-(T3) definitionally and reports the width or the first violation.
DecompositionCheck check_graph_decomposition(const Multigraph& g,
                                             const GraphTreeDecomposition& gtd);

/// (T3): beta(x) ∩ beta(z) ⊆ beta(y) for every y on every x..z path.
bool satisfies_t3_paths(const GraphTreeDecomposition& gtd, std::size_t graph_vertices);
/// (T3'): for each graph vertex, the tree nodes holding it induce a connected subtree.
bool satisfies_t3_connected(const GraphTreeDecomposition& gtd, std::size_t graph_vertices);

}  // namespace treecode
