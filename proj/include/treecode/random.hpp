#pragma once

// Seeded generators for random codes, trees, decompositions and graphs.

#include <cstddef>
#include <random>
#include <vector>

#include "treecode/codes.hpp"
#include "treecode/multigraph.hpp"
#include "treecode/trees.hpp"

namespace treecode {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);

/// Span of `rows` uniformly random vectors on `n` fresh labels (the
/// dimension can come out below `rows`).
LinearCode random_code(const Field& field, std::size_t n, std::size_t rows, Rng& rng);
LinearCode random_code_on(const Field& field, std::vector<CoordLabel> labels, std::size_t rows,
                          Rng& rng);

/// Uniform random labeled tree on n vertices (via a Prüfer sequence).
Tree random_tree(std::size_t n, Rng& rng);

/// Each label placed on a uniformly random vertex of `tree`.
IndexTreeDecomposition random_decomposition(Tree tree, std::vector<CoordLabel> labels, Rng& rng);

/// Random connected simple graph: a random spanning tree plus
/// extra distinct edges, `edges` in total (clamped to what fits).
Multigraph random_connected_graph(std::size_t vertices, std::size_t edges, Rng& rng);

/// Random subset of `labels` of the given size, in the labels' order.
std::vector<CoordLabel> random_subset(const std::vector<CoordLabel>& labels, std::size_t size,
                                      Rng& rng);

}  // namespace treecode
