#pragma once

// Incidence codes C[G], the G -> Gbar transform, the Y_i trees and the codes
// C[Ybar_i] whose trellis width outgrows their treewidth.

#include <cstddef>
#include <optional>
#include <vector>

#include "treecode/codes.hpp"
#include "treecode/multigraph.hpp"

namespace treecode {

/// Code generated by the vertex-edge incidence matrix, each non-loop edge
/// oriented from its lower vertex position to the higher one (tail +1, head
/// -1). Loops give zero columns. Coordinates carry the edge labels.
LinearCode incidence_code(const Multigraph& g, const Field& field);

/// Two parallel edges per adjacent pair of G (loops dropped), plus a new
/// vertex x joined to every vertex by two parallel edges. x takes id
/// max(ids) + 1 and the last position; edges get fresh labels, pairs first.
Multigraph g_bar(const Multigraph& g);

inline constexpr std::size_t kMaxYIndex = 8;

/// Y_1 = K_{1,3}; Y_i hangs two new leaves off every leaf of Y_{i-1}.
Multigraph y_family(std::size_t i);

Multigraph path_graph(std::size_t n);
Multigraph cycle_graph(std::size_t n);
Multigraph complete_graph(std::size_t n);
Multigraph star_graph(std::size_t leaves);

/// One simple graph per isomorphism class on exactly n vertices, n <= 6.
std::vector<Multigraph> simple_graphs(std::size_t n);

struct YbarParameters {
  std::size_t i = 0;
  std::size_t n = 0, k = 0;
  std::optional<std::size_t> d;  // computed for i <= 3
  std::size_t expected_n = 0, expected_k = 0, expected_d = 4;
  bool matches() const {
    return n == expected_n && k == expected_k && (!d || *d == expected_d);
  }
};

struct YbarCode {
  Multigraph graph;  // Ybar_i
  LinearCode code;
  YbarParameters parameters;
};

/// C_i = C[Ybar_i] with n = 12(2^i - 1) + 2 and k = 3(2^i - 1) + 1 checked;
/// d is found by enumeration when i <= `max_d_index` and q^k <= 2^24.
YbarCode ybar_code(std::size_t i, const Field& field, std::size_t max_d_index = 3);

}  // namespace treecode
