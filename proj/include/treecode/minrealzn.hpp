#pragma once

// Recursive construction of the minimal tree realization by r-sum
// decompositions along the edges of T.

#include <cstddef>
#include <vector>

#include "treecode/realization.hpp"

namespace treecode {

struct BuildStep {
  EdgeId edge = 0;
  std::size_t r = 0;
  std::size_t length = 0;        // n_i: length of the code being split
  std::size_t dim = 0;           // k_i
  std::size_t delta_length = 0;  // |I_Δ|
};

struct BuildTrace {
  std::vector<BuildStep> steps;
  std::size_t r_max = 0;
};

enum class EdgeChoice {
  leaf,     // smallest-id edge incident with a leaf; the leaf is finished at once
  general,  // smallest-id edge; both sides are split further
};

struct MinRealznResult {
  TreeRealization realization;
  BuildTrace trace;
};

/// Smallest-id edge incident with a leaf. Throws Error for an edgeless tree.
EdgeId choose_edge(const Tree& t);

/// max over edges of dim C|_J + dim C|_J̄ - dim C.
std::size_t r_max_of(const LinearCode& c, const IndexTreeDecomposition& td);

/// Splits C at one edge at a time: C = C1 ⊕_r C2, the shared coordinates I_Δ
/// become the state space Δ_r of that edge, and each side continues on its
/// component with I_Δ placed at the edge's endpoint on that side.
MinRealznResult min_realzn(const LinearCode& c, const IndexTreeDecomposition& td,
                           EdgeChoice choice = EdgeChoice::leaf);

}  // namespace treecode
