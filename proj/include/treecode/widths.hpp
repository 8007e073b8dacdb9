#pragma once

// Width measures of codes and graphs: kappa/sigma of a decomposition, code
// treewidth and branchwidth over leaf-bijective cubic trees, trellis widths
// over path decompositions, and exact graph treewidth/pathwidth.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treecode/codes.hpp"
#include "treecode/multigraph.hpp"
#include "treecode/trees.hpp"

namespace treecode {

inline constexpr std::size_t kDefaultSubsetCap = 22;
inline constexpr std::size_t kDefaultGraphCap = 24;
inline constexpr std::size_t kBruteForceGraphCap = 6;

/// dim(C|_J) for every J, indexed by bitmask over label positions.
class SubsetRankTable {
 public:
  /// Throws Error if length() exceeds `cap`. `threads` only affects speed.
  explicit SubsetRankTable(const LinearCode& c, std::size_t cap = kDefaultSubsetCap,
                           unsigned threads = 1);

  std::size_t length() const { return n_; }
  std::size_t dim() const { return k_; }
  std::uint32_t full() const { return full_; }

  std::size_t projection(std::uint32_t mask) const { return p_[mask]; }
  std::size_t cross_section(std::uint32_t mask) const { return k_ - p_[full_ & ~mask]; }
  /// dim C|_J + dim C|_Jbar - dim C.
  std::size_t state(std::uint32_t mask) const { return p_[mask] + p_[full_ & ~mask] - k_; }

 private:
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::uint32_t full_ = 0;
  std::vector<std::uint8_t> p_;
};

/// max_v [dim C - sum_{e in E(v)} dim C_{J(e)}], T_e the side away from v.
std::size_t kappa(const LinearCode& c, const IndexTreeDecomposition& td);
/// max_e [dim C|_{J(e)} + dim C|_{Jbar(e)} - dim C]; 0 for a single vertex.
std::size_t sigma(const LinearCode& c, const IndexTreeDecomposition& td);

struct WidthReport {
  std::string measure;
  std::size_t value = 0;
  /// "exhaustive", "subset-dp", "elimination-dp", "vertex-separation-dp",
  /// "definitional" or "theorem-assisted".
  std::string method;
  std::uint64_t search_space = 0;
  std::optional<IndexTreeDecomposition> decomposition;  // code witnesses
  std::vector<CoordLabel> ordering;                     // trellis witnesses
  std::optional<GraphTreeDecomposition> graph_decomposition;
  std::string note;
};

/// Per-decomposition tally of sigma <= kappa <= 2 sigma.
struct SandwichTally {
  std::uint64_t evaluated = 0;
  std::uint64_t below = 0;  // kappa < sigma
  std::uint64_t above = 0;  // kappa > 2 sigma
  /// Of `above`, those with sigma = 0 and kappa = 1, where only kappa <= 1 is implied.
  std::uint64_t above_degenerate = 0;
};

struct CubicWidths {
  WidthReport treewidth;
  WidthReport branchwidth;
  SandwichTally sandwich;
};

/// Exhaustive minimum of kappa and sigma over every leaf-bijective cubic
/// decomposition. Length 1 uses the single-vertex tree.
CubicWidths code_widths(const LinearCode& c, std::size_t cap = kDefaultCubicCap);
WidthReport code_treewidth(const LinearCode& c, std::size_t cap = kDefaultCubicCap);
WidthReport code_branchwidth(const LinearCode& c, std::size_t cap = kDefaultCubicCap);

/// Min sigma over leaf-bijective trees whose internal nodes have degree >= 3
/// (contractions of cubic trees). Experimental; carries no guarantee.
WidthReport branchwidth_any_internal_degree(const LinearCode& c, std::size_t cap = 8);

struct TrellisWidths {
  WidthReport sigma;
  WidthReport kappa;
};

/// Subset-lattice dynamic programs over orderings of the coordinates.
TrellisWidths trellis_widths(const LinearCode& c, std::size_t cap = kDefaultSubsetCap,
                             unsigned threads = 1);
/// Same minima by evaluating every ordering (up to reversal) with the
/// realization-module formulas; used as a cross-check.
TrellisWidths trellis_widths_by_permutation(const LinearCode& c, std::size_t cap = kDefaultPathCap);

/// Exact treewidth by a breadth-first search over elimination prefixes with
/// iterative deepening on the width. The witness is validated against (T1)-(T3).
WidthReport graph_treewidth(const Multigraph& g, std::size_t cap = kDefaultGraphCap);
/// Exact pathwidth via vertex separation over prefix sets.
WidthReport graph_pathwidth(const Multigraph& g, std::size_t cap = kDefaultGraphCap);

/// Minimum width over every (T, beta) with |V(T)| <= |V(G)|, searched by
/// assigning each graph vertex a connected set of tree nodes. Small graphs only.
WidthReport graph_treewidth_brute_force(const Multigraph& g, std::size_t cap = kBruteForceGraphCap);
WidthReport graph_pathwidth_brute_force(const Multigraph& g, std::size_t cap = kBruteForceGraphCap);

/// Elimination ordering to a tree decomposition with one bag per vertex.
GraphTreeDecomposition decomposition_from_elimination(const Multigraph& g,
                                                      const std::vector<std::size_t>& order);

}  // namespace treecode
