#pragma once

// Tree realizations (T, omega, (S_e), (C_v)), their full behaviors, and the
// two non-recursive routes to the minimal realization: Forney's quotient
// construction and state merging.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "treecode/codes.hpp"
#include "treecode/trees.hpp"

namespace treecode {

struct DimensionProfile {
  std::vector<std::size_t> states;       // dim S_e, by edge id
  std::vector<std::size_t> constraints;  // dim C_v, by vertex
  bool operator==(const DimensionProfile&) const = default;
};

/// a ⪯ b: every state and constraint dimension of a is at most b's.
bool dominated_by(const DimensionProfile& a, const DimensionProfile& b);

class TreeRealization {
 public:
  /// states[e] lives on its own label set, disjoint from I and from every
  /// other state; constraints[v] must be on exactly local_labels(v), in any
  /// order (it is stored reordered). Throws Error otherwise.
  TreeRealization(IndexTreeDecomposition td, std::vector<LinearCode> states,
                  std::vector<LinearCode> constraints);

  const IndexTreeDecomposition& decomposition() const { return td_; }
  const Tree& tree() const { return td_.tree(); }
  const Field& field() const { return constraints_.front().field(); }
  const std::vector<LinearCode>& states() const { return states_; }
  const std::vector<LinearCode>& constraints() const { return constraints_; }
  const LinearCode& state(EdgeId e) const { return states_.at(e); }
  const LinearCode& constraint(Vertex v) const { return constraints_.at(v); }

  /// omega^{-1}(v), then the state labels of each incident edge in incident() order.
  std::vector<CoordLabel> local_labels(Vertex v) const;
  /// I in decomposition order, then state labels edge by edge.
  std::vector<CoordLabel> variable_labels() const;
  DimensionProfile profile() const;

 private:
  IndexTreeDecomposition td_;
  std::vector<LinearCode> states_;
  std::vector<LinearCode> constraints_;
};

inline constexpr std::size_t kDefaultBehaviorColumnCap = 10000;

/// Basis (rref) of all valid global configurations, columns in `labels` order.
struct FullBehavior {
  std::vector<CoordLabel> labels;
  Matrix basis;
};

/// Solution space of the stacked parity checks of every C_v and S_e.
/// Throws Error if the variable count exceeds `cap`.
FullBehavior full_behavior(const TreeRealization& r,
                           std::size_t cap = kDefaultBehaviorColumnCap);

/// B|_where. Throws Error on labels outside the behavior.
LinearCode restrict_behavior(const FullBehavior& b, std::span<const CoordLabel> where);

/// B|_I, on I in decomposition order.
LinearCode realized_code(const TreeRealization& r);

/// Relay realization: C sits at `root`; every other vertex copies the symbols
/// of its subtree onto the edge towards the root, with S_e = F^{J(e)}.
TreeRealization trivial_extension(const LinearCode& c, const IndexTreeDecomposition& td,
                                  Vertex root);

/// Adds `extra` unconstrained coordinates to S_e and to both endpoint
/// constraints. The realized code is unchanged; the model is no longer minimal.
TreeRealization with_free_state_coordinates(const TreeRealization& r, EdgeId e,
                                            std::size_t extra);

/// B|_e = S_e for every edge.
bool is_essential(const TreeRealization& r);
/// B|_v = C_v for every vertex.
bool constraints_equal_local_behavior(const TreeRealization& r);

/// Replaces S_e by B|_e and C_v by B|_v.
TreeRealization essentialize(const TreeRealization& r);

/// State merging at e_hat: states of S_ê in one coset of W collapse to a
/// single state of F^{d'} on fresh labels. Throws Error if r is not essential.
TreeRealization merge_at(const TreeRealization& r, EdgeId e_hat);

struct MergeRun {
  TreeRealization result;
  /// Profiles of the input, of ess(input), and after each merge step.
  std::vector<DimensionProfile> chain;
};

/// ess() followed by a merge at every edge in `order` (default: ascending ids).
MergeRun minimize_by_merging(const TreeRealization& r,
                             std::optional<std::vector<EdgeId>> order = std::nullopt);

/// dim C - dim C_J - dim C_J̄ per edge.
std::vector<std::size_t> minimal_state_dims_by_cross_sections(const LinearCode& c,
                                                              const IndexTreeDecomposition& td);
/// dim C|_J + dim C|_J̄ - dim C per edge.
std::vector<std::size_t> minimal_state_dims_by_projections(const LinearCode& c,
                                                           const IndexTreeDecomposition& td);
/// dim C - sum over e in E(v) of dim C_{J(e)}, T_e the side away from v.
std::vector<std::size_t> minimal_constraint_dims(const LinearCode& c,
                                                 const IndexTreeDecomposition& td);

struct FormulaRealization {
  DimensionProfile predicted;
  TreeRealization realization;
};

/// Quotient construction: s_e*(c) = c Phi_e with ker Phi_e = C_J ⊕ C_J̄, and
/// C_v* the projection of {(c, s*(c))}. Throws InternalError if the two state
/// dimension formulas disagree.
FormulaRealization minimal_by_formula(const LinearCode& c, const IndexTreeDecomposition& td);

/// Single-vertex realization (T, omega, C).
TreeRealization single_vertex_realization(const LinearCode& c);

struct EdgeKernelCheck {
  bool contained = false;  // {b : b|_e = 0}|_I ⊆ C_J ⊕ C_J̄
  bool equal = false;      // ... with equality
};

std::vector<EdgeKernelCheck> edge_kernel_checks(const TreeRealization& r);
/// The containment holds at every edge.
bool zero_state_kernel_contained(const TreeRealization& r);
/// Equality at every edge.
bool satisfies_property_p(const TreeRealization& r);

/// dim S_e <= dim C_v <= dim C|_{omega^{-1}(v)} + sum_{e' != e} dim S_e' for
/// every incident pair (v, e), evaluated on r's dimensions.
bool satisfies_constraint_bounds(const LinearCode& c, const TreeRealization& r);

}  // namespace treecode
