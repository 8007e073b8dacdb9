#pragma once

// Maximum-likelihood decoding by min-sum message passing on a tree
// realization, an exhaustive reference decoder, and the per-node cost model.

#include <cstdint>
#include <optional>
#include <vector>

#include "treecode/codes.hpp"
#include "treecode/realization.hpp"

namespace treecode {

/// costs[i][a] is the cost of symbol a at coordinate labels[i].
struct ChannelObservation {
  unsigned q = 2;
  std::vector<CoordLabel> labels;
  std::vector<std::vector<double>> costs;
};

/// Throws Error unless every cost row has q finite non-negative entries and
/// the labels are distinct.
void validate(const ChannelObservation& obs);

/// Hamming costs around a received word: 0 at the received symbol, 1 elsewhere.
ChannelObservation hamming_costs(const Field& field, std::vector<CoordLabel> labels,
                                 const std::vector<Element>& received);

struct DecodeResult {
  std::vector<CoordLabel> labels;  // observation order
  std::vector<Element> codeword;
  double cost = 0;
  /// Additions and comparisons per vertex in the first upward pass (ml_decode only).
  std::vector<std::uint64_t> vertex_ops;
  /// More than one codeword attains the minimum.
  bool tie_broken = false;
  /// Upward passes run, including those spent on the tie-break.
  std::size_t passes = 0;
};

inline constexpr std::uint64_t kDecodeEnumerationBound = std::uint64_t{1} << 24;

/// Two-pass min-sum on r. Among minimum-cost codewords the lexicographically
/// smallest in observation label order is returned, found by fixing one
/// symbol at a time. Costs within a relative 1e-9 count as equal.
DecodeResult ml_decode(const TreeRealization& r, const ChannelObservation& obs);

/// Every codeword of c, same cost and tie-break rule.
DecodeResult brute_force_ml(const LinearCode& c, const ChannelObservation& obs);

/// a and b equal up to the decoders' tolerance.
bool same_cost(double a, double b);

struct VertexCost {
  Vertex vertex = 0;
  std::size_t degree = 0;
  std::size_t constraint_dim = 0;
  /// delta (delta - 2) q^dim; absent when delta <= 2, where it degenerates.
  std::optional<std::uint64_t> modeled;
  std::optional<std::uint64_t> measured;
};

struct ComplexityProfile {
  /// T cubic and omega a bijection onto the leaves.
  bool cubic_leaf_bijective = false;
  std::size_t t = 0;             // max dim C_v over internal nodes
  std::uint64_t node_bound = 0;  // 3 q^t
  std::uint64_t total_model = 0;
  std::uint64_t total_bound = 0;  // (n - 2) 3 q^t
  /// Every internal modeled count <= node_bound and total_model <= total_bound
  /// (only meaningful when cubic_leaf_bijective).
  bool within_bound = false;
  /// measured <= modeled wherever both exist.
  bool measured_within_model = true;
  std::vector<VertexCost> vertices;
};

ComplexityProfile complexity_profile(const TreeRealization& r,
                                     const DecodeResult* measured = nullptr);

}  // namespace treecode
