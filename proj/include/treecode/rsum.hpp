#pragma once

// Star products, S(C1, C2), simplex codes and r-sum (de)composition.

#include <cstddef>
#include <span>
#include <vector>

#include "treecode/codes.hpp"

namespace treecode {

inline constexpr std::size_t kDefaultSimplexLengthCap = 4096;

/// (q^r - 1) / (q - 1). Throws Error if it exceeds `cap`.
std::size_t simplex_length(unsigned q, std::size_t r, std::size_t cap = kDefaultSimplexLengthCap);

/// D_r: the r x m_r matrix whose columns are the vectors of F_q^r with first
/// nonzero entry 1, in lexicographic order. r = 0 gives a 0 x 0 matrix.
Matrix simplex_matrix(const Field& field, std::size_t r,
                      std::size_t cap = kDefaultSimplexLengthCap);

struct SimplexCode {
  std::size_t r = 0;
  Matrix d;
  std::vector<CoordLabel> labels;

  /// Delta_r on `labels`.
  LinearCode code() const { return LinearCode(d.field(), labels, d); }
};

/// D_r on freshly allocated labels.
SimplexCode build_simplex(const Field& field, std::size_t r,
                          std::size_t cap = kDefaultSimplexLengthCap);

/// C1 * C2 on I1 ∪ I2 (c1's labels first, then c2's remaining labels).
/// Shared coordinates carry x_i - y_i.
LinearCode star_product(const LinearCode& c1, const LinearCode& c2);

/// S(C1, C2): the cross-section of C1 * C2 on the symmetric difference.
LinearCode s_sum(const LinearCode& c1, const LinearCode& c2);

/// Right-hand side of the dimension formula for S(C1, C2), computed from
/// the projections and cross-sections on I1 ∩ I2.
std::size_t s_sum_dimension_formula(const LinearCode& c1, const LinearCode& c2);

/// C = C1 ⊕_r C2 with C1 on J ∪ I_Δ and C2 on I_Δ ∪ J̄.
struct RSumDecomposition {
  std::size_t r = 0;
  LinearCode c1;
  LinearCode c2;
  SimplexCode delta;
  // Ingredients of the construction, kept for inspection.
  std::size_t k1 = 0;
  std::size_t k2 = 0;
  Matrix b;  // the B block, after moving the chosen basis rows to the top
  Matrix x;  // X = alpha * D_r
};

/// Splits C along (J, J̄) following the block-form construction. Throws
/// Error if J is not a subset of C's labels or min(|J|, |J̄|) < r.
RSumDecomposition rsum_decompose(const LinearCode& c, std::span<const CoordLabel> j,
                                 std::size_t simplex_cap = kDefaultSimplexLengthCap);

/// dim(C|_J) + dim(C|_J̄) - dim(C).
std::size_t split_rank(const LinearCode& c, std::span<const CoordLabel> j);

/// Projections of C1, C2 onto I_Δ equal Δ_r, their cross-sections there are
/// {0}, I1 ∩ I2 = I_Δ, and dim S(C1, C2) = dim C1 + dim C2 - r.
bool verify_rsum_preconditions(const RSumDecomposition& d);

}  // namespace treecode
