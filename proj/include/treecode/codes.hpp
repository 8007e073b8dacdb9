#pragma once

// Linear codes over GF(q) on explicitly labeled index sets, with the
// projection / cross-section / dual / direct-sum calculus.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "treecode/gfq.hpp"

namespace treecode {

struct CoordLabel {
  std::uint32_t id = 0;
  auto operator<=>(const CoordLabel&) const = default;
};

/// Session-wide monotonic label allocation. Thread-safe.
CoordLabel fresh_label();
std::vector<CoordLabel> fresh_labels(std::size_t n);
/// Ensures every future fresh label is strictly greater than `id`.
void reserve_labels_through(std::uint32_t id);
/// Wraps raw ids as labels and reserves them so fresh labels never collide.
std::vector<CoordLabel> labels_from_ids(std::span<const std::uint32_t> ids);

/// A subspace of F^I. The generator is always stored as the rref of whatever
/// generating set was supplied, with full row rank, keyed to `labels()` order.
class LinearCode {
 public:
  /// `generators` may have dependent rows; columns follow `labels`.
  LinearCode(Field field, std::vector<CoordLabel> labels, const Matrix& generators);

  static LinearCode zero(Field field, std::vector<CoordLabel> labels);
  static LinearCode full(Field field, std::vector<CoordLabel> labels);

  const Field& field() const { return gen_.field(); }
  const std::vector<CoordLabel>& labels() const { return labels_; }
  const Matrix& generator() const { return gen_; }
  std::size_t length() const { return labels_.size(); }
  std::size_t dim() const { return gen_.rows(); }

  std::optional<std::size_t> position(CoordLabel label) const;
  /// Positions of `labels` in this code; throws Error for unknown labels.
  std::vector<std::size_t> positions(std::span<const CoordLabel> labels) const;
  bool has_labels(std::span<const CoordLabel> labels) const;

  /// Parity-check membership test; `word` follows labels() order.
  bool contains(std::span<const Element> word) const;

  /// Same code with columns permuted into `order` (a permutation of labels()).
  LinearCode reordered(std::span<const CoordLabel> order) const;
  /// Same code with each label replaced according to `from -> to`.
  LinearCode relabeled(std::span<const CoordLabel> from, std::span<const CoordLabel> to) const;

  /// Equality as subspaces of F^I: same label set, same codewords.
  bool operator==(const LinearCode& other) const;

 private:
  std::vector<CoordLabel> labels_;
  Matrix gen_;
};

inline std::size_t dim(const LinearCode& c) { return c.dim(); }

/// Labels of `c` not in `subset`, in c's label order.
std::vector<CoordLabel> complement(const LinearCode& c, std::span<const CoordLabel> subset);

/// C|_J, on index set J in the order given.
LinearCode project(const LinearCode& c, std::span<const CoordLabel> subset);

/// C_J = { c|_J : c in C, c|_{I-J} = 0 }, on index set J in the order given.
LinearCode cross_section(const LinearCode& c, std::span<const CoordLabel> subset);

LinearCode dual(const LinearCode& c);

/// Block-diagonal direct sum; label sets must be pairwise disjoint.
LinearCode direct_sum(std::span<const LinearCode> codes);
LinearCode direct_sum(const LinearCode& a, const LinearCode& b);

/// True iff `sub` ⊆ `super` (same label set required).
bool is_subcode(const LinearCode& sub, const LinearCode& super);

/// Codes on the same label set; results use a's label order.
LinearCode code_sum(const LinearCode& a, const LinearCode& b);
LinearCode code_intersection(const LinearCode& a, const LinearCode& b);

inline constexpr std::uint64_t kDefaultEnumerationBound = std::uint64_t{1} << 24;

/// Number of codewords q^dim, or nullopt if it exceeds `bound`.
std::optional<std::uint64_t> codeword_count(const LinearCode& c, std::uint64_t bound);

/// Visits every codeword exactly once (q-ary Gray order, zero word first).
/// Throws Error if q^dim exceeds `bound`.
void for_each_codeword(const LinearCode& c,
                       const std::function<void(std::span<const Element>)>& visit,
                       std::uint64_t bound = kDefaultEnumerationBound);

/// Minimum Hamming weight of a nonzero codeword, by exhaustive enumeration.
/// Throws Error for dimension 0 or when q^dim exceeds `bound`.
std::size_t min_weight(const LinearCode& c, std::uint64_t bound = kDefaultEnumerationBound);

}  // namespace treecode
