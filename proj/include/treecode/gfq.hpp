#pragma once

// Dense linear algebra over prime fields GF(q), q <= 251.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace treecode {

using Element = std::uint8_t;

class Field {
 public:
  /// Throws Error unless 2 <= q <= 251 and q is prime.
  explicit Field(unsigned q);

  unsigned order() const { return q_; }

  Element add(Element a, Element b) const {
    unsigned s = unsigned(a) + b;
    return Element(s >= q_ ? s - q_ : s);
  }
  Element sub(Element a, Element b) const {
    return Element(a >= b ? a - b : unsigned(a) + q_ - b);
  }
  Element neg(Element a) const { return Element(a == 0 ? 0 : q_ - a); }
  Element mul(Element a, Element b) const { return Element(unsigned(a) * b % q_); }
  /// Multiplicative inverse via extended Euclid; throws on zero.
  Element inv(Element a) const;
  /// Reduces an arbitrary integer into [0, q).
  Element reduce(long long v) const;

  bool operator==(const Field& other) const { return q_ == other.q_; }

 private:
  unsigned q_;
};

bool is_prime(unsigned n);

class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  /// Entries are reduced mod q. Every row must have `cols` entries.
  static Matrix from_rows(Field field, std::size_t cols,
                          const std::vector<std::vector<long long>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Element at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Element v) { data_[r * cols_ + c] = v; }

  std::span<const Element> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Element> values);

  Matrix select_columns(std::span<const std::size_t> cols) const;
  Matrix select_rows(std::span<const std::size_t> rows) const;
  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;

  bool is_zero() const;
  bool operator==(const Matrix& other) const;

  // row_i <- row_i + factor * row_j
  void add_row_multiple(std::size_t i, std::size_t j, Element factor);
  void scale_row(std::size_t i, Element factor);
  void swap_rows(std::size_t i, std::size_t j);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

Matrix vstack(const Matrix& top, const Matrix& bottom);
Matrix hstack(const Matrix& left, const Matrix& right);

struct RowEchelon {
  Matrix reduced;                   // same shape as the input, zero rows last
  std::vector<std::size_t> pivots;  // pivot column of row i, ascending
};

/// Unique reduced row-echelon form. Pivots are taken leftmost column first,
/// topmost remaining row first.
RowEchelon rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// The nonzero rows of rref(m).
Matrix row_basis(const Matrix& m);

/// Basis of {x : m x^T = 0}, one row per free column of rref(m), in
/// ascending free-column order. Has cols - rank(m) rows.
Matrix nullspace(const Matrix& m);

/// Throws Error if the column counts differ.
bool row_space_equal(const Matrix& a, const Matrix& b);

/// True iff every row of `rows` lies in the row space of `space`.
bool row_space_contains(const Matrix& space, const Matrix& rows);

/// Basis (rref) of rowspace(a) ∩ rowspace(b).
Matrix row_space_intersection(const Matrix& a, const Matrix& b);

/// Some X with a * X = b. Free variables are set to zero. Throws Error if
/// the system is inconsistent or the shapes disagree.
Matrix solve(const Matrix& a, const Matrix& b);

/// Rows of `space` (in order) that extend a basis of rowspace(kernel) to a
/// basis of rowspace(kernel) + rowspace(space), chosen greedily top to bottom.
Matrix complete_basis(const Matrix& kernel, const Matrix& space);

/// An m x d matrix Phi (m = space.cols()) such that x -> x Phi maps
/// rowspace(space) onto F^d with kernel exactly rowspace(kernel), where
/// d = dim(space) - dim(kernel). Requires rowspace(kernel) ⊆ rowspace(space).
Matrix quotient_map(const Matrix& space, const Matrix& kernel);

}  // namespace treecode
