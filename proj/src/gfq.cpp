#include "treecode/gfq.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "treecode/error.hpp"

namespace treecode {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(unsigned q) : q_(q) {
  if (q < 2 || q > 251 || !is_prime(q))
    throw Error("field order must be a prime in [2, 251], got " + std::to_string(q));
}

Element Field::inv(Element a) const {
  if (a % q_ == 0) throw Error("inverse of zero in GF(" + std::to_string(q_) + ")");
  long long t = 0, new_t = 1;
  long long r = q_, new_r = a;
  while (new_r != 0) {
    long long quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  return reduce(t);
}

Element Field::reduce(long long v) const {
  long long m = v % static_cast<long long>(q_);
  if (m < 0) m += q_;
  return static_cast<Element>(m);
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols,
                         const std::vector<std::vector<long long>>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                  " entries, expected " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, field.reduce(rows[r][c]));
  }
  return m;
}

void Matrix::append_row(std::span<const Element> values) {
  if (values.size() != cols_) throw Error("append_row: column count mismatch");
  for (Element v : values)
    if (v >= field_.order()) throw Error("append_row: entry out of range");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix out(field_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) out.set(r, j, at(r, cols[j]));
  return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
  Matrix out(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    std::copy_n(row(rows[i]).begin(), cols_, out.row(i).begin());
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.set(c, r, at(r, c));
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (!(field_ == rhs.field_) || cols_ != rhs.rows_)
    throw Error("matrix product: shape or field mismatch");
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      Element a = at(i, k);
      if (a == 0) continue;
      auto src = rhs.row(k);
      auto dst = out.row(i);
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        dst[j] = field_.add(dst[j], field_.mul(a, src[j]));
    }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Element v) { return v == 0; });
}

bool Matrix::operator==(const Matrix& other) const {
  return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ &&
         data_ == other.data_;
}

void Matrix::add_row_multiple(std::size_t i, std::size_t j, Element factor) {
  if (factor == 0) return;
  auto dst = row(i);
  auto src = std::as_const(*this).row(j);
  for (std::size_t c = 0; c < cols_; ++c)
    if (src[c] != 0) dst[c] = field_.add(dst[c], field_.mul(factor, src[c]));
}

void Matrix::scale_row(std::size_t i, Element factor) {
  for (auto& v : row(i)) v = field_.mul(v, factor);
}

void Matrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  std::swap_ranges(row(i).begin(), row(i).end(), row(j).begin());
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (!(top.field() == bottom.field()) || top.cols() != bottom.cols())
    throw Error("vstack: shape or field mismatch");
  Matrix out(top.field(), top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r)
    std::copy_n(top.row(r).begin(), top.cols(), out.row(r).begin());
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    std::copy_n(bottom.row(r).begin(), top.cols(), out.row(top.rows() + r).begin());
  return out;
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  if (!(left.field() == right.field()) || left.rows() != right.rows())
    throw Error("hstack: shape or field mismatch");
  Matrix out(left.field(), left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    std::copy_n(left.row(r).begin(), left.cols(), out.row(r).begin());
    std::copy_n(right.row(r).begin(), right.cols(), out.row(r).begin() + left.cols());
  }
  return out;
}

RowEchelon rref(const Matrix& m) {
  RowEchelon result{m, {}};
  Matrix& a = result.reduced;
  const Field& f = a.field();
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < a.cols() && next_row < a.rows(); ++col) {
    std::size_t pivot = next_row;
    while (pivot < a.rows() && a.at(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    a.swap_rows(pivot, next_row);
    a.scale_row(next_row, f.inv(a.at(next_row, col)));
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (r != next_row && a.at(r, col) != 0) a.add_row_multiple(r, next_row, f.neg(a.at(r, col)));
    result.pivots.push_back(col);
    ++next_row;
  }
  return result;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix row_basis(const Matrix& m) {
  auto e = rref(m);
  Matrix out(m.field(), 0, m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) out.append_row(e.reduced.row(r));
  return out;
}

Matrix nullspace(const Matrix& m) {
  auto e = rref(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix out(f, 0, m.cols());
  std::vector<Element> x(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(x.begin(), x.end(), 0);
    x[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = f.neg(e.reduced.at(r, free));
    out.append_row(x);
  }
  return out;
}

bool row_space_equal(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw Error("row_space_equal: column count mismatch");
  if (!(a.field() == b.field())) throw Error("row_space_equal: field mismatch");
  return row_basis(a) == row_basis(b);
}

bool row_space_contains(const Matrix& space, const Matrix& rows) {
  if (space.cols() != rows.cols()) throw Error("row_space_contains: column count mismatch");
  return rank(vstack(space, rows)) == rank(space);
}

Matrix row_space_intersection(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw Error("row_space_intersection: column count mismatch");
  return row_basis(nullspace(vstack(nullspace(a), nullspace(b))));
}

Matrix solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error("solve: row count mismatch");
  auto e = rref(hstack(a, b));
  Matrix x(a.field(), a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    std::size_t p = e.pivots[r];
    if (p >= a.cols()) throw Error("solve: inconsistent system");
    for (std::size_t j = 0; j < b.cols(); ++j) x.set(p, j, e.reduced.at(r, a.cols() + j));
  }
  return x;
}

Matrix complete_basis(const Matrix& kernel, const Matrix& space) {
  Matrix acc = row_basis(kernel);
  std::size_t current = acc.rows();
  Matrix extra(space.field(), 0, space.cols());
  for (std::size_t r = 0; r < space.rows(); ++r) {
    Matrix trial = acc;
    trial.append_row(space.row(r));
    std::size_t rk = rank(trial);
    if (rk > current) {
      acc = row_basis(trial);
      current = rk;
      extra.append_row(space.row(r));
    }
  }
  return extra;
}

Matrix quotient_map(const Matrix& space, const Matrix& kernel) {
  Matrix k = row_basis(kernel);
  Matrix u = complete_basis(k, space);
  if (rank(vstack(space, k)) != rank(space))
    throw Error("quotient_map: kernel is not contained in the space");
  std::size_t d = u.rows();
  Matrix lhs = vstack(k, u);
  Matrix rhs(space.field(), lhs.rows(), d);
  for (std::size_t j = 0; j < d; ++j) rhs.set(k.rows() + j, j, 1);
  return solve(lhs, rhs);
}

}  // namespace treecode
