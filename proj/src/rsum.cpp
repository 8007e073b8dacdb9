#include "treecode/rsum.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "treecode/error.hpp"

namespace treecode {

std::size_t simplex_length(unsigned q, std::size_t r, std::size_t cap) {
  std::size_t m = 0, power = 1;
  for (std::size_t i = 0; i < r; ++i) {
    m += power;  // m_r = 1 + q + ... + q^{r-1}
    if (m > cap) throw Error("simplex length exceeds cap " + std::to_string(cap));
    power *= q;
  }
  return m;
}

Matrix simplex_matrix(const Field& field, std::size_t r, std::size_t cap) {
  const std::size_t m = simplex_length(field.order(), r, cap);
  Matrix d(field, r, m);
  // Column with leading 1 in row p, followed by every (r-p-1)-digit tail in
  // lexicographic order. Leading positions further right come first.
  std::size_t col = 0;
  for (std::size_t p = r; p-- > 0;) {
    const std::size_t tail = r - p - 1;
    std::size_t count = 1;
    for (std::size_t i = 0; i < tail; ++i) count *= field.order();
    for (std::size_t v = 0; v < count; ++v, ++col) {
      d.set(p, col, 1);
      std::size_t rest = v;
      for (std::size_t i = r; i-- > p + 1;) {
        d.set(i, col, Element(rest % field.order()));
        rest /= field.order();
      }
    }
  }
  return d;
}

SimplexCode build_simplex(const Field& field, std::size_t r, std::size_t cap) {
  Matrix d = simplex_matrix(field, r, cap);
  auto labels = fresh_labels(d.cols());
  return SimplexCode{r, std::move(d), std::move(labels)};
}

LinearCode star_product(const LinearCode& c1, const LinearCode& c2) {
  if (!(c1.field() == c2.field())) throw Error("star product: field mismatch");
  const Field& f = c1.field();
  std::vector<CoordLabel> labels = c1.labels();
  std::set<CoordLabel> in1(labels.begin(), labels.end());
  for (auto l : c2.labels())
    if (!in1.count(l)) labels.push_back(l);
  std::map<CoordLabel, std::size_t> col;
  for (std::size_t i = 0; i < labels.size(); ++i) col[labels[i]] = i;

  Matrix g(f, c1.dim() + c2.dim(), labels.size());
  for (std::size_t r = 0; r < c1.dim(); ++r)
    for (std::size_t j = 0; j < c1.length(); ++j) g.set(r, j, c1.generator().at(r, j));
  for (std::size_t r = 0; r < c2.dim(); ++r)
    for (std::size_t j = 0; j < c2.length(); ++j) {
      Element v = c2.generator().at(r, j);
      CoordLabel l = c2.labels()[j];
      g.set(c1.dim() + r, col[l], in1.count(l) ? f.neg(v) : v);
    }
  return LinearCode(f, std::move(labels), g);
}

namespace {

std::vector<CoordLabel> shared_labels(const LinearCode& c1, const LinearCode& c2) {
  std::vector<CoordLabel> out;
  for (auto l : c1.labels())
    if (c2.position(l)) out.push_back(l);
  return out;
}

}  // namespace

LinearCode s_sum(const LinearCode& c1, const LinearCode& c2) {
  LinearCode star = star_product(c1, c2);
  auto shared = shared_labels(c1, c2);
  std::set<CoordLabel> s(shared.begin(), shared.end());
  std::vector<CoordLabel> diff;
  for (auto l : star.labels())
    if (!s.count(l)) diff.push_back(l);
  return cross_section(star, diff);
}

std::size_t s_sum_dimension_formula(const LinearCode& c1, const LinearCode& c2) {
  auto shared = shared_labels(c1, c2);
  if (shared.empty()) return c1.dim() + c2.dim();
  auto s1 = cross_section(c1, shared), s2 = cross_section(c2, shared);
  auto p1 = project(c1, shared), p2 = project(c2, shared);
  return c1.dim() + c2.dim() - code_intersection(s1, s2).dim() - code_sum(p1, p2).dim();
}

std::size_t split_rank(const LinearCode& c, std::span<const CoordLabel> j) {
  auto rest = complement(c, j);
  return project(c, j).dim() + project(c, rest).dim() - c.dim();
}

RSumDecomposition rsum_decompose(const LinearCode& c, std::span<const CoordLabel> j,
                                 std::size_t simplex_cap) {
  const Field& f = c.field();
  std::vector<CoordLabel> jl(j.begin(), j.end());
  {
    std::set<CoordLabel> distinct(jl.begin(), jl.end());
    if (distinct.size() != jl.size()) throw Error("rsum: repeated label in J");
  }
  c.positions(jl);  // throws for labels outside I
  std::vector<CoordLabel> jbar = complement(c, jl);

  const std::size_t k = c.dim();
  const std::size_t k1 = project(c, jl).dim();
  const std::size_t k2 = project(c, jbar).dim();
  const std::size_t r = k1 + k2 - k;
  if (std::min(jl.size(), jbar.size()) < r)
    throw Error("rsum: min(|J|, |J̄|) = " + std::to_string(std::min(jl.size(), jbar.size())) +
                " is smaller than r = " + std::to_string(r));

  // rref of G with the J columns first.
  std::vector<CoordLabel> order = jl;
  order.insert(order.end(), jbar.begin(), jbar.end());
  auto e = rref(c.generator().select_columns(c.positions(order)));
  const std::size_t nj = jl.size();
  std::size_t top_rows = 0;
  while (top_rows < e.pivots.size() && e.pivots[top_rows] < nj) ++top_rows;
  if (top_rows != k1) throw InternalError("rsum: J pivot count differs from rank of G|_J");

  // Column permutation within J: top-row pivots, then the rest. Within J̄:
  // bottom-row pivots, then the rest (these carry B and C).
  std::vector<std::size_t> jcols, jbar_pivots, bcols;
  {
    std::vector<bool> is_pivot(order.size(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    for (std::size_t i = 0; i < k1; ++i) jcols.push_back(e.pivots[i]);
    for (std::size_t col = 0; col < nj; ++col)
      if (!is_pivot[col]) jcols.push_back(col);
    for (std::size_t i = k1; i < k; ++i) jbar_pivots.push_back(e.pivots[i]);
    for (std::size_t col = nj; col < order.size(); ++col)
      if (!is_pivot[col]) bcols.push_back(col);
  }

  std::vector<std::size_t> top_idx(k1);
  for (std::size_t i = 0; i < k1; ++i) top_idx[i] = i;
  Matrix b = e.reduced.select_rows(top_idx).select_columns(bcols);

  // r independent rows of B, greedily top to bottom.
  std::vector<std::size_t> chosen, others;
  {
    Matrix acc(f, 0, b.cols());
    for (std::size_t i = 0; i < k1; ++i) {
      Matrix trial = acc;
      trial.append_row(b.row(i));
      if (chosen.size() < r && rank(trial) > acc.rows()) {
        acc = std::move(trial);
        chosen.push_back(i);
      } else {
        others.push_back(i);
      }
    }
  }
  if (chosen.size() != r) throw InternalError("rsum: rank(B) differs from r");

  // Move the chosen rows to the top; permuting the first k1 columns the same
  // way keeps the identity block intact.
  std::vector<std::size_t> row_perm = chosen;
  row_perm.insert(row_perm.end(), others.begin(), others.end());
  std::vector<std::size_t> all_rows(k);
  for (std::size_t i = 0; i < k; ++i) all_rows[i] = i < k1 ? row_perm[i] : i;
  Matrix gbar_rows = e.reduced.select_rows(all_rows);
  for (std::size_t i = 0; i < k1; ++i) jcols[i] = e.pivots[row_perm[i]];
  b = gbar_rows.select_rows(top_idx).select_columns(bcols);

  // alpha: row i of B = sum_j alpha_{i,j} b_j.
  std::vector<std::size_t> first_r(r);
  for (std::size_t i = 0; i < r; ++i) first_r[i] = i;
  Matrix basis = b.select_rows(first_r);
  Matrix alpha = r == 0 ? Matrix(f, k1, 0) : solve(basis.transpose(), b.transpose()).transpose();

  SimplexCode delta = build_simplex(f, r, simplex_cap);
  Matrix x = alpha * delta.d;
  if (r == 0) x = Matrix(f, k1, 0);

  // G1 = [I A X] on J ∪ I_Δ.
  std::vector<CoordLabel> l1;
  for (auto col : jcols) l1.push_back(order[col]);
  l1.insert(l1.end(), delta.labels.begin(), delta.labels.end());
  Matrix g1 = hstack(gbar_rows.select_rows(top_idx).select_columns(jcols), x);

  // G2 = [X O B; O I C] on I_Δ ∪ J̄.
  std::vector<std::size_t> jbar_cols = jbar_pivots;
  jbar_cols.insert(jbar_cols.end(), bcols.begin(), bcols.end());
  std::vector<CoordLabel> l2 = delta.labels;
  for (auto col : jbar_cols) l2.push_back(order[col]);
  Matrix xpad = vstack(x, Matrix(f, k - k1, x.cols()));
  Matrix g2 = hstack(xpad, gbar_rows.select_columns(jbar_cols));

  std::vector<CoordLabel> l1_sorted = jl;
  l1_sorted.insert(l1_sorted.end(), delta.labels.begin(), delta.labels.end());
  std::vector<CoordLabel> l2_sorted = delta.labels;
  l2_sorted.insert(l2_sorted.end(), jbar.begin(), jbar.end());

  LinearCode c1 = LinearCode(f, l1, g1).reordered(l1_sorted);
  LinearCode c2 = LinearCode(f, l2, g2).reordered(l2_sorted);
  return RSumDecomposition{r, std::move(c1), std::move(c2), std::move(delta), k1, k2,
                           std::move(b), std::move(x)};
}

bool verify_rsum_preconditions(const RSumDecomposition& d) {
  const auto& lab = d.delta.labels;
  auto shared = shared_labels(d.c1, d.c2);
  std::set<CoordLabel> a(shared.begin(), shared.end()), b(lab.begin(), lab.end());
  if (a != b) return false;
  if (d.r > 0) {
    LinearCode delta = d.delta.code();
    for (const LinearCode* ci : {&d.c1, &d.c2}) {
      if (!(project(*ci, lab) == delta)) return false;
      if (cross_section(*ci, lab).dim() != 0) return false;
    }
  } else if (!lab.empty()) {
    return false;
  }
  return s_sum(d.c1, d.c2).dim() + d.r == d.c1.dim() + d.c2.dim();
}

}  // namespace treecode
