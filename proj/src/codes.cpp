#include "treecode/codes.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <string>

#include "treecode/error.hpp"

namespace treecode {

namespace {

std::atomic<std::uint32_t> next_label{0};

std::string label_str(CoordLabel l) { return std::to_string(l.id); }

}  // namespace

CoordLabel fresh_label() { return CoordLabel{next_label.fetch_add(1)}; }

std::vector<CoordLabel> fresh_labels(std::size_t n) {
  std::uint32_t first = next_label.fetch_add(static_cast<std::uint32_t>(n));
  std::vector<CoordLabel> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = CoordLabel{first + static_cast<std::uint32_t>(i)};
  return out;
}

void reserve_labels_through(std::uint32_t id) {
  std::uint32_t cur = next_label.load();
  while (cur <= id && !next_label.compare_exchange_weak(cur, id + 1)) {
  }
}

std::vector<CoordLabel> labels_from_ids(std::span<const std::uint32_t> ids) {
  std::vector<CoordLabel> out;
  out.reserve(ids.size());
  for (auto id : ids) {
    reserve_labels_through(id);
    out.push_back(CoordLabel{id});
  }
  return out;
}

LinearCode::LinearCode(Field field, std::vector<CoordLabel> labels, const Matrix& generators)
    : labels_(std::move(labels)), gen_(field, 0, labels_.size()) {
  if (!(generators.field() == field)) throw Error("LinearCode: generator field mismatch");
  if (generators.cols() != labels_.size())
    throw Error("LinearCode: generator has " + std::to_string(generators.cols()) +
                " columns but " + std::to_string(labels_.size()) + " labels were given");
  std::set<CoordLabel> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw Error("LinearCode: duplicate coordinate labels");
  gen_ = row_basis(generators);
}

LinearCode LinearCode::zero(Field field, std::vector<CoordLabel> labels) {
  std::size_t n = labels.size();
  return LinearCode(field, std::move(labels), Matrix(field, 0, n));
}

LinearCode LinearCode::full(Field field, std::vector<CoordLabel> labels) {
  std::size_t n = labels.size();
  return LinearCode(field, std::move(labels), Matrix::identity(field, n));
}

std::optional<std::size_t> LinearCode::position(CoordLabel label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::size_t> LinearCode::positions(std::span<const CoordLabel> labels) const {
  std::map<CoordLabel, std::size_t> index;
  for (std::size_t i = 0; i < labels_.size(); ++i) index[labels_[i]] = i;
  std::vector<std::size_t> out;
  out.reserve(labels.size());
  for (auto l : labels) {
    auto it = index.find(l);
    if (it == index.end()) throw Error("label " + label_str(l) + " is not in the index set");
    out.push_back(it->second);
  }
  return out;
}

bool LinearCode::has_labels(std::span<const CoordLabel> labels) const {
  std::set<CoordLabel> mine(labels_.begin(), labels_.end());
  return std::all_of(labels.begin(), labels.end(), [&](CoordLabel l) { return mine.count(l); });
}

bool LinearCode::contains(std::span<const Element> word) const {
  if (word.size() != length()) throw Error("contains: word length mismatch");
  Matrix h = nullspace(gen_);
  const Field& f = field();
  for (std::size_t r = 0; r < h.rows(); ++r) {
    Element acc = 0;
    for (std::size_t c = 0; c < length(); ++c) acc = f.add(acc, f.mul(h.at(r, c), word[c]));
    if (acc != 0) return false;
  }
  return true;
}

LinearCode LinearCode::reordered(std::span<const CoordLabel> order) const {
  if (order.size() != labels_.size()) throw Error("reordered: not a permutation of the labels");
  auto pos = positions(order);
  std::set<std::size_t> distinct(pos.begin(), pos.end());
  if (distinct.size() != pos.size()) throw Error("reordered: repeated label");
  return LinearCode(field(), std::vector<CoordLabel>(order.begin(), order.end()),
                    gen_.select_columns(pos));
}

LinearCode LinearCode::relabeled(std::span<const CoordLabel> from,
                                 std::span<const CoordLabel> to) const {
  if (from.size() != to.size()) throw Error("relabeled: mapping size mismatch");
  std::map<CoordLabel, CoordLabel> m;
  for (std::size_t i = 0; i < from.size(); ++i) m[from[i]] = to[i];
  std::vector<CoordLabel> out = labels_;
  for (auto& l : out)
    if (auto it = m.find(l); it != m.end()) l = it->second;
  return LinearCode(field(), std::move(out), gen_);
}

bool LinearCode::operator==(const LinearCode& other) const {
  if (!(field() == other.field()) || length() != other.length() || dim() != other.dim())
    return false;
  if (labels_ == other.labels_) return gen_ == other.gen_;
  if (!other.has_labels(labels_)) return false;
  return other.reordered(labels_).gen_ == gen_;
}

std::vector<CoordLabel> complement(const LinearCode& c, std::span<const CoordLabel> subset) {
  std::set<CoordLabel> s(subset.begin(), subset.end());
  std::vector<CoordLabel> out;
  for (auto l : c.labels())
    if (!s.count(l)) out.push_back(l);
  return out;
}

LinearCode project(const LinearCode& c, std::span<const CoordLabel> subset) {
  auto pos = c.positions(subset);
  return LinearCode(c.field(), std::vector<CoordLabel>(subset.begin(), subset.end()),
                    c.generator().select_columns(pos));
}

LinearCode cross_section(const LinearCode& c, std::span<const CoordLabel> subset) {
  auto inside = c.positions(subset);
  auto outside_labels = complement(c, subset);
  auto outside = c.positions(outside_labels);
  // Pivot on the outside columns first; rows whose outside part vanishes span C_J.
  std::vector<std::size_t> order = outside;
  order.insert(order.end(), inside.begin(), inside.end());
  auto e = rref(c.generator().select_columns(order));
  std::size_t split = outside.size();
  Matrix rows(c.field(), 0, inside.size());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] < split) continue;
    auto row = e.reduced.row(r);
    rows.append_row(row.subspan(split));
  }
  return LinearCode(c.field(), std::vector<CoordLabel>(subset.begin(), subset.end()), rows);
}

LinearCode dual(const LinearCode& c) {
  return LinearCode(c.field(), c.labels(), nullspace(c.generator()));
}

LinearCode direct_sum(std::span<const LinearCode> codes) {
  if (codes.empty()) throw Error("direct_sum: no codes");
  Field f = codes.front().field();
  std::vector<CoordLabel> labels;
  std::size_t rows = 0;
  for (const auto& c : codes) {
    if (!(c.field() == f)) throw Error("direct_sum: field mismatch");
    labels.insert(labels.end(), c.labels().begin(), c.labels().end());
    rows += c.dim();
  }
  std::set<CoordLabel> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw Error("direct_sum: overlapping label sets");
  Matrix g(f, rows, labels.size());
  std::size_t r0 = 0, c0 = 0;
  for (const auto& c : codes) {
    for (std::size_t r = 0; r < c.dim(); ++r)
      for (std::size_t j = 0; j < c.length(); ++j) g.set(r0 + r, c0 + j, c.generator().at(r, j));
    r0 += c.dim();
    c0 += c.length();
  }
  return LinearCode(f, std::move(labels), g);
}

LinearCode direct_sum(const LinearCode& a, const LinearCode& b) {
  std::vector<LinearCode> v{a, b};
  return direct_sum(v);
}

namespace {

void require_same_index_set(const LinearCode& a, const LinearCode& b, const char* what) {
  if (!(a.field() == b.field())) throw Error(std::string(what) + ": field mismatch");
  if (a.length() != b.length() || !a.has_labels(b.labels()))
    throw Error(std::string(what) + ": codes are on different index sets");
}

}  // namespace

bool is_subcode(const LinearCode& sub, const LinearCode& super) {
  require_same_index_set(sub, super, "is_subcode");
  return row_space_contains(super.generator(), sub.reordered(super.labels()).generator());
}

LinearCode code_sum(const LinearCode& a, const LinearCode& b) {
  require_same_index_set(a, b, "code_sum");
  return LinearCode(a.field(), a.labels(),
                    vstack(a.generator(), b.reordered(a.labels()).generator()));
}

LinearCode code_intersection(const LinearCode& a, const LinearCode& b) {
  require_same_index_set(a, b, "code_intersection");
  return LinearCode(a.field(), a.labels(),
                    row_space_intersection(a.generator(), b.reordered(a.labels()).generator()));
}

std::optional<std::uint64_t> codeword_count(const LinearCode& c, std::uint64_t bound) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < c.dim(); ++i) {
    if (count > bound / c.field().order()) return std::nullopt;
    count *= c.field().order();
  }
  if (count > bound) return std::nullopt;
  return count;
}

void for_each_codeword(const LinearCode& c,
                       const std::function<void(std::span<const Element>)>& visit,
                       std::uint64_t bound) {
  auto total = codeword_count(c, bound);
  if (!total)
    throw Error("codeword enumeration exceeds bound (q^" + std::to_string(c.dim()) + " > " +
                std::to_string(bound) + ")");
  const Field& f = c.field();
  const unsigned q = f.order();
  const std::size_t k = c.dim();
  std::vector<Element> word(c.length(), 0);
  visit(word);
  // Reflected q-ary Gray code: each step moves one digit by +-1, i.e. adds
  // +-1 times one generator row.
  std::vector<unsigned> digit(k, 0);
  std::vector<int> dir(k, 1);
  for (std::uint64_t step = 1; step < *total; ++step) {
    std::size_t i = 0;
    while (true) {
      int nd = int(digit[i]) + dir[i];
      if (nd >= 0 && nd < int(q)) break;
      dir[i] = -dir[i];
      ++i;
    }
    digit[i] = unsigned(int(digit[i]) + dir[i]);
    Element factor = dir[i] > 0 ? Element(1) : f.neg(1);
    auto row = c.generator().row(i);
    for (std::size_t j = 0; j < word.size(); ++j)
      if (row[j] != 0) word[j] = f.add(word[j], f.mul(factor, row[j]));
    visit(word);
  }
}

std::size_t min_weight(const LinearCode& c, std::uint64_t bound) {
  if (c.dim() == 0) throw Error("min_weight: the zero code has no nonzero codeword");
  std::size_t best = c.length() + 1;
  bool first = true;
  for_each_codeword(
      c,
      [&](std::span<const Element> w) {
        if (first) {  // the zero word
          first = false;
          return;
        }
        std::size_t wt = 0;
        for (Element e : w) wt += (e != 0);
        best = std::min(best, wt);
      },
      bound);
  return best;
}

}  // namespace treecode
