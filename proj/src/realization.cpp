#include "treecode/realization.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "treecode/error.hpp"

namespace treecode {

bool dominated_by(const DimensionProfile& a, const DimensionProfile& b) {
  if (a.states.size() != b.states.size() || a.constraints.size() != b.constraints.size())
    throw Error("dimension profiles of different trees");
  for (std::size_t i = 0; i < a.states.size(); ++i)
    if (a.states[i] > b.states[i]) return false;
  for (std::size_t i = 0; i < a.constraints.size(); ++i)
    if (a.constraints[i] > b.constraints[i]) return false;
  return true;
}

TreeRealization::TreeRealization(IndexTreeDecomposition td, std::vector<LinearCode> states,
                                 std::vector<LinearCode> constraints)
    : td_(std::move(td)), states_(std::move(states)), constraints_(std::move(constraints)) {
  if (states_.size() != td_.tree().edge_count())
    throw Error("realization: one state space per edge is required");
  if (constraints_.size() != td_.tree().vertex_count())
    throw Error("realization: one local constraint per vertex is required");
  const Field f = constraints_.front().field();
  std::set<CoordLabel> used(td_.labels().begin(), td_.labels().end());
  for (const auto& s : states_) {
    if (!(s.field() == f)) throw Error("realization: field mismatch");
    for (auto l : s.labels())
      if (!used.insert(l).second)
        throw Error("realization: state label " + std::to_string(l.id) + " is reused");
  }
  for (Vertex v = 0; v < constraints_.size(); ++v) {
    auto want = local_labels(v);
    auto& cv = constraints_[v];
    if (!(cv.field() == f)) throw Error("realization: field mismatch");
    std::set<CoordLabel> a(want.begin(), want.end()), b(cv.labels().begin(), cv.labels().end());
    if (a != b || cv.length() != want.size())
      throw Error("realization: constraint at vertex " + std::to_string(v) +
                  " is not on its local variables");
    if (cv.labels() != want) cv = cv.reordered(want);
  }
}

std::vector<CoordLabel> TreeRealization::local_labels(Vertex v) const {
  auto out = td_.labels_at(v);
  for (EdgeId e : tree().incident(v))
    out.insert(out.end(), states_[e].labels().begin(), states_[e].labels().end());
  return out;
}

std::vector<CoordLabel> TreeRealization::variable_labels() const {
  std::vector<CoordLabel> out = td_.labels();
  for (const auto& s : states_) out.insert(out.end(), s.labels().begin(), s.labels().end());
  return out;
}

DimensionProfile TreeRealization::profile() const {
  DimensionProfile p;
  for (const auto& s : states_) p.states.push_back(s.dim());
  for (const auto& c : constraints_) p.constraints.push_back(c.dim());
  return p;
}

FullBehavior full_behavior(const TreeRealization& r, std::size_t cap) {
  FullBehavior fb{r.variable_labels(), Matrix(r.field(), 0, 0)};
  const std::size_t n = fb.labels.size();
  if (n > cap)
    throw Error("full behavior: " + std::to_string(n) + " variables exceed cap " +
                std::to_string(cap));
  std::map<CoordLabel, std::size_t> col;
  for (std::size_t i = 0; i < n; ++i) col[fb.labels[i]] = i;

  Matrix h(r.field(), 0, n);
  std::vector<Element> row(n);
  auto embed_checks = [&](const LinearCode& code) {
    Matrix checks = nullspace(code.generator());
    for (std::size_t i = 0; i < checks.rows(); ++i) {
      std::fill(row.begin(), row.end(), Element{0});
      for (std::size_t j = 0; j < code.length(); ++j) row[col[code.labels()[j]]] = checks.at(i, j);
      h.append_row(row);
    }
  };
  for (const auto& c : r.constraints()) embed_checks(c);
  for (const auto& s : r.states()) embed_checks(s);
  fb.basis = nullspace(h);
  fb.basis = row_basis(fb.basis);
  return fb;
}

LinearCode restrict_behavior(const FullBehavior& b, std::span<const CoordLabel> where) {
  std::map<CoordLabel, std::size_t> col;
  for (std::size_t i = 0; i < b.labels.size(); ++i) col[b.labels[i]] = i;
  std::vector<std::size_t> cols;
  for (auto l : where) {
    auto it = col.find(l);
    if (it == col.end())
      throw Error("restrict_behavior: label " + std::to_string(l.id) + " is not a variable");
    cols.push_back(it->second);
  }
  return LinearCode(b.basis.field(), std::vector<CoordLabel>(where.begin(), where.end()),
                    b.basis.select_columns(cols));
}

LinearCode realized_code(const TreeRealization& r) {
  return restrict_behavior(full_behavior(r), r.decomposition().labels());
}

TreeRealization single_vertex_realization(const LinearCode& c) {
  std::vector<Vertex> placement(c.length(), 0);
  IndexTreeDecomposition td(Tree::single_vertex(), c.labels(), placement);
  return TreeRealization(std::move(td), {}, {c});
}

TreeRealization trivial_extension(const LinearCode& c, const IndexTreeDecomposition& td,
                                  Vertex root) {
  const Tree& t = td.tree();
  if (root >= t.vertex_count()) throw Error("trivial extension: root is not a vertex");
  {
    std::set<CoordLabel> a(c.labels().begin(), c.labels().end());
    std::set<CoordLabel> b(td.labels().begin(), td.labels().end());
    if (a != b) throw Error("trivial extension: decomposition is not on the code's index set");
  }
  const Field& f = c.field();

  // Orient edges towards the root.
  std::vector<EdgeId> parent_edge(t.vertex_count(), t.edge_count());
  std::vector<Vertex> order{root};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (EdgeId e : t.incident(order[i])) {
      Vertex w = t.other_end(e, order[i]);
      if (w != root && parent_edge[w] == t.edge_count()) {
        parent_edge[w] = e;
        order.push_back(w);
      }
    }

  // The edge towards the root from v carries every symbol of v's subtree.
  std::vector<std::vector<CoordLabel>> carried(t.edge_count());
  std::vector<std::map<CoordLabel, CoordLabel>> state_of(t.edge_count());
  std::vector<LinearCode> states;
  for (EdgeId e = 0; e < t.edge_count(); ++e) {
    auto [a, b] = t.edge(e);
    Vertex child = parent_edge[a] == e ? a : b;
    Vertex parent = t.other_end(e, child);
    carried[e] = split_away_from(td, e, parent).inside;
    auto labels = fresh_labels(carried[e].size());
    for (std::size_t i = 0; i < labels.size(); ++i) state_of[e][carried[e][i]] = labels[i];
    states.push_back(LinearCode::full(f, labels));
  }

  auto local = [&](Vertex v) {
    auto out = td.labels_at(v);
    for (EdgeId e : t.incident(v))
      out.insert(out.end(), states[e].labels().begin(), states[e].labels().end());
    return out;
  };

  std::vector<LinearCode> constraints;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    auto labels = local(v);
    std::map<CoordLabel, std::size_t> col;
    for (std::size_t i = 0; i < labels.size(); ++i) col[labels[i]] = i;
    // Where symbol i shows up at v: its own coordinate, or on an edge from a child.
    auto incoming = [&](CoordLabel sym) -> std::size_t {
      if (auto it = col.find(sym); it != col.end()) return it->second;
      for (EdgeId e : t.incident(v)) {
        if (e == parent_edge[v]) continue;
        if (auto it = state_of[e].find(sym); it != state_of[e].end()) return col[it->second];
      }
      throw InternalError("trivial extension: symbol not routed");
    };
    Matrix g(f, 0, labels.size());
    std::vector<Element> row(labels.size());
    if (v == root) {
      for (std::size_t i = 0; i < c.dim(); ++i) {
        std::fill(row.begin(), row.end(), Element{0});
        for (std::size_t j = 0; j < c.length(); ++j)
          row[incoming(c.labels()[j])] = c.generator().at(i, j);
        g.append_row(row);
      }
    } else {
      EdgeId up = parent_edge[v];
      for (auto sym : carried[up]) {
        std::fill(row.begin(), row.end(), Element{0});
        row[incoming(sym)] = 1;
        row[col[state_of[up][sym]]] = 1;
        g.append_row(row);
      }
    }
    constraints.emplace_back(f, labels, g);
  }
  return TreeRealization(td, std::move(states), std::move(constraints));
}

TreeRealization with_free_state_coordinates(const TreeRealization& r, EdgeId e,
                                            std::size_t extra) {
  const Tree& t = r.tree();
  if (e >= t.edge_count()) throw Error("edge " + std::to_string(e) + " does not exist");
  const Field& f = r.field();
  auto added = fresh_labels(extra);
  LinearCode free = LinearCode::full(f, added);
  std::vector<LinearCode> states = r.states();
  states[e] = direct_sum(states[e], free);
  std::vector<LinearCode> constraints = r.constraints();
  for (Vertex v : {t.edge(e).first, t.edge(e).second})
    constraints[v] = direct_sum(constraints[v], free);
  return TreeRealization(r.decomposition(), std::move(states), std::move(constraints));
}

bool is_essential(const TreeRealization& r) {
  auto fb = full_behavior(r);
  for (const auto& s : r.states())
    if (!(restrict_behavior(fb, s.labels()) == s)) return false;
  return true;
}

bool constraints_equal_local_behavior(const TreeRealization& r) {
  auto fb = full_behavior(r);
  for (Vertex v = 0; v < r.tree().vertex_count(); ++v)
    if (!(restrict_behavior(fb, r.local_labels(v)) == r.constraint(v))) return false;
  return true;
}

namespace {

// Realization whose states and constraints are the projections of `fb`;
// state labels are taken from `state_labels`.
TreeRealization from_behavior(const IndexTreeDecomposition& td, const FullBehavior& fb,
                              const std::vector<std::vector<CoordLabel>>& state_labels) {
  std::vector<LinearCode> states;
  for (const auto& labels : state_labels) states.push_back(restrict_behavior(fb, labels));
  std::vector<LinearCode> constraints;
  const Tree& t = td.tree();
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    auto labels = td.labels_at(v);
    for (EdgeId e : t.incident(v))
      labels.insert(labels.end(), state_labels[e].begin(), state_labels[e].end());
    constraints.push_back(restrict_behavior(fb, labels));
  }
  return TreeRealization(td, std::move(states), std::move(constraints));
}

std::vector<std::vector<CoordLabel>> state_label_sets(const TreeRealization& r) {
  std::vector<std::vector<CoordLabel>> out;
  for (const auto& s : r.states()) out.push_back(s.labels());
  return out;
}

std::vector<std::size_t> columns_of(const std::vector<CoordLabel>& all,
                                    std::span<const CoordLabel> wanted) {
  std::map<CoordLabel, std::size_t> col;
  for (std::size_t i = 0; i < all.size(); ++i) col[all[i]] = i;
  std::vector<std::size_t> out;
  for (auto l : wanted) out.push_back(col.at(l));
  return out;
}

// Rows y X of the behavior basis X with y M = 0.
Matrix behavior_subspace(const Matrix& basis, const Matrix& m) {
  Matrix y = nullspace(m.transpose());
  return y * basis;
}

// C_J ⊕ C_J̄ on I, in the decomposition's label order.
LinearCode split_kernel(const LinearCode& c, const IndexTreeDecomposition& td, EdgeId e) {
  auto s = split(td, e);
  return direct_sum(cross_section(c, s.inside), cross_section(c, s.outside))
      .reordered(td.labels());
}

}  // namespace

TreeRealization essentialize(const TreeRealization& r) {
  return from_behavior(r.decomposition(), full_behavior(r), state_label_sets(r));
}

TreeRealization merge_at(const TreeRealization& r, EdgeId e_hat) {
  const auto& td = r.decomposition();
  if (e_hat >= r.tree().edge_count())
    throw Error("merge: edge " + std::to_string(e_hat) + " does not exist");
  FullBehavior fb = full_behavior(r);
  for (const auto& s : r.states())
    if (!(restrict_behavior(fb, s.labels()) == s))
      throw Error("merge: the realization is not essential");

  const auto& sym = td.labels();
  LinearCode c = restrict_behavior(fb, sym);
  Matrix h = nullspace(split_kernel(c, td, e_hat).generator());

  // Configurations whose symbol part lies in C_J ⊕ C_J̄.
  auto sym_cols = columns_of(fb.labels, sym);
  Matrix m = fb.basis.select_columns(sym_cols) * h.transpose();
  Matrix sub = behavior_subspace(fb.basis, m);

  const LinearCode& s_hat = r.state(e_hat);
  auto hat_cols = columns_of(fb.labels, s_hat.labels());
  Matrix w = sub.select_columns(hat_cols);
  Matrix phi = quotient_map(s_hat.generator(), w);

  // Phi(B): replace the ê coordinates by their image under phi.
  auto merged = fresh_labels(phi.cols());
  std::vector<CoordLabel> labels;
  std::vector<std::size_t> keep;
  std::set<std::size_t> hat(hat_cols.begin(), hat_cols.end());
  for (std::size_t i = 0; i < fb.labels.size(); ++i)
    if (!hat.count(i)) {
      keep.push_back(i);
      labels.push_back(fb.labels[i]);
    }
  labels.insert(labels.end(), merged.begin(), merged.end());
  Matrix image = hstack(fb.basis.select_columns(keep), fb.basis.select_columns(hat_cols) * phi);
  FullBehavior mapped{labels, row_basis(image)};

  auto state_labels = state_label_sets(r);
  state_labels[e_hat] = merged;
  return from_behavior(td, mapped, state_labels);
}

MergeRun minimize_by_merging(const TreeRealization& r, std::optional<std::vector<EdgeId>> order) {
  std::vector<EdgeId> edges;
  if (order) {
    edges = *order;
  } else {
    for (EdgeId e = 0; e < r.tree().edge_count(); ++e) edges.push_back(e);
  }
  MergeRun run{essentialize(r), {r.profile()}};
  run.chain.push_back(run.result.profile());
  for (EdgeId e : edges) {
    run.result = merge_at(run.result, e);
    run.chain.push_back(run.result.profile());
  }
  return run;
}

std::vector<std::size_t> minimal_state_dims_by_cross_sections(const LinearCode& c,
                                                              const IndexTreeDecomposition& td) {
  std::vector<std::size_t> out;
  for (EdgeId e = 0; e < td.tree().edge_count(); ++e) {
    auto s = split(td, e);
    out.push_back(c.dim() - cross_section(c, s.inside).dim() - cross_section(c, s.outside).dim());
  }
  return out;
}

std::vector<std::size_t> minimal_state_dims_by_projections(const LinearCode& c,
                                                           const IndexTreeDecomposition& td) {
  std::vector<std::size_t> out;
  for (EdgeId e = 0; e < td.tree().edge_count(); ++e) {
    auto s = split(td, e);
    out.push_back(project(c, s.inside).dim() + project(c, s.outside).dim() - c.dim());
  }
  return out;
}

std::vector<std::size_t> minimal_constraint_dims(const LinearCode& c,
                                                 const IndexTreeDecomposition& td) {
  std::vector<std::size_t> out;
  const Tree& t = td.tree();
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    std::size_t d = c.dim();
    for (EdgeId e : t.incident(v)) d -= cross_section(c, split_away_from(td, e, v).inside).dim();
    out.push_back(d);
  }
  return out;
}

FormulaRealization minimal_by_formula(const LinearCode& c, const IndexTreeDecomposition& td) {
  {
    std::set<CoordLabel> a(c.labels().begin(), c.labels().end());
    std::set<CoordLabel> b(td.labels().begin(), td.labels().end());
    if (a != b) throw Error("minimal realization: decomposition is not on the code's index set");
  }
  auto by_cross = minimal_state_dims_by_cross_sections(c, td);
  auto by_proj = minimal_state_dims_by_projections(c, td);
  if (by_cross != by_proj)
    throw InternalError("minimal realization: state dimension formulas disagree");
  DimensionProfile predicted{by_proj, minimal_constraint_dims(c, td)};

  LinearCode code = c.reordered(td.labels());
  const Field& f = code.field();
  Matrix basis = code.generator();
  std::vector<CoordLabel> labels = td.labels();
  std::vector<std::vector<CoordLabel>> state_labels;
  for (EdgeId e = 0; e < td.tree().edge_count(); ++e) {
    Matrix phi = quotient_map(code.generator(), split_kernel(code, td, e).generator());
    state_labels.push_back(fresh_labels(phi.cols()));
    labels.insert(labels.end(), state_labels.back().begin(), state_labels.back().end());
    basis = hstack(basis, code.generator() * phi);
  }
  FullBehavior fb{labels, basis};
  if (code.dim() == 0) fb.basis = Matrix(f, 0, labels.size());
  return FormulaRealization{predicted, from_behavior(td, fb, state_labels)};
}

std::vector<EdgeKernelCheck> edge_kernel_checks(const TreeRealization& r) {
  const auto& td = r.decomposition();
  FullBehavior fb = full_behavior(r);
  LinearCode c = restrict_behavior(fb, td.labels());
  auto sym_cols = columns_of(fb.labels, td.labels());
  std::vector<EdgeKernelCheck> out;
  for (EdgeId e = 0; e < r.tree().edge_count(); ++e) {
    auto cols = columns_of(fb.labels, r.state(e).labels());
    Matrix sub = behavior_subspace(fb.basis, fb.basis.select_columns(cols));
    LinearCode zeroed(c.field(), td.labels(), sub.select_columns(sym_cols));
    LinearCode kernel = split_kernel(c, td, e);
    EdgeKernelCheck check;
    check.contained = is_subcode(zeroed, kernel);
    check.equal = check.contained && zeroed.dim() == kernel.dim();
    out.push_back(check);
  }
  return out;
}

bool zero_state_kernel_contained(const TreeRealization& r) {
  auto checks = edge_kernel_checks(r);
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.contained; });
}

bool satisfies_property_p(const TreeRealization& r) {
  auto checks = edge_kernel_checks(r);
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.equal; });
}

bool satisfies_constraint_bounds(const LinearCode& c, const TreeRealization& r) {
  const auto& td = r.decomposition();
  const Tree& t = r.tree();
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    const std::size_t cv = r.constraint(v).dim();
    const std::size_t local = project(c, td.labels_at(v)).dim();
    std::size_t total = 0;
    for (EdgeId e : t.incident(v)) total += r.state(e).dim();
    for (EdgeId e : t.incident(v)) {
      if (r.state(e).dim() > cv) return false;
      if (cv > local + total - r.state(e).dim()) return false;
    }
  }
  return true;
}

}  // namespace treecode
