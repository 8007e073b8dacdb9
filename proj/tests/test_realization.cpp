#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "treecode/error.hpp"
#include "treecode/random.hpp"
#include "treecode/realization.hpp"

using namespace treecode;

namespace {

LinearCode hamming74() {
  Field f2(2);
  return LinearCode(f2, fresh_labels(7),
                    Matrix::from_rows(f2, 7, {{1, 0, 0, 0, 1, 1, 0},
                                              {0, 1, 0, 0, 1, 0, 1},
                                              {0, 0, 1, 0, 0, 1, 1},
                                              {0, 0, 0, 1, 1, 1, 1}}));
}

LinearCode even_weight4() {
  Field f2(2);
  return LinearCode(f2, fresh_labels(4),
                    Matrix::from_rows(f2, 4, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}}));
}

// Claw with the three leaves holding {1,2,3}, {4,5}, {6,7}.
IndexTreeDecomposition claw(const LinearCode& c) {
  return IndexTreeDecomposition(Tree::star(3), c.labels(), {1, 1, 1, 2, 2, 3, 3});
}

}  // namespace

TEST_CASE("trivial extensions realize the code") {
  auto c = hamming74();
  auto single = single_vertex_realization(c);
  CHECK(single.states().empty());
  CHECK(single.constraint(0) == c);
  CHECK(realized_code(single) == c);

  auto ev = even_weight4();
  IndexTreeDecomposition edge(Tree::path(2), ev.labels(), {0, 0, 1, 1});
  auto rel = trivial_extension(ev, edge, 0);
  CHECK(rel.state(0).dim() == 2);
  CHECK(rel.state(0).length() == 2);
  CHECK(realized_code(rel) == ev);
  CHECK(full_behavior(rel).basis.rows() == ev.dim());

  for (Vertex root = 0; root < 4; ++root) {
    auto r = trivial_extension(c, claw(c), root);
    CHECK(realized_code(r) == c);
    CHECK(full_behavior(r).basis.rows() == c.dim());
  }
}

TEST_CASE("restricted behaviors") {
  auto c = hamming74();
  auto r = trivial_extension(c, claw(c), 1);
  auto fb = full_behavior(r);
  for (Vertex v = 0; v < 4; ++v)
    CHECK(is_subcode(restrict_behavior(fb, r.local_labels(v)), r.constraint(v)));
  CHECK_THROWS_AS(restrict_behavior(fb, std::vector<CoordLabel>{fresh_label()}), Error);
  CHECK_THROWS_AS(full_behavior(r, 5), Error);
}

TEST_CASE("essentialization") {
  auto ev = even_weight4();
  IndexTreeDecomposition path(Tree::path(4), ev.labels(), {0, 1, 2, 3});
  auto r = trivial_extension(ev, path, 3);
  auto before = r.profile();
  auto e = essentialize(r);
  CHECK(is_essential(e));
  CHECK(constraints_equal_local_behavior(e));
  CHECK(dominated_by(e.profile(), before));
  CHECK(essentialize(e).profile() == e.profile());
  // Same full behavior.
  CHECK(row_space_equal(full_behavior(e).basis, full_behavior(r).basis));
  for (EdgeId i = 0; i < 3; ++i) CHECK(e.state(i).dim() <= before.states[i]);

  // Relaying five symbols of the [7,4] code needs only a 4-dimensional state.
  auto c = hamming74();
  IndexTreeDecomposition long_path(Tree::path(7), c.labels(), {0, 1, 2, 3, 4, 5, 6});
  auto relay = trivial_extension(c, long_path, 6);
  CHECK_FALSE(is_essential(relay));
  auto ess = essentialize(relay);
  CHECK(is_essential(ess));
  CHECK(relay.state(4).dim() == 5);
  CHECK(ess.state(4).dim() == 4);
}

TEST_CASE("inflated states are detected as non-essential") {
  auto c = hamming74();
  auto m = minimal_by_formula(c, claw(c)).realization;
  CHECK(is_essential(m));
  auto padded = m;
  // A state space larger than what the behavior reaches.
  std::vector<LinearCode> states = m.states();
  Field f2(2);
  auto extra = fresh_labels(1);
  states[0] = direct_sum(states[0], LinearCode::full(f2, extra));
  std::vector<LinearCode> constraints = m.constraints();
  for (Vertex v : {m.tree().edge(0).first, m.tree().edge(0).second})
    constraints[v] = direct_sum(constraints[v], LinearCode::zero(f2, extra));
  TreeRealization inflated(m.decomposition(), states, constraints);
  CHECK(restrict_behavior(full_behavior(inflated), inflated.state(0).labels()).dim() <
        inflated.state(0).dim());
  CHECK_FALSE(is_essential(inflated));
  CHECK(realized_code(inflated) == c);
}

TEST_CASE("minimal realization by formulas") {
  auto ev = even_weight4();
  IndexTreeDecomposition edge(Tree::path(2), ev.labels(), {0, 0, 1, 1});
  auto m = minimal_by_formula(ev, edge);
  CHECK(m.predicted.states == std::vector<std::size_t>{1});
  CHECK(m.realization.profile() == m.predicted);
  CHECK(realized_code(m.realization) == ev);

  // A direct sum split across the tree needs no state.
  Field f3(3);
  auto a = LinearCode(f3, fresh_labels(2), Matrix::from_rows(f3, 2, {{1, 2}}));
  auto b = LinearCode::full(f3, fresh_labels(2));
  auto ds = direct_sum(a, b);
  IndexTreeDecomposition sep(Tree::path(3), ds.labels(), {0, 0, 2, 2});
  auto md = minimal_by_formula(ds, sep);
  CHECK(md.predicted.states == std::vector<std::size_t>{0, 0});
  CHECK(realized_code(md.realization) == ds);

  auto c = hamming74();
  auto mc = minimal_by_formula(c, claw(c));
  CHECK(mc.realization.profile() == mc.predicted);
  CHECK(full_behavior(mc.realization).basis.rows() == c.dim());
  CHECK(satisfies_property_p(mc.realization));
  CHECK(satisfies_constraint_bounds(c, mc.realization));
  for (EdgeId e = 0; e < 3; ++e) {
    auto s = split(claw(c), e);
    CHECK(mc.predicted.states[e] ==
          project(c, s.inside).dim() + project(c, s.outside).dim() - c.dim());
  }
}

TEST_CASE("state merging") {
  auto ev = even_weight4();
  IndexTreeDecomposition edge(Tree::path(2), ev.labels(), {0, 0, 1, 1});
  auto rel = essentialize(trivial_extension(ev, edge, 1));
  CHECK(rel.state(0).dim() == 2);
  auto merged = merge_at(rel, 0);
  CHECK(merged.state(0).dim() == 1);
  CHECK(realized_code(merged) == ev);
  CHECK(is_essential(merged));

  auto c = hamming74();
  auto m = minimal_by_formula(c, claw(c)).realization;
  auto again = merge_at(m, 1);
  CHECK(again.profile() == m.profile());

  auto raw = trivial_extension(c, claw(c), 2);
  CHECK_THROWS_AS(merge_at(raw, 0), Error);
  CHECK_THROWS_AS(merge_at(essentialize(raw), 9), Error);

  auto run = minimize_by_merging(raw);
  CHECK(run.result.profile() == minimal_by_formula(c, claw(c)).predicted);
  CHECK(realized_code(run.result) == c);
  for (std::size_t i = 1; i < run.chain.size(); ++i) CHECK(dominated_by(run.chain[i], run.chain[i - 1]));
  auto reversed = minimize_by_merging(raw, std::vector<EdgeId>{2, 1, 0});
  CHECK(reversed.result.profile() == run.result.profile());

  auto single = single_vertex_realization(c);
  CHECK(minimize_by_merging(single).result.profile() == single.profile());
}

TEST_CASE("zero-state configurations lie in the split kernel") {
  auto c = hamming74();
  auto raw = trivial_extension(c, claw(c), 0);
  CHECK(zero_state_kernel_contained(raw));
  auto m = minimal_by_formula(c, claw(c)).realization;
  CHECK(zero_state_kernel_contained(m));
  CHECK(satisfies_property_p(m));
  auto padded = with_free_state_coordinates(m, 0, 1);
  CHECK(zero_state_kernel_contained(padded));
  CHECK(realized_code(padded) == c);
}

TEST_CASE("randomized minimality and dominance") {
  Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    Field f(trial % 2 ? 3 : 2);
    std::size_t n = uniform(rng, 1, 8);
    auto c = random_code(f, n, uniform(rng, 0, n), rng);
    auto td = random_decomposition(random_tree(uniform(rng, 1, 5), rng), c.labels(), rng);
    auto formula = minimal_by_formula(c, td);
    CHECK(formula.realization.profile() == formula.predicted);
    CHECK(realized_code(formula.realization) == c);
    CHECK(satisfies_constraint_bounds(c, formula.realization));

    auto ext = trivial_extension(c, td, uniform(rng, 0, td.tree().vertex_count() - 1));
    if (td.tree().edge_count() > 0)
      ext = with_free_state_coordinates(ext, uniform(rng, 0, td.tree().edge_count() - 1), 1);
    CHECK(realized_code(ext) == c);
    CHECK(dominated_by(formula.predicted, ext.profile()));
    auto run = minimize_by_merging(ext);
    CHECK(run.result.profile() == formula.predicted);
    for (std::size_t i = 1; i < run.chain.size(); ++i)
      CHECK(dominated_by(run.chain[i], run.chain[i - 1]));
    CHECK(satisfies_property_p(run.result));
    CHECK(zero_state_kernel_contained(ext));
  }
}
