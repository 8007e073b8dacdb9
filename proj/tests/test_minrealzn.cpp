#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "treecode/error.hpp"
#include "treecode/minrealzn.hpp"
#include "treecode/random.hpp"
#include "treecode/rsum.hpp"

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

void check_trace(const BuildTrace& trace, unsigned q) {
  for (const auto& s : trace.steps) {
    CHECK(s.r <= trace.r_max);
    CHECK(s.delta_length == simplex_length(q, s.r));
  }
}

}  // namespace

TEST_CASE("edge choice") {
  CHECK(choose_edge(Tree::path(3)) == 0);
  CHECK(choose_edge(Tree::star(3)) == 0);
  CHECK(choose_edge(Tree::path(2)) == 0);
  // Edge 0 joins two internal vertices here.
  Tree t(4, {{1, 2}, {0, 1}, {2, 3}});
  CHECK(choose_edge(t) == 1);
  CHECK_THROWS_AS(choose_edge(Tree::single_vertex()), Error);
}

TEST_CASE("single vertex and single edge") {
  auto c = hamming74();
  IndexTreeDecomposition one(Tree::single_vertex(), c.labels(), std::vector<Vertex>(7, 0));
  auto r = min_realzn(c, one);
  CHECK(r.trace.steps.empty());
  CHECK(r.realization.constraint(0) == c);

  IndexTreeDecomposition edge(Tree::path(2), c.labels(), {0, 0, 0, 1, 1, 1, 1});
  auto e = min_realzn(c, edge);
  std::size_t rr = split_rank(c, split(edge, 0).inside);
  CHECK(e.trace.steps.size() == 1);
  CHECK(e.trace.steps[0].r == rr);
  const auto& s = e.realization.state(0);
  CHECK(s == LinearCode(c.field(), s.labels(), simplex_matrix(c.field(), rr)));
  CHECK(e.realization.state(0).dim() == rr);
  CHECK(realized_code(e.realization) == c);
}

TEST_CASE("[7,4] Hamming on the claw") {
  auto c = hamming74();
  IndexTreeDecomposition td(Tree::star(3), c.labels(), {1, 1, 1, 2, 2, 3, 3});
  auto r = min_realzn(c, td);
  CHECK(r.trace.steps.size() == 3);
  CHECK(r.realization.profile().states == minimal_state_dims_by_projections(c, td));
  CHECK(r.realization.profile().constraints == minimal_constraint_dims(c, td));
  CHECK(realized_code(r.realization) == c);
  CHECK(r.trace.r_max == r_max_of(c, td));
  check_trace(r.trace, 2);
}

TEST_CASE("r_max") {
  Field f2(2);
  auto a = LinearCode(f2, fresh_labels(2), Matrix::from_rows(f2, 2, {{1, 1}}));
  auto b = LinearCode(f2, fresh_labels(2), Matrix::from_rows(f2, 2, {{1, 1}}));
  auto ds = direct_sum(a, b);
  IndexTreeDecomposition sep(Tree::path(2), ds.labels(), {0, 0, 1, 1});
  CHECK(r_max_of(ds, sep) == 0);
  auto c = hamming74();
  std::size_t count = 0;
  for_each_cubic_decomposition(c.labels(), [&](const IndexTreeDecomposition& td) {
    if (count++ % 97) return;
    auto v = r_max_of(c, td);
    CHECK(v >= 1);
    CHECK(v <= 3);
  });
}

TEST_CASE("three constructions agree on random inputs") {
  Rng rng(44);
  for (int trial = 0; trial < 40; ++trial) {
    Field f(trial % 2 ? 3 : 2);
    std::size_t n = uniform(rng, 1, 9);
    auto c = random_code(f, n, uniform(rng, 0, n), rng);
    auto td = random_decomposition(random_tree(uniform(rng, 1, 6), rng), c.labels(), rng);
    auto leaf = min_realzn(c, td);
    auto general = min_realzn(c, td, EdgeChoice::general);
    auto formula = minimal_by_formula(c, td);
    auto merged = minimize_by_merging(trivial_extension(c, td, 0)).result;
    CHECK(leaf.realization.profile() == formula.predicted);
    CHECK(general.realization.profile() == formula.predicted);
    CHECK(merged.profile() == formula.predicted);
    CHECK(realized_code(leaf.realization) == c);
    CHECK(realized_code(general.realization) == c);
    CHECK(leaf.trace.steps.size() == td.tree().edge_count());
    for (std::size_t i = 0; i < leaf.trace.steps.size(); ++i) {
      const auto& s = leaf.trace.steps[i];
      CHECK(s.r <= leaf.trace.r_max);
      if (i + 1 < leaf.trace.steps.size()) {
        const auto& next = leaf.trace.steps[i + 1];
        CHECK(next.dim <= s.dim);
        CHECK(next.length <= s.length + s.delta_length);
      }
    }
  }
}
