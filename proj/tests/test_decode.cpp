#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>

#include "treecode/decode.hpp"
#include "treecode/error.hpp"
#include "treecode/random.hpp"

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

IndexTreeDecomposition first_cubic(const LinearCode& c) {
  std::optional<IndexTreeDecomposition> out;
  for_each_cubic_decomposition(c.labels(), [&](const IndexTreeDecomposition& td) {
    if (!out) out = td;
  });
  return *out;
}

ChannelObservation random_costs(const LinearCode& c, Rng& rng, bool integral) {
  ChannelObservation obs{c.field().order(), c.labels(), {}};
  std::uniform_real_distribution<double> real(0.0, 3.0);
  for (std::size_t i = 0; i < c.length(); ++i) {
    std::vector<double> row;
    for (unsigned a = 0; a < obs.q; ++a)
      row.push_back(integral ? double(uniform(rng, 0, 2)) : real(rng));
    obs.costs.push_back(row);
  }
  return obs;
}

}  // namespace

TEST_CASE("zero costs on the zero word decode to zero") {
  auto c = hamming74();
  auto r = minimal_by_formula(c, first_cubic(c)).realization;
  auto obs = hamming_costs(c.field(), c.labels(), std::vector<Element>(7, 0));
  auto d = ml_decode(r, obs);
  CHECK(d.cost == 0);
  CHECK(d.codeword == std::vector<Element>(7, 0));
  CHECK_FALSE(d.tie_broken);
}

TEST_CASE("single errors in the Hamming code are corrected") {
  auto c = hamming74();
  auto r = minimal_by_formula(c, first_cubic(c)).realization;
  for_each_codeword(c, [&](std::span<const Element> w) {
    for (std::size_t flip = 0; flip < 7; ++flip) {
      std::vector<Element> received(w.begin(), w.end());
      received[flip] ^= 1;
      auto d = ml_decode(r, hamming_costs(c.field(), c.labels(), received));
      CHECK(d.cost == 1);
      CHECK(d.codeword == std::vector<Element>(w.begin(), w.end()));
      CHECK_FALSE(d.tie_broken);
    }
  });
}

TEST_CASE("min-sum agrees with exhaustive search") {
  Rng rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    Field f(trial % 3 == 0 ? 3 : 2);
    auto c = random_code(f, uniform(rng, 1, 7), uniform(rng, 0, 4), rng);
    auto td = random_decomposition(random_tree(uniform(rng, 1, 6), rng), c.labels(), rng);
    auto r = minimal_by_formula(c, td).realization;
    auto obs = random_costs(c, rng, trial % 2 == 0);
    auto fast = ml_decode(r, obs);
    auto slow = brute_force_ml(c, obs);
    CHECK(same_cost(fast.cost, slow.cost));
    CHECK(fast.codeword == slow.codeword);
    CHECK(fast.tie_broken == slow.tie_broken);
  }
}

TEST_CASE("exhaustive decoder on tiny codes") {
  Field f2(2);
  auto labels = fresh_labels(3);
  auto zero = LinearCode::zero(f2, labels);
  ChannelObservation obs{2, labels, {{5, 0}, {5, 0}, {5, 0}}};
  auto d = brute_force_ml(zero, obs);
  CHECK(d.cost == 15);
  CHECK(d.codeword == std::vector<Element>{0, 0, 0});

  auto rep = LinearCode(f2, labels, Matrix::from_rows(f2, 3, {{1, 1, 1}}));
  auto r = brute_force_ml(rep, ChannelObservation{2, labels, {{1, 0}, {1, 0}, {0, 1}}});
  CHECK(r.cost == 1);
  CHECK(r.codeword == std::vector<Element>{1, 1, 1});

  // Every word of the full space costs the same: smallest wins.
  auto full = LinearCode::full(f2, labels);
  auto t = brute_force_ml(full, ChannelObservation{2, labels, {{1, 1}, {1, 1}, {1, 1}}});
  CHECK(t.tie_broken);
  CHECK(t.codeword == std::vector<Element>{0, 0, 0});
}

TEST_CASE("non-minimal realizations decode identically") {
  Rng rng(7);
  auto c = hamming74();
  auto td = first_cubic(c);
  auto minimal = minimal_by_formula(c, td).realization;
  auto padded = with_free_state_coordinates(trivial_extension(c, td, 0), 0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    auto obs = random_costs(c, rng, trial % 2 == 0);
    auto a = ml_decode(minimal, obs);
    auto b = ml_decode(padded, obs);
    CHECK(same_cost(a.cost, b.cost));
    CHECK(a.codeword == b.codeword);
  }
}

TEST_CASE("observation validation") {
  auto c = hamming74();
  auto r = single_vertex_realization(c);
  ChannelObservation bad{2, c.labels(), std::vector<std::vector<double>>(7, {0, -1})};
  CHECK_THROWS_AS(ml_decode(r, bad), Error);
  ChannelObservation short_rows{2, c.labels(), std::vector<std::vector<double>>(6, {0, 1})};
  CHECK_THROWS_AS(validate(short_rows), Error);
  ChannelObservation other{3, c.labels(), std::vector<std::vector<double>>(7, {0, 1, 1})};
  CHECK_THROWS_AS(ml_decode(r, other), Error);
}

TEST_CASE("complexity model") {
  auto c = hamming74();
  auto td = first_cubic(c);
  auto r = minimal_by_formula(c, td).realization;
  auto d = ml_decode(r, hamming_costs(c.field(), c.labels(), std::vector<Element>(7, 0)));
  auto p = complexity_profile(r, &d);
  CHECK(p.cubic_leaf_bijective);
  CHECK(p.within_bound);
  CHECK(p.measured_within_model);
  CHECK(p.node_bound == 3 * (std::uint64_t{1} << p.t));
  CHECK(p.total_bound == 5 * p.node_bound);
  std::uint64_t total = 0;
  for (const auto& v : p.vertices) {
    if (v.degree == 1) {
      CHECK_FALSE(v.modeled.has_value());
      continue;
    }
    CHECK(*v.modeled == 3 * (std::uint64_t{1} << v.constraint_dim));
    CHECK(*v.measured <= *v.modeled);
    total += *v.modeled;
  }
  CHECK(total == p.total_model);

  // A path is degenerate: no node has degree 3.
  auto path = minimal_by_formula(c, IndexTreeDecomposition(Tree::path(7), c.labels(),
                                                           {0, 1, 2, 3, 4, 5, 6}))
                  .realization;
  auto pp = complexity_profile(path);
  CHECK_FALSE(pp.cubic_leaf_bijective);
  CHECK(pp.total_model == 0);
  for (const auto& v : pp.vertices) CHECK_FALSE(v.modeled.has_value());

  // The claw with Hamming coordinates spread over its leaves.
  auto claw = minimal_by_formula(
                  c, IndexTreeDecomposition(Tree::star(3), c.labels(), {1, 1, 1, 2, 2, 3, 3}))
                  .realization;
  auto pc = complexity_profile(claw);
  CHECK_FALSE(pc.cubic_leaf_bijective);
  CHECK(pc.vertices[0].modeled == 3 * (std::uint64_t{1} << claw.constraint(0).dim()));
}
