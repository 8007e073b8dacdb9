#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "treecode/codes.hpp"
#include "treecode/error.hpp"
#include "treecode/random.hpp"

using namespace treecode;

namespace {

LinearCode code(unsigned q, std::vector<std::vector<long long>> rows, std::size_t n) {
  Field f(q);
  return LinearCode(f, fresh_labels(n), Matrix::from_rows(f, n, rows));
}

std::set<std::vector<Element>> words(const LinearCode& c) {
  std::set<std::vector<Element>> out;
  for_each_codeword(c, [&](std::span<const Element> w) { out.emplace(w.begin(), w.end()); });
  return out;
}

LinearCode even_weight3() { return code(2, {{1, 1, 0}, {0, 1, 1}}, 3); }

}  // namespace

TEST_CASE("labels are fresh and reservations are honoured") {
  auto a = fresh_labels(3);
  CHECK(a[1].id == a[0].id + 1);
  reserve_labels_through(a[2].id + 100);
  CHECK(fresh_label().id > a[2].id + 100);
  std::vector<std::uint32_t> ids{5000000, 5000001};
  auto l = labels_from_ids(ids);
  CHECK(l[1].id == 5000001);
  CHECK(fresh_label().id > 5000001);
}

TEST_CASE("dimension") {
  Field f2(2);
  CHECK(LinearCode::zero(f2, fresh_labels(4)).dim() == 0);
  CHECK(LinearCode::full(f2, fresh_labels(3)).dim() == 3);
  auto c = even_weight3();
  CHECK(c.dim() == 2);
  CHECK(words(c).size() == 4);
}

TEST_CASE("projection") {
  auto c = even_weight3();
  CHECK(project(c, c.labels()) == c);
  auto empty = project(c, std::vector<CoordLabel>{});
  CHECK(empty.length() == 0);
  CHECK(empty.dim() == 0);
  std::vector<CoordLabel> j{c.labels()[0], c.labels()[1]};
  auto p = project(c, j);
  std::set<std::vector<Element>> expect;
  for (const auto& w : words(c)) expect.insert({w[0], w[1]});
  CHECK(words(p) == expect);
  CHECK(p.dim() == 2);
  CHECK_THROWS_AS(project(c, std::vector<CoordLabel>{fresh_label()}), Error);
}

TEST_CASE("cross-section") {
  auto c = even_weight3();
  CHECK(cross_section(c, c.labels()) == c);
  std::vector<CoordLabel> j{c.labels()[0], c.labels()[1]};
  auto s = cross_section(c, j);
  std::set<std::vector<Element>> expect;
  for (const auto& w : words(c))
    if (w[2] == 0) expect.insert({w[0], w[1]});
  CHECK(words(s) == expect);
  CHECK(s.dim() == 1);
}

TEST_CASE("dual") {
  Field f2(2);
  CHECK(dual(LinearCode::full(f2, fresh_labels(4))).dim() == 0);
  auto c = even_weight3();
  auto d = dual(c);
  CHECK(words(d) == std::set<std::vector<Element>>{{0, 0, 0}, {1, 1, 1}});
}

TEST_CASE("direct sum") {
  Field f2(2);
  auto a = LinearCode::full(f2, fresh_labels(1));
  CHECK(direct_sum(std::span<const LinearCode>(&a, 1)) == a);
  auto b = LinearCode::full(f2, fresh_labels(1));
  auto s = direct_sum(a, b);
  CHECK(s.dim() == 2);
  CHECK(s.length() == 2);
  CHECK_THROWS_AS(direct_sum(a, a), Error);

  Rng rng(3);
  std::vector<LinearCode> parts;
  std::size_t total = 0;
  for (int i = 0; i < 3; ++i) {
    parts.push_back(random_code(Field(3), 4, 2, rng));
    total += parts.back().dim();
  }
  auto sum = direct_sum(parts);
  CHECK(sum.dim() == total);
  for (const auto& p : parts) {
    CHECK(project(sum, p.labels()) == p);
    CHECK(cross_section(sum, p.labels()) == p);
  }
}

TEST_CASE("minimum weight") {
  CHECK(min_weight(code(2, {{1, 1, 1}}, 3)) == 3);
  CHECK(min_weight(even_weight3()) == 2);
  auto hamming = code(2, {{1, 0, 0, 0, 1, 1, 0}, {0, 1, 0, 0, 1, 0, 1},
                          {0, 0, 1, 0, 0, 1, 1}, {0, 0, 0, 1, 1, 1, 1}}, 7);
  CHECK(min_weight(hamming) == 3);
  CHECK_THROWS_AS(min_weight(LinearCode::zero(Field(2), fresh_labels(2))), Error);
  CHECK_THROWS_AS(min_weight(hamming, 8), Error);
}

TEST_CASE("membership by parity checks") {
  auto c = even_weight3();
  std::vector<Element> good{1, 0, 1}, bad{1, 0, 0};
  CHECK(c.contains(good));
  CHECK_FALSE(c.contains(bad));
}

TEST_CASE("randomized calculus laws") {
  Rng rng(17);
  for (unsigned q : {2u, 3u}) {
    Field f(q);
    for (int trial = 0; trial < 80; ++trial) {
      std::size_t n = uniform(rng, 1, 8);
      auto c = random_code(f, n, uniform(rng, 0, n), rng);
      auto j = random_subset(c.labels(), uniform(rng, 0, n), rng);
      auto jbar = complement(c, j);
      auto cs = cross_section(c, j);
      CHECK(cs.dim() == c.dim() - project(c, jbar).dim());
      CHECK(dual(cs) == project(dual(c), j));
      CHECK(dual(project(c, j)) == cross_section(dual(c), j));
      CHECK(is_subcode(cs, project(c, j)));
      // Two construction paths to the same code.
      auto scrambled = c.reordered(std::vector<CoordLabel>(c.labels().rbegin(), c.labels().rend()));
      CHECK(scrambled == c);
      CHECK(dual(dual(c)) == c);
    }
  }
}

TEST_CASE("Gray enumeration visits each codeword once") {
  Rng rng(2);
  auto c = random_code(Field(3), 5, 3, rng);
  std::size_t visits = 0;
  std::set<std::vector<Element>> seen;
  for_each_codeword(c, [&](std::span<const Element> w) {
    ++visits;
    seen.emplace(w.begin(), w.end());
    CHECK(c.contains(w));
  });
  std::size_t expect = 1;
  for (std::size_t i = 0; i < c.dim(); ++i) expect *= 3;
  CHECK(visits == expect);
  CHECK(seen.size() == expect);
}
