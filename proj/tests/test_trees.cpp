#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "treecode/error.hpp"
#include "treecode/random.hpp"
#include "treecode/trees.hpp"

using namespace treecode;

namespace {

std::set<CoordLabel> as_set(const std::vector<CoordLabel>& v) { return {v.begin(), v.end()}; }

// Canonical form of a leaf-labeled tree: for every edge, the side holding
// leaf 0 as a set of leaves.
std::set<std::set<std::size_t>> splits(const std::vector<TreeEdge>& edges, std::size_t leaves) {
  std::size_t n = leaves <= 2 ? leaves : 2 * leaves - 2;
  Tree t(n, edges);
  std::set<std::set<std::size_t>> out;
  for (EdgeId e = 0; e < t.edge_count(); ++e) {
    auto side = t.side(e, t.edge(e).first);
    std::set<std::size_t> s;
    for (std::size_t l = 0; l < leaves; ++l)
      if (side[l] != side[0]) s.insert(l);
    out.insert(s);
  }
  return out;
}

}  // namespace

TEST_CASE("tree validation") {
  CHECK_THROWS_AS(Tree(3, {{0, 1}}), Error);
  CHECK_THROWS_AS(Tree(4, {{0, 1}, {1, 0}, {2, 3}}), Error);
  CHECK_THROWS_AS(Tree(0, {}), Error);
  CHECK(Tree::single_vertex().edge_count() == 0);
  CHECK(Tree::path(4).is_path());
  CHECK(Tree::star(3).is_cubic());
  CHECK_FALSE(Tree::star(4).is_cubic());
  CHECK(Tree::path(4).path_between(0, 3) == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("edge splits") {
  auto l = fresh_labels(3);
  IndexTreeDecomposition one_edge(Tree::path(2), {l[0], l[1]}, {0, 1});
  auto s = split(one_edge, 0);
  CHECK(s.inside == std::vector<CoordLabel>{l[0]});
  CHECK(s.outside == std::vector<CoordLabel>{l[1]});

  IndexTreeDecomposition path(Tree::path(3), l, {0, 1, 2});
  s = split(path, 0);
  CHECK(s.inside == std::vector<CoordLabel>{l[0]});
  CHECK(s.outside == std::vector<CoordLabel>{l[1], l[2]});
  auto away = split_away_from(path, 0, 0);
  CHECK(away.inside == std::vector<CoordLabel>{l[1], l[2]});

  auto m = fresh_labels(4);
  IndexTreeDecomposition star(Tree::star(3), m, {0, 1, 2, 3});
  s = split_away_from(star, 1, 0);
  CHECK(s.inside == std::vector<CoordLabel>{m[2]});
  CHECK(as_set(s.outside) == std::set<CoordLabel>{m[0], m[1], m[3]});
  CHECK_THROWS_AS(split(star, 7), Error);

  Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    auto labels = fresh_labels(uniform(rng, 1, 9));
    auto td = random_decomposition(random_tree(uniform(rng, 2, 7), rng), labels, rng);
    for (EdgeId e = 0; e < td.tree().edge_count(); ++e) {
      auto sp = split(td, e);
      auto a = as_set(sp.inside), b = as_set(sp.outside);
      CHECK(a.size() + b.size() == labels.size());
      for (auto x : a) CHECK_FALSE(b.count(x));
    }
  }
}

TEST_CASE("cubic tree enumeration") {
  auto l3 = fresh_labels(3);
  std::size_t count = 0;
  for_each_cubic_decomposition(l3, [&](const IndexTreeDecomposition& td) {
    ++count;
    CHECK(td.tree().vertex_count() == 4);
  });
  CHECK(count == 1);
  for (std::size_t n : {4u, 5u}) {
    auto l = fresh_labels(n);
    count = 0;
    for_each_cubic_decomposition(l, [&](const IndexTreeDecomposition&) { ++count; });
    CHECK(count == (n == 4 ? 3u : 15u));
  }
  for (std::size_t n = 3; n <= 8; ++n) {
    std::set<std::set<std::set<std::size_t>>> distinct;
    std::uint64_t total = 0;
    for_each_cubic_tree(n, [&](const std::vector<TreeEdge>& edges) {
      ++total;
      Tree t(2 * n - 2, edges);
      CHECK(t.is_cubic());
      for (std::size_t leaf = 0; leaf < n; ++leaf) CHECK(t.is_leaf(leaf));
      distinct.insert(splits(edges, n));
    });
    CHECK(total == cubic_tree_count(n));
    CHECK(distinct.size() == total);
  }
  CHECK(cubic_tree_count(8) == 10395);
  auto big = fresh_labels(11);
  CHECK_THROWS_AS(for_each_cubic_decomposition(big, [](const IndexTreeDecomposition&) {}), Error);
}

TEST_CASE("path decomposition enumeration") {
  for (auto [n, expect] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 1}, {4, 12}}) {
    auto l = fresh_labels(n);
    std::size_t count = 0;
    for_each_path_decomposition(l, [&](const IndexTreeDecomposition& td) {
      ++count;
      CHECK(td.tree().is_path());
    });
    CHECK(count == expect);
  }
}

TEST_CASE("graph decomposition checks") {
  // Rooted tree: bag of the root is {r}, every other node holds itself and its parent.
  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t n = uniform(rng, 2, 9);
    Tree t = random_tree(n, rng);
    std::vector<GraphEdge> ge;
    for (auto [a, b] : t.edges()) ge.push_back({a, b, fresh_label()});
    auto g = Multigraph::with_vertices(n, ge);
    std::vector<std::size_t> parent(n, n);
    std::vector<std::size_t> order{0};
    parent[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (EdgeId e : t.incident(order[i])) {
        auto w = t.other_end(e, order[i]);
        if (parent[w] == n) {
          parent[w] = order[i];
          order.push_back(w);
        }
      }
    GraphTreeDecomposition gtd{t, {}};
    for (std::size_t x = 0; x < n; ++x)
      gtd.bags.push_back(x == 0 ? std::vector<std::size_t>{0} : std::vector<std::size_t>{x, parent[x]});
    auto r = check_graph_decomposition(g, gtd);
    CHECK(r.valid);
    CHECK(r.width == 1);
  }

  auto tri = Multigraph::with_vertices(
      3, {{0, 1, fresh_label()}, {1, 2, fresh_label()}, {0, 2, fresh_label()}});
  GraphTreeDecomposition all{Tree::single_vertex(), {{0, 1, 2}}};
  auto r = check_graph_decomposition(tri, all);
  CHECK(r.valid);
  CHECK(r.width == 2);
  GraphTreeDecomposition bad{Tree::path(2), {{0, 1}, {1, 2}}};
  r = check_graph_decomposition(tri, bad);
  CHECK_FALSE(r.valid);
  CHECK(r.violation == "T2");
  CHECK(r.witness.find("{0,2}") != std::string::npos);

  GraphTreeDecomposition split_vertex{Tree::path(3), {{0, 1}, {1, 2}, {0, 2}}};
  r = check_graph_decomposition(tri, split_vertex);
  CHECK(r.violation == "T3");
  GraphTreeDecomposition missing{Tree::single_vertex(), {{0, 1}}};
  CHECK(check_graph_decomposition(tri, missing).violation == "T1");
}

TEST_CASE("T3 and its connectivity form agree") {
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t nodes = uniform(rng, 1, 6), verts = uniform(rng, 1, 5);
    GraphTreeDecomposition gtd{random_tree(nodes, rng), {}};
    for (std::size_t x = 0; x < nodes; ++x) {
      std::vector<std::size_t> bag;
      for (std::size_t v = 0; v < verts; ++v)
        if (uniform(rng, 0, 2) == 0) bag.push_back(v);
      gtd.bags.push_back(bag);
    }
    CHECK(satisfies_t3_paths(gtd, verts) == satisfies_t3_connected(gtd, verts));
  }
}
