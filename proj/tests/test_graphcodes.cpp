#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "treecode/error.hpp"
#include "treecode/graphcodes.hpp"
#include "treecode/random.hpp"
#include "treecode/widths.hpp"

using namespace treecode;

namespace {

// Fundamental cycles of a spanning forest, as GF(2) edge indicator rows.
Matrix cycle_space(const Multigraph& g) {
  Field f2(2);
  const auto& edges = g.edges();
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> parent(n, n), parent_edge(n, 0), depth(n, 0);
  std::vector<bool> tree_edge(edges.size(), false);
  for (std::size_t root = 0; root < n; ++root) {
    if (parent[root] != n) continue;
    parent[root] = root;
    std::vector<std::size_t> queue{root};
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (std::size_t e = 0; e < edges.size(); ++e) {
        auto a = edges[e].u, b = edges[e].v;
        if (a != queue[i]) std::swap(a, b);
        if (a != queue[i] || parent[b] != n) continue;
        parent[b] = a;
        parent_edge[b] = e;
        depth[b] = depth[a] + 1;
        tree_edge[e] = true;
        queue.push_back(b);
      }
  }
  Matrix out(f2, 0, edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (tree_edge[e]) continue;
    std::vector<Element> row(edges.size(), 0);
    row[e] = 1;
    auto a = edges[e].u, b = edges[e].v;
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      row[parent_edge[a]] ^= 1;
      a = parent[a];
    }
    out.append_row(row);
  }
  return out;
}

// Same graph with its edge list shuffled.
Multigraph shuffled(const Multigraph& g, Rng& rng) {
  auto edges = g.edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  return Multigraph(g.vertex_ids(), edges);
}

}  // namespace

TEST_CASE("incidence codes") {
  Field f2(2), f3(3);
  auto single = path_graph(2);
  auto c = incidence_code(single, f2);
  CHECK(c.length() == 1);
  CHECK(c.dim() == 1);

  Rng rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    Tree t = random_tree(uniform(rng, 2, 10), rng);
    std::vector<GraphEdge> ge;
    for (auto [a, b] : t.edges()) ge.push_back({a, b, fresh_label()});
    auto g = Multigraph::with_vertices(t.vertex_count(), ge);
    CHECK(incidence_code(g, f2) == LinearCode::full(f2, g.edge_labels()));
  }

  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = uniform(rng, 1, 8);
    std::vector<GraphEdge> ge;
    for (std::size_t e = uniform(rng, 0, 10); e > 0; --e)
      ge.push_back({uniform(rng, 0, n - 1), uniform(rng, 0, n - 1), fresh_label()});
    auto g = Multigraph::with_vertices(n, ge);
    for (const Field& f : {f2, f3})
      CHECK(incidence_code(g, f).dim() == n - g.component_count());
    // Over GF(2) the dual is the cycle code.
    auto dual_code = dual(incidence_code(g, f2));
    CHECK(row_space_equal(dual_code.generator(), cycle_space(g)));
  }

  auto loop = Multigraph::with_vertices(2, {{0, 0, fresh_label()}, {0, 1, fresh_label()}});
  auto lc = incidence_code(loop, f3);
  CHECK(lc.length() == 2);
  CHECK(lc.dim() == 1);
  CHECK(project(lc, std::vector<CoordLabel>{loop.edges()[0].label}).dim() == 0);
  // Over GF(3) the head entry is -1 = 2.
  CHECK(lc.contains(std::vector<Element>{0, 1}));
}

TEST_CASE("the bar transform") {
  auto y1 = y_family(1);
  auto bar = g_bar(y1);
  CHECK(bar.vertex_count() == 5);
  CHECK(bar.edges().size() == 14);
  auto lone = g_bar(Multigraph::with_vertices(1, {}));
  CHECK(lone.vertex_count() == 2);
  CHECK(lone.edges().size() == 2);

  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = random_connected_graph(uniform(rng, 1, 7), uniform(rng, 0, 12), rng);
    auto b = g_bar(g);
    CHECK(b.vertex_count() == g.vertex_count() + 1);
    CHECK(b.edges().size() == 2 * g.adjacent_pairs().size() + 2 * g.vertex_count());
    for (const auto& e : b.edges()) CHECK(e.u != e.v);
  }
  // Loops are dropped, multiplicities collapse to exactly two.
  auto multi = Multigraph::with_vertices(
      2, {{0, 1, fresh_label()}, {0, 1, fresh_label()}, {0, 1, fresh_label()}, {1, 1, fresh_label()}});
  CHECK(g_bar(multi).edges().size() == 2 + 4);

  for (auto g : {y_family(1), path_graph(3), cycle_graph(3)})
    CHECK(graph_treewidth(g_bar(g)).value == graph_treewidth(g).value + 1);
}

TEST_CASE("the Y family") {
  std::size_t expect[] = {0, 4, 10, 22, 46};
  for (std::size_t i = 1; i <= 4; ++i) {
    auto y = y_family(i);
    CHECK(y.vertex_count() == expect[i]);
    CHECK(y.edges().size() == expect[i] - 1);
    CHECK(y.connected());
  }
  CHECK_THROWS_AS(y_family(0), Error);
  CHECK_THROWS_AS(y_family(9), Error);
  CHECK(graph_pathwidth(y_family(1)).value == 1);
  CHECK(graph_pathwidth(y_family(2)).value == 2);
  CHECK(graph_pathwidth(y_family(3)).value == 2);
  CHECK(graph_treewidth(y_family(3)).value == 1);
}

TEST_CASE("parameters of C[Ybar_i]") {
  Field f2(2);
  auto c1 = ybar_code(1, f2);
  CHECK(c1.parameters.n == 14);
  CHECK(c1.parameters.k == 4);
  CHECK(c1.parameters.d == std::optional<std::size_t>(4));
  CHECK(c1.parameters.matches());
  auto c2 = ybar_code(2, f2);
  CHECK(c2.parameters.n == 38);
  CHECK(c2.parameters.k == 10);
  CHECK(c2.parameters.d == std::optional<std::size_t>(4));
  auto c3 = ybar_code(3, Field(3));
  CHECK(c3.parameters.n == 86);
  CHECK(c3.parameters.k == 22);
  CHECK_FALSE(c3.parameters.d.has_value());
  CHECK(c3.parameters.matches());
}

TEST_CASE("non-isomorphic simple graphs") {
  std::size_t expect[] = {1, 1, 2, 4, 11, 34};
  for (std::size_t n = 0; n <= 5; ++n) CHECK(simple_graphs(n).size() == expect[n]);
  CHECK_THROWS_AS(simple_graphs(7), Error);
}

TEST_CASE("graph and code treewidth agree on small graphs") {
  std::vector<Multigraph> battery{path_graph(2), path_graph(3), path_graph(4), cycle_graph(3),
                                  cycle_graph(4), complete_graph(4), star_graph(3)};
  Rng rng(13);
  for (int i = 0; i < 8; ++i)
    battery.push_back(random_connected_graph(uniform(rng, 2, 5), uniform(rng, 1, 7), rng));
  for (const auto& g : battery)
    for (unsigned q : {2u, 3u}) {
      auto c = incidence_code(g, Field(q));
      CHECK(code_treewidth(c).value == graph_treewidth(g).value);
    }
  CHECK(code_treewidth(incidence_code(cycle_graph(3), Field(2))).value == 2);
}

TEST_CASE("trellis width of C[Gbar] is pathwidth + 1") {
  for (auto g : {path_graph(2), path_graph(3), star_graph(3), cycle_graph(3), cycle_graph(4)}) {
    auto c = incidence_code(g_bar(g), Field(2));
    CHECK(trellis_widths(c).sigma.value == graph_pathwidth(g).value + 1);
  }
}

TEST_CASE("widths ignore edge order and orientation") {
  Rng rng(29);
  for (int trial = 0; trial < 6; ++trial) {
    auto g = random_connected_graph(uniform(rng, 2, 5), uniform(rng, 1, 7), rng);
    auto c = incidence_code(g, Field(3));
    auto s = incidence_code(shuffled(g, rng), Field(3));
    CHECK(trellis_widths(c).sigma.value == trellis_widths(s).sigma.value);
    CHECK(code_treewidth(c).value == code_treewidth(s).value);
    // Flip the orientation of a random subset of edges.
    Matrix gen = c.generator();
    for (std::size_t j = 0; j < gen.cols(); ++j)
      if (uniform(rng, 0, 1))
        for (std::size_t r = 0; r < gen.rows(); ++r) gen.set(r, j, Field(3).neg(gen.at(r, j)));
    LinearCode flipped(Field(3), c.labels(), gen);
    CHECK(trellis_widths(flipped).kappa.value == trellis_widths(c).kappa.value);
    CHECK(code_branchwidth(flipped).value == code_branchwidth(c).value);
  }
}
