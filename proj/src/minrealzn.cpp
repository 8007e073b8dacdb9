#include "treecode/minrealzn.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <string>

#include "treecode/error.hpp"
#include "treecode/rsum.hpp"

namespace treecode {

EdgeId choose_edge(const Tree& t) {
  for (EdgeId e = 0; e < t.edge_count(); ++e)
    if (t.is_leaf(t.edge(e).first) || t.is_leaf(t.edge(e).second)) return e;
  throw Error("choose_edge: the tree has no edges");
}

std::size_t r_max_of(const LinearCode& c, const IndexTreeDecomposition& td) {
  std::size_t best = 0;
  for (EdgeId e = 0; e < td.tree().edge_count(); ++e)
    best = std::max(best, split_rank(c, split(td, e).inside));
  return best;
}

namespace {

// A pending piece: a code on the labels placed on `vertices` of the original
// tree, with `place[i]` the vertex of code.labels()[i].
struct Piece {
  LinearCode code;
  std::vector<bool> vertices;
  std::vector<Vertex> place;
};

std::size_t inner_degree(const Tree& t, const std::vector<bool>& in, Vertex v) {
  std::size_t d = 0;
  for (EdgeId e : t.incident(v)) d += in[t.other_end(e, v)];
  return d;
}

}  // namespace

MinRealznResult min_realzn(const LinearCode& c, const IndexTreeDecomposition& td,
                           EdgeChoice choice) {
  {
    std::set<CoordLabel> a(c.labels().begin(), c.labels().end());
    std::set<CoordLabel> b(td.labels().begin(), td.labels().end());
    if (a != b) throw Error("min_realzn: decomposition is not on the code's index set");
  }
  const Tree& t = td.tree();
  const Field& f = c.field();
  BuildTrace trace;
  trace.r_max = r_max_of(c, td);

  std::vector<std::optional<LinearCode>> states(t.edge_count()), constraints(t.vertex_count());

  std::deque<Piece> work;
  {
    Piece root{c, std::vector<bool>(t.vertex_count(), true), {}};
    for (auto l : c.labels()) root.place.push_back(td.vertex_of(l));
    work.push_back(std::move(root));
  }

  while (!work.empty()) {
    Piece piece = std::move(work.front());
    work.pop_front();

    // Edges of the piece's subtree, and the chosen one.
    std::optional<EdgeId> chosen;
    Vertex leaf = 0;
    for (EdgeId e = 0; e < t.edge_count() && !chosen; ++e) {
      auto [a, b] = t.edge(e);
      if (!piece.vertices[a] || !piece.vertices[b]) continue;
      if (choice == EdgeChoice::general) {
        chosen = e;
      } else if (inner_degree(t, piece.vertices, b) == 1) {
        chosen = e;
        leaf = b;
      } else if (inner_degree(t, piece.vertices, a) == 1) {
        chosen = e;
        leaf = a;
      }
    }
    if (!chosen) {
      // Single vertex: the piece is its local constraint.
      auto v = static_cast<Vertex>(std::find(piece.vertices.begin(), piece.vertices.end(), true) -
                                   piece.vertices.begin());
      constraints[v] = piece.code;
      continue;
    }

    const EdgeId e = *chosen;
    // Side one keeps C1 (on J ∪ I_Δ), side two gets C2 (on I_Δ ∪ J̄).
    Vertex end_two = choice == EdgeChoice::leaf ? leaf : t.edge(e).second;
    Vertex end_one = t.other_end(e, end_two);
    std::vector<bool> side_one = t.side(e, end_one), side_two(t.vertex_count(), false);
    for (Vertex v = 0; v < t.vertex_count(); ++v) {
      side_one[v] = side_one[v] && piece.vertices[v];
      side_two[v] = piece.vertices[v] && !side_one[v];
    }
    std::vector<CoordLabel> j;
    for (std::size_t i = 0; i < piece.place.size(); ++i)
      if (side_one[piece.place[i]]) j.push_back(piece.code.labels()[i]);

    std::optional<RSumDecomposition> d;
    try {
      d = rsum_decompose(piece.code, j);
    } catch (const Error& err) {
      throw InternalError(std::string("min_realzn: r-sum side condition failed: ") + err.what());
    }
    trace.steps.push_back({e, d->r, piece.code.length(), piece.code.dim(), d->delta.labels.size()});
    if (d->r > trace.r_max) throw InternalError("min_realzn: r exceeds r_max");

    states[e] = d->delta.r == 0 ? LinearCode::zero(f, {}) : d->delta.code();

    auto placed = [&](const LinearCode& code, Vertex delta_vertex) {
      std::vector<Vertex> place;
      std::set<CoordLabel> delta(d->delta.labels.begin(), d->delta.labels.end());
      for (auto l : code.labels()) {
        if (delta.count(l)) {
          place.push_back(delta_vertex);
          continue;
        }
        auto pos = piece.code.position(l);
        place.push_back(piece.place[*pos]);
      }
      return place;
    };
    Piece one{d->c1, side_one, placed(d->c1, end_one)};
    Piece two{d->c2, side_two, placed(d->c2, end_two)};
    // Finish the leaf first so the queue never holds more than one open piece.
    work.push_front(std::move(one));
    work.push_front(std::move(two));
  }

  std::vector<LinearCode> s, cv;
  for (auto& x : states) s.push_back(std::move(*x));
  for (auto& x : constraints) cv.push_back(std::move(*x));
  return MinRealznResult{TreeRealization(td, std::move(s), std::move(cv)), std::move(trace)};
}

}  // namespace treecode
