#include "treecode/decode.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>

#include "treecode/error.hpp"

namespace treecode {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Segment {
  EdgeId edge;
  std::size_t offset, length;
  bool to_parent;
};

struct Local {
  std::size_t length = 0;
  std::size_t count = 0;
  std::vector<Element> words;        // count * length, enumeration order
  std::vector<std::size_t> symbols;  // observation index of each leading position
  std::vector<Segment> segments;
};

using Message = std::unordered_map<std::string, double>;

class Decoder {
 public:
  Decoder(const TreeRealization& r, const ChannelObservation& obs) : r_(r), obs_(obs) {
    validate(obs);
    if (obs.q != r.field().order()) throw Error("decode: observation alphabet does not match the field");
    const auto& td = r.decomposition();
    if (td.labels().size() != obs.labels.size())
      throw Error("decode: observation and realization index sets differ");
    std::map<CoordLabel, std::size_t> index;
    for (std::size_t i = 0; i < obs.labels.size(); ++i) index[obs.labels[i]] = i;

    const Tree& t = r.tree();
    const std::size_t nv = t.vertex_count();
    root_ = 0;
    for (Vertex v = 1; v < nv; ++v)
      if (t.degree(v) > t.degree(root_)) root_ = v;
    parent_.assign(nv, nv);
    parent_edge_.assign(nv, 0);
    parent_[root_] = root_;
    order_.assign(1, root_);
    for (std::size_t i = 0; i < order_.size(); ++i)
      for (EdgeId e : t.incident(order_[i])) {
        Vertex w = t.other_end(e, order_[i]);
        if (parent_[w] != nv) continue;
        parent_[w] = order_[i];
        parent_edge_[w] = e;
        order_.push_back(w);
      }

    local_.resize(nv);
    for (Vertex v = 0; v < nv; ++v) {
      Local& l = local_[v];
      std::vector<CoordLabel> layout = td.labels_at(v);
      for (EdgeId e : t.incident(v))
        for (CoordLabel s : r.state(e).labels()) layout.push_back(s);
      constraints_.push_back(r.constraint(v).reordered(layout));
      const LinearCode& cv = constraints_.back();
      auto count = codeword_count(cv, kDecodeEnumerationBound);
      if (!count) throw Error("decode: local constraint at vertex " + std::to_string(v) + " is too large");
      l.length = cv.length();
      l.count = std::size_t(*count);
      l.words.reserve(l.count * l.length);
      for_each_codeword(cv, [&](std::span<const Element> w) { l.words.insert(l.words.end(), w.begin(), w.end()); });
      for (CoordLabel label : td.labels_at(v)) {
        auto it = index.find(label);
        if (it == index.end()) throw Error("decode: coordinate missing from the observation");
        l.symbols.push_back(it->second);
      }
      std::size_t offset = l.symbols.size();
      for (EdgeId e : t.incident(v)) {
        std::size_t len = r.state(e).length();
        l.segments.push_back({e, offset, len, v != root_ && e == parent_edge_[v]});
        offset += len;
      }
    }
  }

  // Upward min-sum; returns the minimum total cost (kInf when nothing fits).
  double upward(const std::vector<std::vector<double>>& costs, std::vector<std::uint64_t>* ops) {
    messages_.assign(r_.tree().edge_count(), {});
    double best = kInf;
    if (ops) ops->assign(local_.size(), 0);
    for (std::size_t i = order_.size(); i-- > 0;) {
      Vertex v = order_[i];
      const Local& l = local_[v];
      std::size_t terms = l.symbols.size() + l.segments.size() - (v == root_ ? 0 : 1);
      if (ops) (*ops)[v] = std::uint64_t(l.count) * std::max<std::size_t>(terms, 1);
      for (std::size_t w = 0; w < l.count; ++w) {
        const Element* word = l.words.data() + w * l.length;
        double total = subtotal(l, word, costs);
        if (total == kInf) continue;
        if (v == root_) {
          best = std::min(best, total);
          continue;
        }
        const Segment& up = parent_segment(l);
        auto [it, fresh] = messages_[up.edge].try_emplace(key(word, up), total);
        if (!fresh) it->second = std::min(it->second, total);
      }
    }
    return best;
  }

  // Downward pass after upward(costs): picks, vertex by vertex, the first
  // local codeword that attains the message value. Returns the symbols in
  // observation order and checks every local constraint.
  std::vector<Element> downward(const std::vector<std::vector<double>>& costs, double best) {
    // Zero-length local words have a null data pointer, so track found ones apart.
    std::vector<const Element*> chosen(local_.size(), nullptr);
    std::vector<bool> found(local_.size(), false);
    std::vector<Element> out(obs_.labels.size(), 0);
    for (Vertex v : order_) {
      const Local& l = local_[v];
      std::string want;
      double target = best;
      if (v != root_) {
        const Local& pl = local_[parent_[v]];
        for (const auto& s : pl.segments)
          if (s.edge == parent_edge_[v]) want = key(chosen[parent_[v]], s);
        target = messages_[parent_edge_[v]].at(want);
      }
      for (std::size_t w = 0; w < l.count && !found[v]; ++w) {
        const Element* word = l.words.data() + w * l.length;
        if (v != root_ && key(word, parent_segment(l)) != want) continue;
        if (subtotal(l, word, costs) == target) {
          chosen[v] = word;
          found[v] = true;
        }
      }
      if (!found[v]) throw InternalError("decode: downward pass found no consistent local codeword");
      for (std::size_t s = 0; s < l.symbols.size(); ++s) out[l.symbols[s]] = chosen[v][s];
    }
    // Each chosen local word is a codeword of C_v and neighbors agree on every
    // state, so the configuration lies in the full behavior.
    for (Vertex v = 0; v < local_.size(); ++v)
      if (!constraints_[v].contains(std::span<const Element>(chosen[v], local_[v].length)))
        throw InternalError("decode: configuration violates a local constraint");
    return out;
  }

 private:
  const Segment& parent_segment(const Local& l) const {
    for (const auto& s : l.segments)
      if (s.to_parent) return s;
    throw InternalError("decode: missing parent edge");
  }

  static std::string key(const Element* word, const Segment& s) {
    if (s.length == 0) return {};
    return std::string(reinterpret_cast<const char*>(word + s.offset), s.length);
  }

  double subtotal(const Local& l, const Element* word, const std::vector<std::vector<double>>& costs) const {
    double total = 0;
    for (std::size_t s = 0; s < l.symbols.size(); ++s) total += costs[l.symbols[s]][word[s]];
    if (total == kInf) return kInf;
    for (const auto& s : l.segments) {
      if (s.to_parent) continue;
      const Message& m = messages_[s.edge];
      auto it = m.find(key(word, s));
      if (it == m.end()) return kInf;
      total += it->second;
    }
    return total;
  }

  const TreeRealization& r_;
  const ChannelObservation& obs_;
  Vertex root_ = 0;
  std::vector<Vertex> order_, parent_;
  std::vector<EdgeId> parent_edge_;
  std::vector<Local> local_;
  std::vector<LinearCode> constraints_;  // columns in Local order
  std::vector<Message> messages_;
};

bool lex_less(const std::vector<Element>& a, const std::vector<Element>& b) { return a < b; }

}  // namespace

bool same_cost(double a, double b) {
  if (a == b) return true;
  if (!std::isfinite(a) || !std::isfinite(b)) return false;
  double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= 1e-9 * scale;
}

void validate(const ChannelObservation& obs) {
  if (obs.costs.size() != obs.labels.size()) throw Error("observation: one cost row per coordinate");
  std::map<CoordLabel, int> seen;
  for (std::size_t i = 0; i < obs.labels.size(); ++i) {
    if (seen[obs.labels[i]]++) throw Error("observation: duplicate coordinate label");
    if (obs.costs[i].size() != obs.q) throw Error("observation: cost rows need q entries");
    for (double c : obs.costs[i])
      if (!std::isfinite(c) || c < 0) throw Error("observation: costs must be finite and non-negative");
  }
}

ChannelObservation hamming_costs(const Field& field, std::vector<CoordLabel> labels,
                                 const std::vector<Element>& received) {
  if (received.size() != labels.size()) throw Error("hamming_costs: length mismatch");
  ChannelObservation obs{field.order(), std::move(labels), {}};
  for (Element r : received) {
    std::vector<double> row(field.order(), 1.0);
    row.at(r) = 0.0;
    obs.costs.push_back(row);
  }
  return obs;
}

DecodeResult ml_decode(const TreeRealization& r, const ChannelObservation& obs) {
  Decoder dec(r, obs);
  DecodeResult out;
  out.labels = obs.labels;
  auto costs = obs.costs;
  out.cost = dec.upward(costs, &out.vertex_ops);
  out.passes = 1;
  if (out.cost == kInf) throw InternalError("decode: no configuration satisfies the realization");
  auto first = dec.downward(costs, out.cost);

  // Fix symbols left to right, smallest optimal value first.
  auto restricted = [&](std::size_t i, const std::vector<double>& row, Element a) {
    std::vector<double> only(obs.q, kInf);
    only[a] = row[a];
    costs[i] = only;
    ++out.passes;
    return same_cost(dec.upward(costs, nullptr), out.cost);
  };
  for (std::size_t i = 0; i < costs.size(); ++i) {
    const auto row = costs[i];
    std::optional<Element> fixed;
    for (Element a = 0; a < obs.q; ++a) {
      if (row[a] == kInf || !restricted(i, row, a)) continue;
      if (fixed) {
        out.tie_broken = true;
        break;
      }
      fixed = a;
      if (out.tie_broken) break;
    }
    if (!fixed) throw InternalError("decode: lost the optimum while fixing symbols");
    std::vector<double> only(obs.q, kInf);
    only[*fixed] = row[*fixed];
    costs[i] = only;
  }
  double final_cost = dec.upward(costs, nullptr);
  ++out.passes;
  out.codeword = dec.downward(costs, final_cost);
  if (!out.tie_broken && out.codeword != first)
    throw InternalError("decode: unique optimum differs from the two-pass result");
  return out;
}

DecodeResult brute_force_ml(const LinearCode& c, const ChannelObservation& obs) {
  validate(obs);
  if (obs.q != c.field().order()) throw Error("brute_force_ml: observation alphabet does not match the field");
  if (obs.labels.size() != c.length()) throw Error("brute_force_ml: index sets differ");
  auto pos = c.positions(obs.labels);
  if (!codeword_count(c, kDecodeEnumerationBound)) throw Error("brute_force_ml: code too large to enumerate");
  DecodeResult out;
  out.labels = obs.labels;
  bool any = false;
  std::vector<Element> word(obs.labels.size());
  for_each_codeword(c, [&](std::span<const Element> w) {
    double cost = 0;
    for (std::size_t i = 0; i < pos.size(); ++i) {
      word[i] = w[pos[i]];
      cost += obs.costs[i][word[i]];
    }
    if (!any) {
      any = true;
      out.cost = cost;
      out.codeword = word;
      return;
    }
    if (same_cost(cost, out.cost)) {
      out.tie_broken = true;
      if (lex_less(word, out.codeword)) {
        out.codeword = word;
        out.cost = cost;
      }
    } else if (cost < out.cost) {
      out.cost = cost;
      out.codeword = word;
      out.tie_broken = false;
    }
  });
  out.passes = 1;
  return out;
}

ComplexityProfile complexity_profile(const TreeRealization& r, const DecodeResult* measured) {
  ComplexityProfile p;
  const Tree& t = r.tree();
  const auto& td = r.decomposition();
  const unsigned q = r.field().order();
  auto power = [&](std::size_t e) {
    std::uint64_t x = 1;
    for (std::size_t i = 0; i < e; ++i) x *= q;
    return x;
  };
  bool bijective = true;
  std::size_t leaves = 0;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    std::size_t here = td.labels_at(v).size();
    if (t.vertex_count() > 1 && t.is_leaf(v)) {
      ++leaves;
      bijective = bijective && here == 1;
    } else {
      bijective = bijective && here == 0;
    }
  }
  p.cubic_leaf_bijective = t.vertex_count() > 1 && t.is_cubic() && bijective;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    VertexCost vc;
    vc.vertex = v;
    vc.degree = t.degree(v);
    vc.constraint_dim = r.constraint(v).dim();
    if (vc.degree >= 3) {
      vc.modeled = std::uint64_t(vc.degree * (vc.degree - 2)) * power(vc.constraint_dim);
      p.total_model += *vc.modeled;
    }
    if (vc.degree >= 2) p.t = std::max(p.t, vc.constraint_dim);
    if (measured && measured->vertex_ops.size() == t.vertex_count()) {
      vc.measured = measured->vertex_ops[v];
      if (vc.modeled && *vc.measured > *vc.modeled) p.measured_within_model = false;
    }
    p.vertices.push_back(vc);
  }
  p.node_bound = 3 * power(p.t);
  p.total_bound = leaves >= 2 ? (leaves - 2) * p.node_bound : 0;
  p.within_bound = p.total_model <= p.total_bound;
  for (const auto& vc : p.vertices)
    if (vc.modeled && *vc.modeled > p.node_bound) p.within_bound = false;
  return p;
}

}  // namespace treecode
