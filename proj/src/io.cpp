#include "treecode/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "treecode/error.hpp"

namespace treecode {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(const char* what, const Line& line, const std::string& msg) {
  throw Error(std::string(what) + " line " + std::to_string(line.number) + ": " + msg);
}

template <class T>
T parse_number(const char* what, const Line& line, const std::string& token) {
  T value{};
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size())
    fail(what, line, "bad number '" + token + "'");
  return value;
}

void expect_size(const char* what, const Line& line, std::size_t n) {
  if (line.tokens.size() != n)
    fail(what, line, "expected " + std::to_string(n - 1) + " values after '" + line.tokens[0] + "'");
}

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw InternalError("format_double failed");
  return std::string(buf, end);
}

}  // namespace

LinearCode read_code(std::string_view text) {
  const char* what = "code";
  auto lines = tokenize(text);
  if (lines.size() < 2 || lines[0].tokens[0] != "q" || lines[1].tokens[0] != "labels")
    throw Error("code: expected 'q <prime>' then 'labels ...'");
  expect_size(what, lines[0], 2);
  unsigned q = parse_number<unsigned>(what, lines[0], lines[0].tokens[1]);
  if (!is_prime(q)) fail(what, lines[0], "q must be prime");
  Field field(q);
  std::vector<std::uint32_t> ids;
  for (std::size_t i = 1; i < lines[1].tokens.size(); ++i)
    ids.push_back(parse_number<std::uint32_t>(what, lines[1], lines[1].tokens[i]));
  std::vector<std::vector<long long>> rows;
  for (std::size_t l = 2; l < lines.size(); ++l) {
    if (lines[l].tokens.size() != ids.size()) fail(what, lines[l], "row length differs from label count");
    std::vector<long long> row;
    for (const auto& t : lines[l].tokens) row.push_back(parse_number<long long>(what, lines[l], t));
    rows.push_back(row);
  }
  auto labels = labels_from_ids(ids);
  return LinearCode(field, labels, Matrix::from_rows(field, ids.size(), rows));
}

std::string write_code(const LinearCode& c) {
  std::ostringstream out;
  out << "q " << c.field().order() << "\nlabels";
  for (auto l : c.labels()) out << ' ' << l.id;
  out << '\n';
  const Matrix& g = c.generator();
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t j = 0; j < g.cols(); ++j) out << (j ? " " : "") << unsigned(g.at(r, j));
    out << '\n';
  }
  return out.str();
}

IndexTreeDecomposition read_tree(std::string_view text) {
  const char* what = "tree";
  auto lines = tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "vertices") throw Error("tree: expected 'vertices <n>' first");
  expect_size(what, lines[0], 2);
  auto n = parse_number<std::size_t>(what, lines[0], lines[0].tokens[1]);
  std::vector<TreeEdge> edges;
  std::vector<std::uint32_t> ids;
  std::vector<Vertex> placement;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto& line = lines[l];
    if (line.tokens[0] == "edge") {
      expect_size(what, line, 3);
      edges.emplace_back(parse_number<std::size_t>(what, line, line.tokens[1]),
                         parse_number<std::size_t>(what, line, line.tokens[2]));
    } else if (line.tokens[0] == "omega") {
      expect_size(what, line, 3);
      ids.push_back(parse_number<std::uint32_t>(what, line, line.tokens[1]));
      placement.push_back(parse_number<std::size_t>(what, line, line.tokens[2]));
    } else {
      fail(what, line, "unknown keyword '" + line.tokens[0] + "'");
    }
  }
  return IndexTreeDecomposition(Tree(n, edges), labels_from_ids(ids), placement);
}

std::string write_tree(const IndexTreeDecomposition& td) {
  std::ostringstream out;
  out << "vertices " << td.tree().vertex_count() << '\n';
  for (auto [u, v] : td.tree().edges()) out << "edge " << u << ' ' << v << '\n';
  for (std::size_t i = 0; i < td.labels().size(); ++i)
    out << "omega " << td.labels()[i].id << ' ' << td.placement()[i] << '\n';
  return out.str();
}

Multigraph read_graph(std::string_view text) {
  const char* what = "graph";
  std::vector<std::uint32_t> ids;
  std::map<std::uint32_t, std::size_t> position;
  struct Pending {
    const Line* line;
    std::uint32_t label, u, v;
  };
  std::vector<Pending> pending;
  auto lines = tokenize(text);
  for (const auto& line : lines) {
    if (line.tokens[0] == "vertex") {
      expect_size(what, line, 2);
      auto id = parse_number<std::uint32_t>(what, line, line.tokens[1]);
      if (!position.emplace(id, ids.size()).second) fail(what, line, "duplicate vertex id");
      ids.push_back(id);
    } else if (line.tokens[0] == "edge") {
      expect_size(what, line, 4);
      pending.push_back({&line, parse_number<std::uint32_t>(what, line, line.tokens[1]),
                         parse_number<std::uint32_t>(what, line, line.tokens[2]),
                         parse_number<std::uint32_t>(what, line, line.tokens[3])});
    } else {
      fail(what, line, "unknown keyword '" + line.tokens[0] + "'");
    }
  }
  std::vector<GraphEdge> edges;
  for (const auto& p : pending) {
    auto u = position.find(p.u), v = position.find(p.v);
    if (u == position.end() || v == position.end()) fail(what, *p.line, "edge endpoint is not a declared vertex");
    std::uint32_t label_id[] = {p.label};
    edges.push_back({u->second, v->second, labels_from_ids(label_id)[0]});
  }
  return Multigraph(ids, edges);
}

std::string write_graph(const Multigraph& g) {
  std::ostringstream out;
  const auto& ids = g.vertex_ids();
  for (auto id : ids) out << "vertex " << id << '\n';
  for (const auto& e : g.edges()) out << "edge " << e.label.id << ' ' << ids[e.u] << ' ' << ids[e.v] << '\n';
  return out.str();
}

ChannelObservation read_costs(std::string_view text, unsigned q, std::vector<CoordLabel> labels) {
  const char* what = "costs";
  auto lines = tokenize(text);
  if (lines.size() != labels.size())
    throw Error("costs: " + std::to_string(lines.size()) + " lines for " + std::to_string(labels.size()) +
                " coordinates");
  ChannelObservation obs{q, std::move(labels), {}};
  for (const auto& line : lines) {
    if (line.tokens.size() != q) fail(what, line, "expected " + std::to_string(q) + " costs");
    std::vector<double> row;
    for (const auto& t : line.tokens) row.push_back(parse_number<double>(what, line, t));
    obs.costs.push_back(row);
  }
  validate(obs);
  return obs;
}

std::string write_costs(const ChannelObservation& obs) {
  std::ostringstream out;
  for (const auto& row : obs.costs) {
    for (std::size_t a = 0; a < row.size(); ++a) out << (a ? " " : "") << format_double(row[a]);
    out << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << contents;
  if (!out) throw Error("write failed: " + path);
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(unsigned(m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const std::vector<CoordLabel>& labels) {
  Json out = Json::array();
  for (auto l : labels) out.push_back(l.id);
  return out;
}

Json to_json(const LinearCode& c) {
  return {{"q", c.field().order()},
          {"n", c.length()},
          {"k", c.dim()},
          {"labels", to_json(c.labels())},
          {"generator", to_json(c.generator())}};
}

Json to_json(const IndexTreeDecomposition& td) {
  Json edges = Json::array();
  for (auto [u, v] : td.tree().edges()) edges.push_back({u, v});
  Json omega = Json::array();
  for (std::size_t i = 0; i < td.labels().size(); ++i) omega.push_back({td.labels()[i].id, td.placement()[i]});
  return {{"vertices", td.tree().vertex_count()}, {"edges", edges}, {"omega", omega}};
}

Json to_json(const GraphTreeDecomposition& gtd) {
  Json edges = Json::array();
  for (auto [u, v] : gtd.tree.edges()) edges.push_back({u, v});
  return {{"vertices", gtd.tree.vertex_count()}, {"edges", edges}, {"bags", gtd.bags}};
}

Json to_json(const DimensionProfile& p) { return {{"states", p.states}, {"constraints", p.constraints}}; }

Json to_json(const TreeRealization& r) {
  Json states = Json::array(), constraints = Json::array();
  for (const auto& s : r.states()) states.push_back(to_json(s.labels()));
  for (const auto& c : r.constraints()) constraints.push_back(to_json(c));
  return {{"decomposition", to_json(r.decomposition())},
          {"profile", to_json(r.profile())},
          {"state_labels", states},
          {"constraints", constraints}};
}

Json to_json(const BuildTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"edge", s.edge}, {"r", s.r}, {"length", s.length}, {"dim", s.dim},
                     {"delta_length", s.delta_length}});
  return {{"r_max", t.r_max}, {"steps", steps}};
}

Json to_json(const RSumDecomposition& d) {
  return {{"r", d.r},
          {"c1", to_json(d.c1)},
          {"c2", to_json(d.c2)},
          {"delta_labels", to_json(d.delta.labels)},
          {"simplex", to_json(d.delta.d)}};
}

Json to_json(const WidthReport& w) {
  Json out = {{"measure", w.measure},
              {"value", w.value},
              {"method", w.method},
              {"search_space", w.search_space}};
  if (w.decomposition) out["decomposition"] = to_json(*w.decomposition);
  if (!w.ordering.empty()) out["ordering"] = to_json(w.ordering);
  if (w.graph_decomposition) out["graph_decomposition"] = to_json(*w.graph_decomposition);
  if (!w.note.empty()) out["note"] = w.note;
  return out;
}

Json to_json(const SandwichTally& s) {
  return {{"evaluated", s.evaluated},
          {"kappa_below_sigma", s.below},
          {"kappa_above_2sigma", s.above},
          {"kappa_above_2sigma_with_sigma_0", s.above_degenerate}};
}

Json to_json(const Multigraph& g) {
  Json edges = Json::array();
  const auto& ids = g.vertex_ids();
  for (const auto& e : g.edges()) edges.push_back({e.label.id, ids[e.u], ids[e.v]});
  return {{"vertices", ids}, {"edges", edges}};
}

Json to_json(const YbarParameters& p) {
  Json out = {{"i", p.i}, {"n", p.n}, {"k", p.k}};
  out["d"] = p.d ? Json(*p.d) : Json(nullptr);
  out["expected"] = {p.expected_n, p.expected_k, p.expected_d};
  out["matches"] = p.matches();
  return out;
}

Json to_json(const DecodeResult& d) {
  Json word = Json::array();
  for (auto x : d.codeword) word.push_back(unsigned(x));
  return {{"labels", to_json(d.labels)}, {"codeword", word},      {"cost", d.cost},
          {"tie_broken", d.tie_broken},  {"passes", d.passes},    {"vertex_ops", d.vertex_ops}};
}

Json to_json(const ComplexityProfile& p) {
  Json vertices = Json::array();
  for (const auto& v : p.vertices) {
    Json j = {{"vertex", v.vertex}, {"degree", v.degree}, {"constraint_dim", v.constraint_dim}};
    j["modeled"] = v.modeled ? Json(*v.modeled) : Json(nullptr);
    j["measured"] = v.measured ? Json(*v.measured) : Json(nullptr);
    vertices.push_back(j);
  }
  return {{"cubic_leaf_bijective", p.cubic_leaf_bijective},
          {"t", p.t},
          {"node_bound", p.node_bound},
          {"total_model", p.total_model},
          {"total_bound", p.total_bound},
          {"within_bound", p.within_bound},
          {"measured_within_model", p.measured_within_model},
          {"vertices", vertices}};
}

}  // namespace treecode
