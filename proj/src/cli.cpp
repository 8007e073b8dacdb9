#include "treecode/cli.hpp"

#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "treecode/error.hpp"
#include "treecode/verify.hpp"

namespace treecode {

namespace {

bool is_scalar_array(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
}

void render(const Json& j, std::ostream& out, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_primitive() || is_scalar_array(value)) {
        out << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
      } else {
        out << pad << key << ":\n";
        render(value, out, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (item.is_primitive() || is_scalar_array(item)) {
        out << pad << "- " << item.dump() << '\n';
      } else {
        out << pad << "-\n";
        render(item, out, indent + 2);
      }
    }
  } else {
    out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

std::vector<CoordLabel> as_labels(const std::vector<std::uint32_t>& ids) {
  std::vector<CoordLabel> out;
  for (auto id : ids) out.push_back(CoordLabel{id});
  return out;
}

Json code_summary(const LinearCode& c) {
  Json j = to_json(c);
  auto count = codeword_count(c, kDefaultEnumerationBound);
  j["d"] = count && c.dim() > 0 ? Json(min_weight(c)) : Json(nullptr);
  return j;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tree realizations of linear codes: minimal realizations, widths, decoding."};
  app.name("treecode");
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  unsigned threads = 1;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--threads", threads, "Worker threads (results do not depend on it)")
      ->check(CLI::Range(1u, 256u));

  std::function<Json()> action;
  // Set by commands whose text form is not the generic JSON rendering.
  std::function<std::string(const Json&)> text;
  int status = 0;

  // code
  auto* code = app.add_subcommand("code", "Inspect and transform a code file");
  code->require_subcommand(1);
  std::string code_file, out_file;
  std::vector<std::uint32_t> label_ids;
  auto add_code_io = [&](CLI::App* sub, bool with_labels) {
    sub->add_option("--code", code_file, "Code file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out_file, "Write the resulting code file here");
    if (with_labels) sub->add_option("--labels", label_ids, "Coordinate labels")->required()->delimiter(',');
  };
  auto* code_show = code->add_subcommand("show", "Parameters and generator");
  code_show->add_option("--code", code_file, "Code file")->required()->check(CLI::ExistingFile);
  code_show->callback([&] { action = [&] { return code_summary(read_code(read_file(code_file))); }; });
  auto emit_code = [&](const LinearCode& c) {
    if (!out_file.empty()) write_file(out_file, write_code(c));
    return code_summary(c);
  };
  auto* code_dual = code->add_subcommand("dual", "Dual code");
  add_code_io(code_dual, false);
  code_dual->callback([&] { action = [&] { return emit_code(dual(read_code(read_file(code_file)))); }; });
  auto* code_project = code->add_subcommand("project", "Projection onto --labels");
  add_code_io(code_project, true);
  code_project->callback([&] {
    action = [&] { return emit_code(project(read_code(read_file(code_file)), as_labels(label_ids))); };
  });
  auto* code_cross = code->add_subcommand("cross-section", "Cross-section on --labels");
  add_code_io(code_cross, true);
  code_cross->callback([&] {
    action = [&] { return emit_code(cross_section(read_code(read_file(code_file)), as_labels(label_ids))); };
  });

  // rsum
  auto* rsum = app.add_subcommand("rsum", "Split a code as C1 (+)_r C2 along a coordinate subset");
  std::vector<std::uint32_t> split_ids;
  std::string out1, out2;
  rsum->add_option("--code", code_file, "Code file")->required()->check(CLI::ExistingFile);
  rsum->add_option("--split", split_ids, "Labels of J")->required()->delimiter(',');
  rsum->add_option("--out1", out1, "Write C1 here");
  rsum->add_option("--out2", out2, "Write C2 here");
  rsum->callback([&] {
    action = [&] {
      auto c = read_code(read_file(code_file));
      auto j = as_labels(split_ids);
      auto d = rsum_decompose(c, j);
      if (!out1.empty()) write_file(out1, write_code(d.c1));
      if (!out2.empty()) write_file(out2, write_code(d.c2));
      Json report = to_json(d);
      report["split_rank"] = split_rank(c, j);
      report["preconditions_hold"] = verify_rsum_preconditions(d);
      report["round_trip"] = s_sum(d.c1, d.c2) == c;
      return report;
    };
  });

  // realize
  auto* realize = app.add_subcommand("realize", "Build the minimal realization on a tree decomposition");
  std::string method = "min", tree_file, report_file, edge_choice = "leaf";
  realize->add_option("method", method, "min (recursive r-sums), formula, or merge (state merging)")
      ->check(CLI::IsMember({"min", "formula", "merge"}));
  realize->add_option("--code", code_file, "Code file")->required()->check(CLI::ExistingFile);
  realize->add_option("--tree", tree_file, "Tree file")->required()->check(CLI::ExistingFile);
  realize->add_option("--report", report_file, "Also write the JSON report here");
  realize->add_option("--edge-choice", edge_choice, "Edge order for min")->check(CLI::IsMember({"leaf", "general"}));
  realize->callback([&] {
    action = [&] {
      auto c = read_code(read_file(code_file));
      auto td = read_tree(read_file(tree_file));
      auto predicted = minimal_by_formula(c, td).predicted;
      Json report = {{"method", method}};
      std::optional<TreeRealization> r;
      if (method == "min") {
        auto m = min_realzn(c, td, edge_choice == "leaf" ? EdgeChoice::leaf : EdgeChoice::general);
        r = m.realization;
        report["trace"] = to_json(m.trace);
      } else if (method == "formula") {
        r = minimal_by_formula(c, td).realization;
      } else {
        auto run = minimize_by_merging(trivial_extension(c, td, 0));
        r = run.result;
        Json chain = Json::array();
        for (const auto& p : run.chain) chain.push_back(to_json(p));
        report["chain"] = chain;
      }
      report["realization"] = to_json(*r);
      report["minimal"] = r->profile() == predicted;
      report["realizes_code"] = realized_code(*r) == c;
      report["kappa"] = kappa(c, td);
      report["sigma"] = sigma(c, td);
      if (!report_file.empty()) write_file(report_file, report.dump(2) + "\n");
      return report;
    };
  });

  // width
  auto* width = app.add_subcommand("width", "Treewidth, branchwidth, trellis and graph widths");
  std::string measure, graph_file;
  std::size_t cap = 0;
  bool any_degree = false;
  width->add_option("measure", measure, "tree, branch, trellis, graph-tree or graph-path")
      ->required()
      ->check(CLI::IsMember({"tree", "branch", "trellis", "graph-tree", "graph-path"}));
  width->add_option("--code", code_file, "Code file")->check(CLI::ExistingFile);
  width->add_option("--graph", graph_file, "Graph file")->check(CLI::ExistingFile);
  width->add_option("--cap", cap, "Enumeration cap (default depends on the measure)");
  width->add_flag("--any-internal-degree", any_degree,
                  "branch: also search trees with internal degree >= 3 (experimental)");
  width->callback([&] {
    bool graph = measure.rfind("graph-", 0) == 0;
    if (graph && graph_file.empty()) throw CLI::RequiredError("--graph");
    if (!graph && code_file.empty()) throw CLI::RequiredError("--code");
    action = [&]() -> Json {
      if (measure == "graph-tree")
        return to_json(graph_treewidth(read_graph(read_file(graph_file)), cap ? cap : kDefaultGraphCap));
      if (measure == "graph-path")
        return to_json(graph_pathwidth(read_graph(read_file(graph_file)), cap ? cap : kDefaultGraphCap));
      auto c = read_code(read_file(code_file));
      if (measure == "trellis") {
        auto t = trellis_widths(c, cap ? cap : kDefaultSubsetCap, threads);
        return {{"sigma", to_json(t.sigma)}, {"kappa", to_json(t.kappa)}};
      }
      auto w = code_widths(c, cap ? cap : kDefaultCubicCap);
      Json j = to_json(measure == "tree" ? w.treewidth : w.branchwidth);
      j["sandwich"] = to_json(w.sandwich);
      if (measure == "branch" && any_degree) j["any_internal_degree"] = to_json(branchwidth_any_internal_degree(c));
      return j;
    };
  });

  // graph
  auto* graph = app.add_subcommand("graph", "Incidence codes, the bar transform and the Y family");
  std::string kind;
  std::size_t index = 1, max_d_index = 3;
  unsigned q = 2;
  graph->add_option("kind", kind, "code, bar, yfamily, or ybar (alias cor64)")
      ->required()
      ->check(CLI::IsMember({"code", "bar", "yfamily", "ybar", "cor64"}));
  graph->add_option("--graph", graph_file, "Graph file")->check(CLI::ExistingFile);
  graph->add_option("--i", index, "Index i of Y_i")->check(CLI::Range(std::size_t(1), kMaxYIndex));
  graph->add_option("--q", q, "Field order")->check(CLI::Range(2u, 251u));
  graph->add_option("--max-d-index", max_d_index, "ybar: compute d by enumeration up to this i");
  graph->add_option("--out", out_file, "Write the resulting code or graph file here");
  graph->callback([&] {
    if ((kind == "code" || kind == "bar") && graph_file.empty()) throw CLI::RequiredError("--graph");
    action = [&]() -> Json {
      if (!is_prime(q)) throw Error("--q must be prime");
      Field field(q);
      if (kind == "code") {
        auto c = incidence_code(read_graph(read_file(graph_file)), field);
        if (!out_file.empty()) write_file(out_file, write_code(c));
        return code_summary(c);
      }
      if (kind == "bar" || kind == "yfamily") {
        auto g = kind == "bar" ? g_bar(read_graph(read_file(graph_file))) : y_family(index);
        if (!out_file.empty()) write_file(out_file, write_graph(g));
        Json j = to_json(g);
        if (kind == "yfamily") {
          j["treewidth"] = graph_treewidth(g).value;
          j["pathwidth"] = graph_pathwidth(g).value;
        }
        return j;
      }
      auto yb = ybar_code(index, field, max_d_index);
      if (!out_file.empty()) write_file(out_file, write_code(yb.code));
      Json j = to_json(yb.parameters);
      j["q"] = q;
      return j;
    };
  });

  // decode
  auto* decode = app.add_subcommand("decode", "Minimum-cost codeword by min-sum on the minimal realization");
  std::string costs_file;
  bool check = false;
  decode->add_option("--code", code_file, "Code file")->required()->check(CLI::ExistingFile);
  decode->add_option("--tree", tree_file, "Tree file")->required()->check(CLI::ExistingFile);
  decode->add_option("--costs", costs_file, "Costs file")->required()->check(CLI::ExistingFile);
  decode->add_flag("--check", check, "Compare against exhaustive search");
  decode->callback([&] {
    action = [&] {
      auto c = read_code(read_file(code_file));
      auto td = read_tree(read_file(tree_file));
      auto obs = read_costs(read_file(costs_file), c.field().order(), td.labels());
      auto r = minimal_by_formula(c, td).realization;
      auto d = ml_decode(r, obs);
      Json j = to_json(d);
      j["complexity"] = to_json(complexity_profile(r, &d));
      if (check) {
        auto b = brute_force_ml(c, obs);
        j["exhaustive_agrees"] = same_cost(b.cost, d.cost) && b.codeword == d.codeword;
      }
      return j;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
  verify->alias("verify-paper");
  VerifyOptions options;
  std::vector<int> only;
  verify->add_option("--seed", options.seed, "Seed for every randomized battery");
  verify->add_option("--only", only, "Check ids to run")->delimiter(',')->check(CLI::Range(1, kCheckCount));
  verify->add_flag("--timing", options.timing, "Include elapsed seconds in the JSON");
  verify->add_option("--report", report_file, "Also write the JSON report here");
  verify->callback([&] {
    action = [&] {
      options.threads = threads;
      options.only = only;
      auto report = verify_all(options);
      if (!report.all_pass()) status = 1;
      Json j = to_json(report, options.timing);
      if (!report_file.empty()) write_file(report_file, j.dump(2) + "\n");
      if (format == "json") err << render_text(report, options.timing);
      text = [report, timing = options.timing](const Json&) { return render_text(report, timing); };
      return j;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Json result = action();
    if (format == "json") {
      out << result.dump(2) << '\n';
    } else if (text) {
      out << text(result);
    } else {
      render(result, out, 0);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return status;
}

}  // namespace treecode
