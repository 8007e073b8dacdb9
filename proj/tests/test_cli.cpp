#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <sstream>

#include "treecode/cli.hpp"
#include "treecode/io.hpp"

using namespace treecode;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int status;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "treecode");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int status = run(int(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

fs::path scratch() {
  static fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("treecode_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string put(const std::string& name, const std::string& contents) {
  auto p = (scratch() / name).string();
  write_file(p, contents);
  return p;
}

const char* kHamming =
    "q 2\nlabels 1 2 3 4 5 6 7\n"
    "1 0 0 0 1 1 0\n0 1 0 0 1 0 1\n0 0 1 0 0 1 1\n0 0 0 1 1 1 1\n";
// Claw: leaves 1, 2, 3 hold {1,2,3}, {4,5}, {6,7}.
const char* kClaw =
    "vertices 4\nedge 0 1\nedge 0 2\nedge 0 3\n"
    "omega 1 1\nomega 2 1\nomega 3 1\nomega 4 2\nomega 5 2\nomega 6 3\nomega 7 3\n";

}  // namespace

TEST_CASE("usage errors") {
  CHECK(call({}).status == 2);
  CHECK(call({"frobnicate"}).status == 2);
  CHECK(call({"width", "tree"}).status == 2);
  CHECK(call({"width", "graph-path", "--code", put("h.code", kHamming)}).status == 2);
  CHECK(call({"graph", "cor64", "--i", "0"}).status == 2);
  CHECK(call({"--format", "xml", "graph", "ybar"}).status == 2);
  CHECK(call({"--help"}).status == 0);
}

TEST_CASE("domain errors") {
  auto bad = put("bad.code", "q 4\nlabels 1\n1\n");
  CHECK(call({"code", "show", "--code", bad}).status == 1);
  auto code = put("h.code", kHamming);
  auto short_tree = put("short.tree", "vertices 2\nedge 0 1\nomega 1 0\n");
  auto r = call({"realize", "min", "--code", code, "--tree", short_tree});
  CHECK(r.status == 1);
  CHECK(r.err.find("error:") == 0);
}

TEST_CASE("code and rsum") {
  auto code = put("h.code", kHamming);
  auto show = call({"code", "show", "--code", code});
  REQUIRE(show.status == 0);
  CHECK(show.json()["n"] == 7);
  CHECK(show.json()["k"] == 4);
  CHECK(show.json()["d"] == 3);

  auto dual_file = (scratch() / "dual.code").string();
  auto d = call({"code", "dual", "--code", code, "--out", dual_file});
  CHECK(d.json()["k"] == 3);
  CHECK(d.json()["d"] == 4);
  CHECK(read_code(read_file(dual_file)).dim() == 3);
  CHECK(call({"code", "project", "--code", code, "--labels", "1,2,3,4"}).json()["k"] == 4);
  CHECK(call({"code", "cross-section", "--code", code, "--labels", "1,2,3,4"}).json()["k"] == 1);

  auto s = call({"rsum", "--code", code, "--split", "1,2,3"});
  REQUIRE(s.status == 0);
  CHECK(s.json()["r"] == 2);
  CHECK(s.json()["round_trip"] == true);
  CHECK(s.json()["preconditions_hold"] == true);
}

TEST_CASE("realize, width and decode") {
  auto code = put("h.code", kHamming);
  auto tree = put("claw.tree", kClaw);
  auto report = (scratch() / "report.json").string();
  for (std::string method : {"min", "formula", "merge"}) {
    auto r = call({"realize", method, "--code", code, "--tree", tree, "--report", report});
    REQUIRE(r.status == 0);
    CHECK(r.json()["minimal"] == true);
    CHECK(r.json()["realizes_code"] == true);
    CHECK(r.json()["realization"]["profile"]["states"] == Json::array({2, 2, 2}));
    CHECK(Json::parse(read_file(report)) == r.json());
  }
  CHECK(call({"realize", "min", "--code", code, "--tree", tree}).json().contains("trace"));

  auto t = call({"width", "trellis", "--code", code});
  REQUIRE(t.status == 0);
  CHECK(t.json()["sigma"]["value"] == 3);
  auto tw = call({"width", "tree", "--code", code});
  CHECK(tw.json()["search_space"] == 945);
  CHECK(tw.json()["sandwich"]["evaluated"] == 945);

  auto costs = put("h.costs", "0 1\n0 1\n0 1\n1 0\n0 1\n0 1\n0 1\n");
  auto d = call({"decode", "--code", code, "--tree", tree, "--costs", costs, "--check"});
  REQUIRE(d.status == 0);
  CHECK(d.json()["codeword"] == Json::array({0, 0, 0, 0, 0, 0, 0}));
  CHECK(d.json()["cost"] == 1.0);
  CHECK(d.json()["exhaustive_agrees"] == true);
  CHECK(d.json()["complexity"]["vertices"].size() == 4);
}

TEST_CASE("graph commands") {
  auto cor = call({"graph", "cor64", "--i", "1"});
  REQUIRE(cor.status == 0);
  CHECK(cor.json()["n"] == 14);
  CHECK(cor.json()["k"] == 4);
  CHECK(cor.json()["d"] == 4);
  CHECK(call({"graph", "ybar", "--i", "1"}).out == cor.out);

  auto y = call({"graph", "yfamily", "--i", "2"});
  CHECK(y.json()["vertices"].size() == 10);
  CHECK(y.json()["pathwidth"] == 2);

  auto triangle = put("tri.graph", "vertex 0\nvertex 1\nvertex 2\nedge 10 0 1\nedge 11 1 2\nedge 12 0 2\n");
  auto c = call({"graph", "code", "--graph", triangle, "--q", "3"});
  CHECK(c.json()["k"] == 2);
  auto bar_file = (scratch() / "tri_bar.graph").string();
  auto b = call({"graph", "bar", "--graph", triangle, "--out", bar_file});
  CHECK(b.json()["edges"].size() == 12);
  CHECK(call({"width", "graph-tree", "--graph", bar_file}).json()["value"] == 3);
  CHECK(call({"width", "graph-path", "--graph", triangle}).json()["value"] == 2);

  auto text = call({"--format", "text", "graph", "ybar", "--i", "1"});
  CHECK(text.out.find("n: 14") != std::string::npos);
}

TEST_CASE("verification reports are reproducible") {
  auto a = call({"verify-paper", "--seed", "5", "--only", "2,3"});
  auto b = call({"verify", "--seed", "5", "--only", "2,3", "--threads", "3"});
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.json()["checks"].size() == 2);
  CHECK(a.err.find("PASS 2") != std::string::npos);
  auto text = call({"--format", "text", "verify-paper", "--only", "3"});
  CHECK(text.out.rfind("PASS 3", 0) == 0);
}
