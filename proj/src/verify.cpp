#include "treecode/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <sstream>
#include <thread>

#include "treecode/error.hpp"
#include "treecode/random.hpp"

namespace treecode {

namespace {

// Independent stream per (seed, check, trial), so results do not depend on
// the thread count or on scheduling.
Rng trial_rng(std::uint64_t seed, int check, std::size_t trial) {
  std::seed_seq s{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(check),
                  std::uint32_t(trial), std::uint32_t(trial >> 32)};
  return Rng(s);
}

template <class R, class F>
std::vector<R> run_trials(std::size_t count, unsigned threads, F f) {
  // Wrapped so that R = bool does not become a packed vector<bool>.
  struct Slot {
    R value{};
  };
  std::vector<Slot> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        slots[i].value = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(threads, 1u); ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> out;
  for (auto& s : slots) out.push_back(std::move(s.value));
  return out;
}

std::size_t ceil_half(std::size_t x) { return (x + 1) / 2; }

LinearCode hamming74() {
  Field f2(2);
  return LinearCode(f2, fresh_labels(7),
                    Matrix::from_rows(f2, 7, {{1, 0, 0, 0, 1, 1, 0},
                                              {0, 1, 0, 0, 1, 0, 1},
                                              {0, 0, 1, 0, 0, 1, 1},
                                              {0, 0, 0, 1, 1, 1, 1}}));
}

Field field_for(std::size_t trial) { return Field(trial % 2 ? 3 : 2); }

// ---- 1 ----

CheckResult three_way(const VerifyOptions& o) {
  const std::size_t pairs = 120;
  struct Out {
    bool agree = false, realize = false;
  };
  auto rows = run_trials<Out>(pairs, o.threads, [&](std::size_t t) {
    Rng rng = trial_rng(o.seed, 1, t);
    std::size_t n = uniform(rng, 1, 12);
    auto c = random_code(field_for(t), n, uniform(rng, 0, n), rng);
    auto td = random_decomposition(random_tree(uniform(rng, 1, 8), rng), c.labels(), rng);
    auto formula = minimal_by_formula(c, td);
    auto leaf = min_realzn(c, td).realization;
    auto general = min_realzn(c, td, EdgeChoice::general).realization;
    auto merged = minimize_by_merging(trivial_extension(c, td, 0)).result;
    Out out;
    out.agree = formula.realization.profile() == formula.predicted && leaf.profile() == formula.predicted &&
                general.profile() == formula.predicted && merged.profile() == formula.predicted;
    out.realize = realized_code(formula.realization) == c && realized_code(leaf) == c &&
                  realized_code(general) == c && realized_code(merged) == c;
    return out;
  });
  std::size_t agree = std::count_if(rows.begin(), rows.end(), [](auto& r) { return r.agree; });
  std::size_t realize = std::count_if(rows.begin(), rows.end(), [](auto& r) { return r.realize; });
  CheckResult r;
  r.computed = {{"pairs", pairs}, {"profiles_agree", agree}, {"realize_code", realize}};
  r.expected = {{"pairs", pairs}, {"profiles_agree", pairs}, {"realize_code", pairs}};
  r.pass = agree == pairs && realize == pairs;
  r.summary = std::to_string(agree) + "/" + std::to_string(pairs) + " profiles agree, " +
              std::to_string(realize) + "/" + std::to_string(pairs) + " realize C";
  return r;
}

// ---- 2 ----

CheckResult rsum_round_trip(const VerifyOptions& o) {
  const std::size_t instances = 200;
  struct Out {
    bool round_trip = false, preconditions = false, dimension = false, split_ranks = false;
    std::size_t skipped = 0;
  };
  auto rows = run_trials<Out>(instances, o.threads, [&](std::size_t t) {
    Rng rng = trial_rng(o.seed, 2, t);
    Out out;
    for (;;) {
      std::size_t n = uniform(rng, 2, 12);
      auto c = random_code(field_for(t), n, uniform(rng, 1, n), rng);
      auto j = random_subset(c.labels(), uniform(rng, 1, n - 1), rng);
      auto jbar = complement(c, j);
      if (std::min(j.size(), jbar.size()) < split_rank(c, j)) {
        ++out.skipped;
        continue;
      }
      auto d = rsum_decompose(c, j);
      out.round_trip = s_sum(d.c1, d.c2) == c;
      out.preconditions = verify_rsum_preconditions(d);
      out.dimension = d.c1.dim() + d.c2.dim() == c.dim() + d.r;
      out.split_ranks = true;
      for (int k = 0; k < 10; ++k) {
        auto j1 = random_subset(j, uniform(rng, 0, j.size()), rng);
        auto j2 = random_subset(jbar, uniform(rng, 0, jbar.size()), rng);
        out.split_ranks = out.split_ranks && split_rank(d.c1, j1) == split_rank(c, j1) &&
                          split_rank(d.c2, j2) == split_rank(c, j2);
      }
      return out;
    }
  });
  std::size_t trips = 0, pre = 0, dim = 0, ranks = 0, skipped = 0;
  for (const auto& x : rows) {
    trips += x.round_trip;
    pre += x.preconditions;
    dim += x.dimension;
    ranks += x.split_ranks;
    skipped += x.skipped;
  }
  CheckResult r;
  r.computed = {{"instances", instances}, {"round_trip", trips},     {"preconditions", pre},
                {"dimension_identity", dim}, {"split_rank_identities", ranks},
                {"partitions_too_small_redrawn", skipped}};
  r.expected = {{"instances", instances}, {"round_trip", instances}, {"preconditions", instances},
                {"dimension_identity", instances}, {"split_rank_identities", instances}};
  r.pass = trips == instances && pre == instances && dim == instances && ranks == instances;
  r.summary = std::to_string(trips) + "/" + std::to_string(instances) + " round trips, " + std::to_string(pre) +
              " preconditions, " + std::to_string(dim) + " dimension identities, " + std::to_string(ranks) +
              " x20 split-rank identities";
  return r;
}

// Random code, decomposition and a deliberately non-minimal extension.
struct Inflated {
  LinearCode code;
  IndexTreeDecomposition td;
  TreeRealization extension;
};

Inflated inflated(Rng& rng, std::size_t t) {
  std::size_t n = uniform(rng, 1, 10);
  auto c = random_code(field_for(t), n, uniform(rng, 0, n), rng);
  auto td = random_decomposition(random_tree(uniform(rng, 1, 8), rng), c.labels(), rng);
  auto ext = trivial_extension(c, td, uniform(rng, 0, td.tree().vertex_count() - 1));
  if (td.tree().edge_count() > 0)
    for (std::size_t pads = uniform(rng, 1, 2); pads > 0; --pads)
      ext = with_free_state_coordinates(ext, uniform(rng, 0, td.tree().edge_count() - 1), uniform(rng, 1, 2));
  return {c, td, ext};
}

// ---- 3 ----

CheckResult merging_dominance(const VerifyOptions& o) {
  const std::size_t trials = 100;
  struct Out {
    bool dominated = false, monotone = false, reaches_minimal = false;
    std::size_t steps = 0;
  };
  auto rows = run_trials<Out>(trials, o.threads, [&](std::size_t t) {
    Rng rng = trial_rng(o.seed, 3, t);
    auto in = inflated(rng, t);
    auto predicted = minimal_by_formula(in.code, in.td).predicted;
    auto run = minimize_by_merging(in.extension);
    Out out;
    out.dominated = dominated_by(predicted, in.extension.profile());
    out.monotone = true;
    for (std::size_t i = 1; i < run.chain.size(); ++i)
      out.monotone = out.monotone && dominated_by(run.chain[i], run.chain[i - 1]);
    out.reaches_minimal = run.result.profile() == predicted;
    out.steps = run.chain.size() - 1;
    return out;
  });
  std::size_t dom = 0, mono = 0, reach = 0, steps = 0;
  for (const auto& x : rows) {
    dom += x.dominated;
    mono += x.monotone;
    reach += x.reaches_minimal;
    steps += x.steps;
  }
  CheckResult r;
  r.computed = {{"extensions", trials}, {"minimal_dominated", dom}, {"chain_monotone", mono},
                {"merging_reaches_minimal", reach}, {"chain_steps", steps}};
  r.expected = {{"extensions", trials}, {"minimal_dominated", trials}, {"chain_monotone", trials},
                {"merging_reaches_minimal", trials}};
  r.pass = dom == trials && mono == trials && reach == trials;
  r.summary = std::to_string(dom) + "/" + std::to_string(trials) + " dominated, " + std::to_string(mono) +
              " monotone chains over " + std::to_string(steps) + " steps";
  return r;
}

// ---- 4 ----

CheckResult zero_state_kernels(const VerifyOptions& o) {
  const std::size_t trials = 100;
  struct Out {
    std::size_t built = 0, contained = 0, minimal = 0, equal = 0;
  };
  auto rows = run_trials<Out>(trials, o.threads, [&](std::size_t t) {
    Rng rng = trial_rng(o.seed, 4, t);
    auto in = inflated(rng, t);
    std::vector<TreeRealization> minimal{minimal_by_formula(in.code, in.td).realization,
                                         min_realzn(in.code, in.td).realization,
                                         minimize_by_merging(in.extension).result};
    std::vector<TreeRealization> other{trivial_extension(in.code, in.td, 0), in.extension,
                                       essentialize(in.extension)};
    Out out;
    for (const auto& r : minimal) {
      ++out.built;
      ++out.minimal;
      out.contained += zero_state_kernel_contained(r);
      out.equal += satisfies_property_p(r);
    }
    for (const auto& r : other) {
      ++out.built;
      out.contained += zero_state_kernel_contained(r);
    }
    return out;
  });
  Out sum;
  for (const auto& x : rows) {
    sum.built += x.built;
    sum.contained += x.contained;
    sum.minimal += x.minimal;
    sum.equal += x.equal;
  }
  CheckResult r;
  r.computed = {{"realizations", sum.built}, {"containment", sum.contained},
                {"minimal_realizations", sum.minimal}, {"equality", sum.equal}};
  r.expected = {{"realizations", sum.built}, {"containment", sum.built},
                {"minimal_realizations", sum.minimal}, {"equality", sum.minimal}};
  r.pass = sum.contained == sum.built && sum.equal == sum.minimal;
  r.summary = std::to_string(sum.contained) + "/" + std::to_string(sum.built) + " containments, " +
              std::to_string(sum.equal) + "/" + std::to_string(sum.minimal) + " equalities on minimal ones";
  return r;
}

// ---- 5 ----

CheckResult sandwiches(const VerifyOptions& o) {
  const std::size_t random_codes = 60;
  struct Out {
    SandwichTally tally;
    bool trellis = false;
    bool has_d = false, lv = false;
    Json code;
  };
  auto rows = run_trials<Out>(random_codes + 1, o.threads, [&](std::size_t t) {
    Rng rng = trial_rng(o.seed, 5, t);
    LinearCode c = hamming74();
    if (t < random_codes) {
      std::size_t n = uniform(rng, 2, 8);
      c = random_code(field_for(t), n, uniform(rng, 0, n), rng);
    }
    Out out;
    out.tally = code_widths(c).sandwich;
    if (out.tally.above > 0) out.code = to_json(c);
    auto tw = trellis_widths(c);
    out.trellis = tw.sigma.value <= tw.kappa.value && tw.kappa.value <= tw.sigma.value + 1;
    if (c.dim() > 0) {
      out.has_d = true;
      // sigma >= (k / n)(d - 1), cleared of denominators.
      out.lv = tw.sigma.value * c.length() >= c.dim() * (min_weight(c) - 1);
    }
    return out;
  });
  SandwichTally tally;
  std::size_t trellis = 0, with_d = 0, lv = 0, degenerate_codes = 0;
  Json example;
  for (const auto& x : rows) {
    if (example.is_null() && !x.code.is_null()) example = x.code;
    tally.evaluated += x.tally.evaluated;
    tally.below += x.tally.below;
    tally.above += x.tally.above;
    tally.above_degenerate += x.tally.above_degenerate;
    degenerate_codes += x.tally.above_degenerate > 0;
    trellis += x.trellis;
    with_d += x.has_d;
    lv += x.lv;
  }
  const std::size_t codes = rows.size();
  CheckResult r;
  r.computed = {{"codes", codes},
                {"cubic_decompositions", tally.evaluated},
                {"kappa_below_sigma", tally.below},
                {"kappa_above_2sigma", tally.above},
                {"of_which_sigma_0_kappa_1", tally.above_degenerate},
                {"codes_with_sigma_0_kappa_1", degenerate_codes},
                {"trellis_sandwich_holds", trellis},
                {"codes_with_d", with_d},
                {"trellis_length_bound_holds", lv}};
  if (!example.is_null()) r.computed["first_code_with_kappa_above_2sigma"] = example;
  r.expected = {{"kappa_below_sigma", 0},
                {"kappa_above_2sigma", 0},
                {"trellis_sandwich_holds", codes},
                {"trellis_length_bound_holds", with_d}};
  r.pass = tally.below == 0 && tally.above == 0 && trellis == codes && lv == with_d;
  r.summary = std::to_string(tally.evaluated) + " cubic decompositions: " + std::to_string(tally.below) +
              " with kappa < sigma, " + std::to_string(tally.above) + " with kappa > 2 sigma (" +
              std::to_string(tally.above_degenerate) + " have sigma = 0, kappa = 1); trellis sandwich " +
              std::to_string(trellis) + "/" + std::to_string(codes) + "; length bound " + std::to_string(lv) +
              "/" + std::to_string(with_d);
  return r;
}

// ---- 6 ----

CheckResult dp_vs_exhaustive(const VerifyOptions& o) {
  const std::size_t codes = 40;
  auto trellis = run_trials<bool>(codes, o.threads, [&](std::size_t t) {
    Rng rng = trial_rng(o.seed, 6, t);
    std::size_t n = uniform(rng, 1, 8);
    auto c = random_code(field_for(t), n, uniform(rng, 0, n), rng);
    auto dp = trellis_widths(c);
    auto brute = trellis_widths_by_permutation(c);
    return dp.sigma.value == brute.sigma.value && dp.kappa.value == brute.kappa.value;
  });
  std::vector<Multigraph> graphs;
  for (std::size_t n = 1; n <= 5; ++n)
    for (auto& g : simple_graphs(n)) graphs.push_back(std::move(g));
  struct Out {
    bool tw = false, pw = false;
  };
  auto graph_rows = run_trials<Out>(graphs.size(), o.threads, [&](std::size_t i) {
    const auto& g = graphs[i];
    return Out{graph_treewidth(g).value == graph_treewidth_brute_force(g).value,
               graph_pathwidth(g).value == graph_pathwidth_brute_force(g).value};
  });
  std::size_t code_ok = std::count(trellis.begin(), trellis.end(), true);
  std::size_t tw = 0, pw = 0;
  for (const auto& x : graph_rows) {
    tw += x.tw;
    pw += x.pw;
  }
  CheckResult r;
  r.computed = {{"codes", codes}, {"trellis_dp_equals_permutations", code_ok}, {"graphs", graphs.size()},
                {"treewidth_equal", tw}, {"pathwidth_equal", pw}};
  r.expected = {{"codes", codes}, {"trellis_dp_equals_permutations", codes}, {"graphs", graphs.size()},
                {"treewidth_equal", graphs.size()}, {"pathwidth_equal", graphs.size()}};
  r.pass = code_ok == codes && tw == graphs.size() && pw == graphs.size();
  r.summary = std::to_string(code_ok) + "/" + std::to_string(codes) + " trellis DP matches, " +
              std::to_string(tw) + "/" + std::to_string(graphs.size()) + " treewidth and " + std::to_string(pw) +
              "/" + std::to_string(graphs.size()) + " pathwidth matches on all graphs up to 5 vertices";
  return r;
}

// ---- 7 ----

std::vector<std::pair<std::string, Multigraph>> named_battery() {
  return {{"P2", path_graph(2)},     {"P3", path_graph(3)},     {"P4", path_graph(4)},
          {"C3", cycle_graph(3)},    {"C4", cycle_graph(4)},    {"C5", cycle_graph(5)},
          {"K4", complete_graph(4)}, {"K1,3", star_graph(3)}};
}

CheckResult incidence_treewidth(const VerifyOptions& o) {
  auto battery = named_battery();
  for (std::size_t t = 0; t < 25; ++t) {
    Rng rng = trial_rng(o.seed, 7, t);
    std::size_t n = uniform(rng, 2, 6);
    std::size_t most = std::min<std::size_t>(8, n * (n - 1) / 2);
    battery.emplace_back("random" + std::to_string(t), random_connected_graph(n, uniform(rng, n - 1, most), rng));
  }
  struct Out {
    std::size_t graph = 0, gf2 = 0, gf3 = 0;
  };
  auto rows = run_trials<Out>(battery.size(), o.threads, [&](std::size_t i) {
    const auto& g = battery[i].second;
    return Out{graph_treewidth(g).value, code_treewidth(incidence_code(g, Field(2))).value,
               code_treewidth(incidence_code(g, Field(3))).value};
  });
  Json table = Json::array();
  std::size_t equal = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    bool ok = rows[i].graph == rows[i].gf2 && rows[i].graph == rows[i].gf3;
    equal += ok;
    table.push_back({{"graph", battery[i].first},
                     {"vertices", battery[i].second.vertex_count()},
                     {"edges", battery[i].second.edges().size()},
                     {"graph_treewidth", rows[i].graph},
                     {"code_treewidth_gf2", rows[i].gf2},
                     {"code_treewidth_gf3", rows[i].gf3}});
  }
  CheckResult r;
  r.computed = {{"graphs", battery.size()}, {"equal", equal}, {"table", table}};
  r.expected = {{"graphs", battery.size()}, {"equal", battery.size()}};
  r.pass = equal == battery.size();
  r.summary = std::to_string(equal) + "/" + std::to_string(battery.size()) +
              " graphs have graph treewidth = code treewidth over GF(2) and GF(3)";
  return r;
}

// ---- 8 ----

CheckResult bar_trellis(const VerifyOptions& o) {
  std::vector<std::pair<std::string, Multigraph>> graphs{{"P2", path_graph(2)},
                                                         {"P3", path_graph(3)},
                                                         {"K1,3", star_graph(3)},
                                                         {"triangle", cycle_graph(3)},
                                                         {"C4", cycle_graph(4)}};
  Json table = Json::array();
  std::size_t equal = 0, rows = 0;
  for (const auto& [name, g] : graphs) {
    std::size_t pw = graph_pathwidth(g).value;
    auto bar = g_bar(g);
    for (unsigned q : {2u, 3u}) {
      auto c = incidence_code(bar, Field(q));
      std::size_t s = trellis_widths(c, kDefaultSubsetCap, o.threads).sigma.value;
      ++rows;
      equal += s == pw + 1;
      table.push_back({{"graph", name}, {"q", q}, {"n", c.length()}, {"sigma_trellis", s}, {"pathwidth", pw}});
    }
  }
  CheckResult r;
  r.computed = {{"cases", rows}, {"equal", equal}, {"table", table}};
  r.expected = {{"cases", rows}, {"equal", rows}};
  r.pass = equal == rows;
  r.summary = std::to_string(equal) + "/" + std::to_string(rows) + " cases with sigma_trellis(C[Gbar]) = pathwidth(G) + 1";
  return r;
}

// ---- 9 ----

CheckResult ybar_family(const VerifyOptions& o) {
  Field f2(2);
  Json table = Json::array();
  bool pass = true;
  std::size_t kappa2 = 0;
  for (std::size_t i = 1; i <= 3; ++i) {
    auto yb = ybar_code(i, f2);
    auto y = y_family(i);
    std::size_t pw = graph_pathwidth(y).value;
    std::size_t kappa = graph_treewidth(yb.graph).value;
    std::size_t sigma_trellis = pw + 1;  // via sigma_trellis(C[Gbar]) = pathwidth(G) + 1
    std::size_t gap = sigma_trellis - std::min(sigma_trellis, kappa);
    std::size_t growth = ceil_half(i + 3) - 2;
    Json row = {{"i", i},
                {"parameters", to_json(yb.parameters)},
                {"pathwidth_Y", pw},
                {"expected_pathwidth_Y", ceil_half(i + 1)},
                {"kappa_C", kappa},
                {"sigma_trellis_C", sigma_trellis},
                {"kappa_trellis_minus_kappa_at_least", gap},
                {"growth_formula", growth}};
    bool ok = yb.parameters.matches() && yb.parameters.d && pw == ceil_half(i + 1) && kappa == 2 && gap == growth;
    // Direct subset DP where it fits comfortably.
    if (yb.code.length() <= 14) {
      std::size_t direct = trellis_widths(yb.code, kDefaultSubsetCap, o.threads).sigma.value;
      row["sigma_trellis_C_direct"] = direct;
      ok = ok && direct == sigma_trellis;
    }
    kappa2 += kappa == 2;
    row["pass"] = ok;
    pass = pass && ok;
    table.push_back(row);
  }
  CheckResult r;
  r.computed = {{"table", table}};
  r.expected = {{"parameters", {{14, 4, 4}, {38, 10, 4}, {86, 22, 4}}},
                {"pathwidth_Y", {1, 2, 2}},
                {"kappa_C", 2},
                {"sigma_trellis_C2", 3},
                {"gap_lower_bound", {0, 1, 1}}};
  r.pass = pass;
  r.summary = std::string(pass ? "[14,4,4] [38,10,4] [86,22,4]" : "mismatch") + ", pathwidths " +
              std::to_string(table[0]["pathwidth_Y"].get<std::size_t>()) + "," +
              std::to_string(table[1]["pathwidth_Y"].get<std::size_t>()) + "," +
              std::to_string(table[2]["pathwidth_Y"].get<std::size_t>()) + ", kappa = 2 for " +
              std::to_string(kappa2) + "/3, sigma_trellis(C_2) = " +
              std::to_string(table[1]["sigma_trellis_C"].get<std::size_t>());
  return r;
}

// ---- 10 ----

CheckResult decoding(const VerifyOptions& o) {
  const std::size_t trials = 500;
  auto agree = run_trials<bool>(trials, o.threads, [&](std::size_t t) {
    Rng rng = trial_rng(o.seed, 10, t);
    Field f(t % 3 == 0 ? 3 : 2);
    auto c = random_code(f, uniform(rng, 1, 8), uniform(rng, 0, 5), rng);
    auto td = random_decomposition(random_tree(uniform(rng, 1, 7), rng), c.labels(), rng);
    auto r = minimal_by_formula(c, td).realization;
    ChannelObservation obs{f.order(), c.labels(), {}};
    std::uniform_real_distribution<double> real(0.0, 4.0);
    for (std::size_t i = 0; i < c.length(); ++i) {
      std::vector<double> row;
      for (unsigned a = 0; a < f.order(); ++a) row.push_back(t % 2 ? real(rng) : double(uniform(rng, 0, 2)));
      obs.costs.push_back(row);
    }
    auto fast = ml_decode(r, obs);
    auto slow = brute_force_ml(c, obs);
    return same_cost(fast.cost, slow.cost) && fast.codeword == slow.codeword && fast.tie_broken == slow.tie_broken;
  });
  std::size_t random_ok = std::count(agree.begin(), agree.end(), true);

  auto c = hamming74();
  std::vector<IndexTreeDecomposition> cubic;
  for_each_cubic_decomposition(c.labels(), [&](const IndexTreeDecomposition& td) { cubic.push_back(td); });
  auto witness = minimal_by_formula(c, cubic.front()).realization;
  std::size_t words_ok = 0;
  for (unsigned w = 0; w < 128; ++w) {
    std::vector<Element> received(7);
    for (std::size_t i = 0; i < 7; ++i) received[i] = Element(w >> i & 1);
    auto obs = hamming_costs(c.field(), c.labels(), received);
    auto fast = ml_decode(witness, obs);
    auto slow = brute_force_ml(c, obs);
    words_ok += same_cost(fast.cost, slow.cost) && fast.codeword == slow.codeword &&
                fast.tie_broken == slow.tie_broken;
  }

  struct Out {
    bool ok = false;
    std::size_t t = 0;
  };
  auto bounds = run_trials<Out>(cubic.size(), o.threads, [&](std::size_t i) {
    auto r = minimal_by_formula(c, cubic[i]).realization;
    auto d = ml_decode(r, hamming_costs(c.field(), c.labels(), std::vector<Element>(7, 0)));
    auto p = complexity_profile(r, &d);
    return Out{p.cubic_leaf_bijective && p.within_bound && p.measured_within_model, p.t};
  });
  std::size_t bound_ok = 0, t_min = 99, t_max = 0;
  for (const auto& x : bounds) {
    bound_ok += x.ok;
    t_min = std::min(t_min, x.t);
    t_max = std::max(t_max, x.t);
  }
  CheckResult r;
  r.computed = {{"random_trials", trials},          {"random_agree", random_ok},
                {"hamming_received_words", 128},    {"hamming_agree", words_ok},
                {"cubic_realizations", cubic.size()}, {"within_3qt_bound", bound_ok},
                {"t_range", {t_min, t_max}}};
  r.expected = {{"random_agree", trials}, {"hamming_agree", 128}, {"within_3qt_bound", cubic.size()}};
  r.pass = random_ok == trials && words_ok == 128 && bound_ok == cubic.size();
  r.summary = std::to_string(random_ok) + "/" + std::to_string(trials) + " random trials, " +
              std::to_string(words_ok) + "/128 Hamming received words, " + std::to_string(bound_ok) + "/" +
              std::to_string(cubic.size()) + " cubic realizations within 3q^t";
  return r;
}

struct CheckDef {
  const char* name;
  const char* claim;
  CheckResult (*run)(const VerifyOptions&);
};

const CheckDef kChecks[kCheckCount] = {
    {"three-way minimality", "min_realzn, the dimension formulas and state merging give the same minimal profile",
     three_way},
    {"r-sum round trip", "C = S(C1, C2) with the r-sum preconditions, dimension identity and split ranks",
     rsum_round_trip},
    {"merging dominance", "minimal dims are below every extension's and merging only shrinks them",
     merging_dominance},
    {"zero-state kernels", "zero-state configurations lie in C_J + C_Jbar, with equality when minimal",
     zero_state_kernels},
    {"width sandwiches", "sigma <= kappa <= 2 sigma per cubic decomposition; trellis sandwich; length bound",
     sandwiches},
    {"DP vs exhaustive", "subset DPs and elimination searches match exhaustive definitions", dp_vs_exhaustive},
    {"incidence treewidth", "graph treewidth equals the treewidth of the incidence code", incidence_treewidth},
    {"bar trellis width", "sigma_trellis(C[Gbar]) = pathwidth(G) + 1", bar_trellis},
    {"Ybar family", "C[Ybar_i] parameters, pathwidths, kappa = 2 and the trellis gap", ybar_family},
    {"decoding oracle", "min-sum equals exhaustive ML; operation model within 3q^t", decoding},
};

}  // namespace

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

CheckResult run_check(int id, const VerifyOptions& options) {
  if (id < 1 || id > kCheckCount) throw Error("no check " + std::to_string(id));
  const auto& def = kChecks[id - 1];
  auto start = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = def.run(options);
  } catch (const std::exception& e) {
    r = CheckResult{};
    r.pass = false;
    r.computed = {{"exception", e.what()}};
    r.summary = std::string("threw: ") + e.what();
  }
  r.id = id;
  r.name = def.name;
  r.claim = def.claim;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

VerificationReport verify_all(const VerifyOptions& options) {
  VerificationReport report;
  report.seed = options.seed;
  for (int id = 1; id <= kCheckCount; ++id)
    if (options.only.empty() || std::count(options.only.begin(), options.only.end(), id))
      report.checks.push_back(run_check(id, options));
  return report;
}

Json to_json(const VerificationReport& report, bool timing) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json j = {{"id", c.id},           {"name", c.name},         {"claim", c.claim},
              {"pass", c.pass},       {"summary", c.summary},   {"computed", c.computed},
              {"expected", c.expected}};
    if (timing) j["seconds"] = c.seconds;
    checks.push_back(j);
  }
  return {{"seed", report.seed}, {"all_pass", report.all_pass()}, {"checks", checks}};
}

std::string render_text(const VerificationReport& report, bool timing) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& c : report.checks) {
    passed += c.pass;
    out << (c.pass ? "PASS " : "FAIL ") << c.id << ' ' << c.name << ": " << c.summary;
    if (timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " (%.1fs)", c.seconds);
      out << buf;
    }
    out << '\n';
  }
  out << passed << '/' << report.checks.size() << " checks passed (seed " << report.seed << ")\n";
  return out.str();
}

}  // namespace treecode
