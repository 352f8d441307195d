// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "imstab/diffusion.h"
#include "imstab/experiments.h"
#include "imstab/netgen.h"
#include "imstab/objective.h"
#include "imstab/optimize.h"
#include "imstab/uncertainty.h"
#include "imstab/verify.h"
#include "test_util.h"

namespace imstab {
namespace {

using testing::TestRng;

// Tolerances and budgets.
constexpr double kTableRelTol = 0.10;
constexpr double kTableSeconds = 120.0;
constexpr double kCounterexampleSeconds = 1.0;
constexpr double kReductionSeconds = 30.0;
constexpr double kOracleSigmas = 4.0;
constexpr std::size_t kOracleSamples = 20000;
constexpr std::size_t kCouplingTapes = 1000;
constexpr double kTwoCliqueFactor = 5.0;
constexpr std::size_t kTwoCliqueSamples = 5000;
constexpr double kComparisonSeconds = 30.0 * 60.0;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult RunCli(const std::string& args) {
  const std::string command = std::string(IMSTAB_CLI_PATH) + " " + args;
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buffer;
  for (std::size_t n; (n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0;) {
    result.out.append(buffer.data(), n);
  }
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream in(line);
  for (std::string field; std::getline(in, field, ',');) fields.push_back(field);
  return fields;
}

Outcome A1() {
  struct Target {
    double delta, plus, minus;
  };
  const std::vector<Target> targets = {{0.1, 15.071, 6.204}, {0.2, 23.961, 4.253},
                                       {0.5, 66.529, 1.955}};
  const auto start = std::chrono::steady_clock::now();
  const RunResult r = RunCli("table1 --n 200 --deltas 0.1,0.2,0.5 --samples 10000");
  const double elapsed = Seconds(start);
  if (r.code != 0) return {false, fmt::format("table1 exited with {}", r.code)};
  std::stringstream in(r.out);
  std::string line;
  std::getline(in, line);
  bool ok = elapsed < kTableSeconds;
  std::string detail;
  for (const Target& t : targets) {
    if (!std::getline(in, line)) return {false, "missing table rows"};
    const std::vector<std::string> f = SplitCsv(line);
    const double plus = std::stod(f[1]), minus = std::stod(f[3]);
    const double err_plus = std::abs(plus - t.plus) / t.plus;
    const double err_minus = std::abs(minus - t.minus) / t.minus;
    ok = ok && err_plus <= kTableRelTol && err_minus <= kTableRelTol;
    detail += fmt::format("D={}: {:.3f}/{:.3f} (ref {}/{}, err {:.1f}%/{:.1f}%); ", t.delta,
                          plus, minus, t.plus, t.minus, 100 * err_plus, 100 * err_minus);
  }
  return {ok, detail + fmt::format("{:.1f} s", elapsed)};
}

Outcome A2() {
  const auto start = std::chrono::steady_clock::now();
  const UncertainInstance inst = CounterexampleInstance();
  const ParamVector plus = ExtremeParams(inst.uncertainty, Bound::kUpper);
  const ParamVector minus = ExtremeParams(inst.uncertainty, Bound::kLower);
  const auto delta = [&](std::vector<NodeId> nodes) {
    return ExactDelta(inst.graph, plus, minus, SeedSet(std::move(nodes), 4));
  };
  const double at_s = delta({0, 1}) - delta({0});
  const double at_t = delta({0, 1, 2}) - delta({0, 2});
  const std::size_t violations = SubmodularityViolations(inst.graph, plus, minus).size();
  const std::size_t sigma_violations =
      SubmodularityViolations(ExactObjective::Sigma(inst.graph, plus)).size();
  const double elapsed = Seconds(start);
  const bool ok = at_s == -3.0 && at_t == -1.0 && violations > 0 && sigma_violations == 0 &&
                  elapsed < kCounterexampleSeconds;
  return {ok, fmt::format("marginals {} and {}, {} delta violations, {} sigma violations, "
                          "{:.3f} s",
                          at_s, at_t, violations, sigma_violations, elapsed)};
}

Outcome A3() {
  const auto start = std::chrono::steady_clock::now();
  TestRng rng(2024);
  int agree = 0;
  const int trials = 30;
  for (int i = 0; i < trials; ++i) {
    const Graph g = testing::RandomUndirected(rng, 2 + rng.Below(8), 0.4);
    if (CheckReduction(g).agrees) ++agree;
  }
  const double elapsed = Seconds(start);
  return {agree == trials && elapsed < kReductionSeconds,
          fmt::format("{}/{} agree, {:.2f} s", agree, trials, elapsed)};
}

// Counts instances whose estimate lies within kOracleSigmas standard errors
// of the exact value.
int OracleHits(TestRng& rng, int trials, bool lt) {
  int hits = 0;
  for (int i = 0; i < trials; ++i) {
    const std::size_t n = 5 + rng.Below(4);
    const Graph g = testing::RandomDigraphWithEdges(rng, n, lt ? 8 + rng.Below(5) : 10);
    const ParamVector theta =
        lt ? testing::RandomLtParams(rng, g) : testing::RandomIcParams(rng, g);
    const SeedSet seeds({static_cast<NodeId>(rng.Below(n))}, n);
    const double exact = ExactSigma(g, theta, seeds);
    const EstimatorConfig cfg{kOracleSamples, 1000 + static_cast<std::uint64_t>(i), 1};
    const Estimate est = EstimateSigma(g, theta, seeds, cfg);
    if (std::abs(est.mean - exact) <= kOracleSigmas * est.std_error + 1e-12) ++hits;
  }
  return hits;
}

Outcome A4() {
  TestRng rng(4);
  const int ic = OracleHits(rng, 20, false);
  const int lt = OracleHits(rng, 10, true);
  return {ic >= 19 && lt >= 9, fmt::format("IC {}/20, LT {}/10 within 4 SE", ic, lt)};
}

Outcome A5() {
  const GenSpec spec = ParseGenSpec("smallworld:n=400,side=5,beta=0.1", 55);
  const Graph g = Generate(spec);
  const SeedSet seeds({3, 77, 150, 222, 391}, g.num_nodes());
  std::string detail;
  bool ok = true;
  for (Model model : {Model::kIC, Model::kLT}) {
    const ParamVector theta = UniformParams(g, 0.05, model).params;
    const UncertaintyModel u = RelativeIntervals(g, theta, 0.5).model;
    const ParamVector plus = ExtremeParams(u, Bound::kUpper);
    const ParamVector minus = ExtremeParams(u, Bound::kLower);
    const LiveEdgeRule plus_rule(g, plus);
    const LiveEdgeRule minus_rule(g, minus, plus);
    std::size_t nested = 0, nonnegative = 0;
    double total = 0.0;
    for (std::size_t t = 0; t < kCouplingTapes; ++t) {
      const RandomTape tape = DrawTape(g, model, 99, t);
      const std::vector<NodeId> hi = Reach(g, Realize(g, tape, plus_rule), seeds);
      const std::vector<NodeId> lo = Reach(g, Realize(g, tape, minus_rule), seeds);
      if (std::includes(hi.begin(), hi.end(), lo.begin(), lo.end())) ++nested;
      const double diff = static_cast<double>(hi.size()) - static_cast<double>(lo.size());
      if (diff >= 0.0) ++nonnegative;
      total += diff;
    }
    const Estimate est = EstimateDelta(g, plus, minus, seeds, {kCouplingTapes, 99, 1});
    const bool consistent = std::abs(est.mean - total / kCouplingTapes) < 1e-9;
    ok = ok && nested == kCouplingTapes && nonnegative == kCouplingTapes && consistent;
    detail += fmt::format("{}: nested {}/{}, nonnegative {}/{}, estimator {}; ",
                          ModelName(model), nested, kCouplingTapes, nonnegative,
                          kCouplingTapes, consistent ? "matches" : "differs");
  }
  return {ok, detail};
}

Outcome A6() {
  const std::size_t n = 100;
  const Graph g = TwoCliques(n);
  ParamVector theta{Model::kIC, std::vector<double>(g.num_edges())};
  for (const Edge& e : g.edges()) {
    theta.values[e.id] = (e.src < n ? 0.8 : 1.5) / static_cast<double>(n);
  }
  const SaaObjective sigma = SaaObjective::Sigma(g, theta, {kTwoCliqueSamples, 6, 1});
  std::vector<NodeId> all(g.num_nodes());
  for (NodeId v = 0; v < all.size(); ++v) all[v] = v;
  const std::vector<double> single = sigma.MarginalGains(SeedSet(), all);
  const double best_one = *std::max_element(single.begin(), single.begin() + n);
  const double best_two = *std::max_element(single.begin() + n, single.end());
  const double factor = best_two / best_one;
  return {factor >= kTwoCliqueFactor,
          fmt::format("best sigma clique 2 {:.2f}, clique 1 {:.2f}, factor {:.2f}", best_two,
                      best_one, factor)};
}

Outcome A7() {
  TestRng rng(7);
  int lazy_equal = 0, bound_ok = 0, argmax_equal = 0;
  const int lazy_trials = 20, bound_trials = 30, argmax_trials = 20;
  for (int i = 0; i < lazy_trials; ++i) {
    const Graph g = testing::RandomDigraphWithEdges(rng, 12, 10 + rng.Below(10));
    const ParamVector theta =
        rng.Coin(0.5) ? testing::RandomIcParams(rng, g) : testing::RandomLtParams(rng, g);
    const ExactObjective obj = ExactObjective::Sigma(g, theta);
    const std::size_t k = 1 + rng.Below(5);
    const SeedSet a = LazyGreedy(obj, k).selected;
    const SeedSet b = NaiveGreedy(obj, k).selected;
    if (std::equal(a.nodes().begin(), a.nodes().end(), b.nodes().begin(), b.nodes().end())) {
      ++lazy_equal;
    }
  }
  const double factor = 1.0 - std::exp(-1.0);
  for (int i = 0; i < bound_trials; ++i) {
    const std::size_t n = 4 + rng.Below(6);
    const std::size_t m = std::min(n * (n - 1), 12 + rng.Below(6));
    const Graph g = testing::RandomDigraphWithEdges(rng, n, m);
    const ParamVector theta =
        rng.Coin(0.5) ? testing::RandomIcParams(rng, g) : testing::RandomLtParams(rng, g);
    const ExactObjective obj = ExactObjective::Sigma(g, theta);
    const std::size_t k = 1 + rng.Below(n);
    if (LazyGreedy(obj, k).value >= factor * ExhaustiveOpt(obj, k).value - 1e-12) ++bound_ok;
  }
  for (int i = 0; i < argmax_trials; ++i) {
    const std::size_t n = 5 + rng.Below(6);
    const std::size_t m = std::min(n * (n - 1), 12 + rng.Below(6));
    const Graph g = testing::RandomDigraphWithEdges(rng, n, m);
    const ParamVector plus = testing::RandomIcParams(rng, g);
    const ExactObjective obj = ExactObjective::Delta(g, plus, testing::ShrinkParams(rng, plus));
    const std::vector<double> gains = obj.MarginalGains(SeedSet(), [&] {
      std::vector<NodeId> all(n);
      for (NodeId v = 0; v < n; ++v) all[v] = v;
      return all;
    }());
    const auto best = std::max_element(gains.begin(), gains.end());
    const GreedyReport r = RandomGreedy(obj, 1, i);
    const bool expect_empty = *best < 0.0;
    const bool match =
        expect_empty ? r.selected.empty()
                     : r.selected.size() == 1 &&
                           r.selected.nodes()[0] == static_cast<NodeId>(best - gains.begin());
    if (match) ++argmax_equal;
  }
  const bool ok =
      lazy_equal == lazy_trials && bound_ok == bound_trials && argmax_equal == argmax_trials;
  return {ok, fmt::format("lazy==naive {}/{}, (1-1/e) bound {}/{}, k=1 argmax {}/{}",
                          lazy_equal, lazy_trials, bound_ok, bound_trials, argmax_equal,
                          argmax_trials)};
}

Outcome A8() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (const char* network : {"smallworld:n=400,side=5,beta=0.1", "pa:n=400,m=5"}) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      ExperimentConfig cfg;
      cfg.network = network;
      cfg.base_p = {0.05};
      cfg.deltas = {0.01, 0.5};
      cfg.k = 20;
      cfg.samples = 2000;
      cfg.seed = seed;
      const std::vector<ReportRow> rows = RunComparison(cfg);
      const ReportRow& low = rows[0];
      const ReportRow& high = rows[1];
      const bool idm_grows = high.idm.mean >= low.idm.mean;
      const bool ratio_grows = low.ratio && high.ratio && *high.ratio > *low.ratio;
      ok = ok && idm_grows && ratio_grows;
      detail += fmt::format("{} seed {}: ratio {:.3f} -> {:.3f}; ", network, seed,
                            low.ratio.value_or(NAN), high.ratio.value_or(NAN));
    }
  }
  const double elapsed = Seconds(start);
  return {ok && elapsed < kComparisonSeconds, detail + fmt::format("{:.1f} s", elapsed)};
}

Outcome A9() {
  const std::vector<std::string> runs = {
      "stability --network smallworld:n=400,side=5,beta=0.1 --p 0.05 --deltas 0.1,0.5 "
      "--k 10 --samples 500 --seed 3",
      "table1 --n 100 --deltas 0.1,0.5 --samples 2000 --seed 3",
      "sweep-regular --n 100 --degrees 6 --deltas 0.5 --k 5 --samples 300 --seed 3"};
  int identical = 0;
  for (const std::string& args : runs) {
    const RunResult a = RunCli(args + " --threads 1");
    const RunResult b = RunCli(args + " --threads 1");
    const RunResult c = RunCli(args + " --threads 8");
    if (a.code == 0 && !a.out.empty() && a.out == b.out && a.out == c.out) ++identical;
  }
  return {identical == static_cast<int>(runs.size()),
          fmt::format("{}/{} commands byte-identical across repeats and 1/8 threads", identical,
                      runs.size())};
}

}  // namespace
}  // namespace imstab

int main() {
  using Criterion = std::pair<const char*, std::function<imstab::Outcome()>>;
  const std::vector<Criterion> criteria = {
      {"A1", imstab::A1}, {"A2", imstab::A2}, {"A3", imstab::A3},
      {"A4", imstab::A4}, {"A5", imstab::A5}, {"A6", imstab::A6},
      {"A7", imstab::A7}, {"A8", imstab::A8}, {"A9", imstab::A9}};
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    imstab::Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::cout << name << (outcome.pass ? " PASS " : " FAIL ") << outcome.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
