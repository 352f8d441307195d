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

#include "imstab/cli.h"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "imstab/diffusion.h"
#include "imstab/errors.h"
#include "imstab/experiments.h"
#include "imstab/graph.h"
#include "imstab/instance_io.h"
#include "imstab/netgen.h"
#include "imstab/objective.h"
#include "imstab/optimize.h"
#include "imstab/uncertainty.h"
#include "imstab/verify.h"
#include "json.hpp"

namespace imstab {
namespace {

using nlohmann::json;

std::uint64_t DefaultSeed() {
  const char* env = std::getenv("IMSTAB_SEED");
  if (env == nullptr || *env == '\0') return 1;
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(env, &used);
    if (used == std::string(env).size()) return value;
  } catch (const std::exception&) {
  }
  throw InputError(fmt::format("IMSTAB_SEED='{}' is not an unsigned integer", env));
}

void WithOutput(const std::string& path, const std::function<void(std::ostream&)>& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError(fmt::format("cannot write '{}'", path));
  write(out);
}

struct InputOptions {
  std::string graph = "-";
  bool undirected = false;
  std::string model = "ic";
  double p = 0.1;
  double delta = 0.2;
  std::string bound = "upper";
};

void AddInputOptions(CLI::App* cmd, InputOptions& o) {
  cmd->add_option("--graph", o.graph, "Edge list or interval instance ('-' for stdin)");
  cmd->add_flag("--undirected", o.undirected, "Read every line as two directed edges");
  cmd->add_option("--model", o.model, "Diffusion model: ic or lt");
  cmd->add_option("--p", o.p, "Base edge probability for plain edge lists");
  cmd->add_option("--delta", o.delta, "Relative interval half-width for plain edge lists");
  cmd->add_option("--bound", o.bound, "Interval endpoint used for sigma: upper or lower")
      ->check(CLI::IsMember({"upper", "lower"}));
}

struct SampleOptions {
  std::size_t samples = 2000;
  std::uint64_t seed = 1;
  int threads = 1;
  bool exact = false;
};

void AddSampleOptions(CLI::App* cmd, SampleOptions& o, bool allow_exact) {
  cmd->add_option("--samples", o.samples, "Monte Carlo samples");
  cmd->add_option("--seed", o.seed, "Master seed");
  cmd->add_option("--threads", o.threads, "Worker threads");
  if (allow_exact) cmd->add_flag("--exact", o.exact, "Enumerate outcomes instead of sampling");
}

EstimatorConfig ToEstimator(const SampleOptions& o) {
  if (o.samples == 0) throw InputError("--samples must be positive");
  if (o.threads < 1) throw InputError("--threads must be positive");
  return {o.samples, o.seed, o.threads};
}

struct Problem {
  LabeledGraph graph;
  ParamVector theta;  // sigma parameters
  ParamVector plus;
  ParamVector minus;
};

Problem LoadProblem(const InputOptions& o) {
  const Model model = ParseModel(o.model);
  InstanceFile file = o.graph == "-" ? LoadInstance(std::cin, model, o.undirected)
                                     : LoadInstanceFile(o.graph, model, o.undirected);
  Problem problem;
  problem.graph = std::move(file.graph);
  const Graph& g = problem.graph.graph;
  UncertaintyModel u;
  if (file.uncertainty) {
    u = std::move(*file.uncertainty);
    problem.theta = ExtremeParams(u, o.bound == "upper" ? Bound::kUpper : Bound::kLower);
  } else {
    problem.theta = UniformParams(g, o.p, model).params;
    const RelativeIntervalsResult relative = RelativeIntervals(g, problem.theta, o.delta);
    if (relative.repaired_nodes > 0) {
      std::cerr << fmt::format("note: scaled down LT upper bounds at {} nodes\n",
                               relative.repaired_nodes);
    }
    u = relative.model;
  }
  problem.plus = ExtremeParams(u, Bound::kUpper);
  problem.minus = ExtremeParams(u, Bound::kLower);
  return problem;
}

SeedSet ParseSeeds(const LabeledGraph& g, const std::vector<std::string>& labels) {
  std::vector<NodeId> ids;
  ids.reserve(labels.size());
  for (const std::string& label : labels) ids.push_back(g.Lookup(label));
  return SeedSet(std::move(ids), g.graph.num_nodes());
}

json Labels(const LabeledGraph& g, const SeedSet& set) {
  json out = json::array();
  for (NodeId v : set.nodes()) out.push_back(g.labels[v]);
  return out;
}

json CandidateJson(const LabeledGraph& g, const Candidate& c) {
  if (c.dummy) return {{"dummy", c.id}, {"gain", c.gain}};
  return {{"node", g.labels[c.id]}, {"gain", c.gain}};
}

json ReportJson(const LabeledGraph& g, const GreedyReport& report, const std::string& objective,
                const std::string& algorithm) {
  json steps = json::array();
  for (const GreedyStep& step : report.steps) {
    json entry = CandidateJson(g, step.chosen);
    if (!step.pool.empty()) {
      json pool = json::array();
      for (const Candidate& c : step.pool) pool.push_back(CandidateJson(g, c));
      entry["pool"] = std::move(pool);
    }
    steps.push_back(std::move(entry));
  }
  return {{"objective", objective},
          {"algorithm", algorithm},
          {"selected", Labels(g, report.selected)},
          {"value", report.value},
          {"gain_evaluations", report.gain_evaluations},
          {"steps", std::move(steps)}};
}

json ViolationJson(const LabeledGraph& g, const Violation& v) {
  return {{"S", Labels(g, v.smaller)},
          {"T", Labels(g, v.larger)},
          {"node", g.labels[v.node]},
          {"marginal_S", v.marginal_smaller},
          {"marginal_T", v.marginal_larger}};
}

void PrintJson(const json& doc, const std::string& out) {
  WithOutput(out, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
}

}  // namespace

int CliMain(int argc, char** argv) {
  CLI::App app{"Stability of influence maximization under edge-parameter uncertainty",
               "imstab"};
  app.require_subcommand(1);

  std::uint64_t default_seed = 1;
  try {
    default_seed = DefaultSeed();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  InputOptions in;
  SampleOptions sampling;
  sampling.seed = default_seed;
  std::string out;
  std::vector<std::string> seed_labels;
  std::size_t k = 1;
  bool im_celf = true;
  bool idm_celf = false;
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out, "Output file (default stdout)");
  };

  // generate
  std::string network;
  auto* generate = app.add_subcommand("generate", "Write a synthetic network as an edge list");
  generate->add_option("--network", network, "Generator spec, e.g. smallworld:n=400,side=5")
      ->required();
  generate->add_option("--seed", sampling.seed, "Master seed");
  add_out(generate);

  // estimate
  std::string objective_name = "sigma";
  auto* estimate = app.add_subcommand("estimate", "Monte Carlo estimate for one seed set");
  AddInputOptions(estimate, in);
  AddSampleOptions(estimate, sampling, false);
  estimate->add_option("--seeds", seed_labels, "Seed labels")->delimiter(',');
  estimate->add_option("--objective", objective_name, "sigma or delta")
      ->check(CLI::IsMember({"sigma", "delta"}));
  add_out(estimate);

  // maximize / diff-maximize
  auto* maximize = app.add_subcommand("maximize", "Greedy influence maximization");
  AddInputOptions(maximize, in);
  AddSampleOptions(maximize, sampling, true);
  maximize->add_option("--k", k, "Number of seeds");
  maximize->add_flag("--celf,!--no-celf", im_celf, "Lazy evaluation (default on)");
  add_out(maximize);

  auto* diff_maximize =
      app.add_subcommand("diff-maximize", "Random Greedy influence difference maximization");
  AddInputOptions(diff_maximize, in);
  AddSampleOptions(diff_maximize, sampling, true);
  diff_maximize->add_option("--k", k, "Number of seeds");
  diff_maximize->add_flag("--celf,!--no-celf", idm_celf, "Lazy top-k pools (default off)");
  add_out(diff_maximize);

  // stability
  ExperimentConfig exp;
  std::string config_path;
  std::string exp_model;
  auto* stability = app.add_subcommand("stability", "IM versus IDM comparison, CSV rows");
  stability->add_option("--config", config_path, "Flat JSON experiment config");
  auto* opt_network = stability->add_option("--network", exp.network, "Generator spec or path");
  auto* opt_undirected = stability->add_flag("--undirected", exp.undirected, "Undirected input");
  auto* opt_model = stability->add_option("--model", exp_model, "ic or lt");
  auto* opt_p = stability->add_option("--p", exp.base_p, "Base probabilities")->delimiter(',');
  auto* opt_deltas = stability->add_option("--deltas", exp.deltas, "Deltas")->delimiter(',');
  auto* opt_k = stability->add_option("--k", exp.k, "Number of seeds");
  auto* opt_samples = stability->add_option("--samples", exp.samples, "Monte Carlo samples");
  auto* opt_seed = stability->add_option("--seed", exp.seed, "Master seed");
  auto* opt_threads = stability->add_option("--threads", exp.threads, "Worker threads");
  auto* opt_celf = stability->add_flag("--celf,!--no-celf", exp.celf, "Lazy Random Greedy pools");
  auto* opt_out = stability->add_option("--out", exp.output, "Output CSV");
  auto* opt_timing = stability->add_flag("--timing", exp.timing, "Fill the seconds column");

  // table1
  std::size_t clique_n = 200;
  std::vector<double> deltas = {0.1, 0.2, 0.5};
  SampleOptions table_sampling{10000, default_seed, 1, false};
  auto* table1 = app.add_subcommand("table1", "Clique instability table");
  table1->add_option("--n", clique_n, "Clique size");
  table1->add_option("--deltas", deltas, "Relative widths")->delimiter(',');
  AddSampleOptions(table1, table_sampling, false);
  add_out(table1);

  // sweep-regular
  SweepConfig sweep;
  sweep.base.seed = default_seed;
  std::string sweep_model = "ic";
  auto* sweep_regular = app.add_subcommand("sweep-regular", "Random regular degree sweep");
  sweep_regular->add_option("--n", sweep.n, "Nodes");
  sweep_regular->add_option("--degrees", sweep.degrees, "Degrees")->delimiter(',');
  sweep_regular->add_option("--alphas", sweep.alphas, "Offsets around 1/d")->delimiter(',');
  sweep_regular->add_option("--deltas", sweep.base.deltas, "Deltas")->delimiter(',');
  sweep_regular->add_option("--model", sweep_model, "ic or lt");
  sweep_regular->add_option("--k", sweep.base.k, "Number of seeds");
  sweep_regular->add_option("--samples", sweep.base.samples, "Monte Carlo samples");
  sweep_regular->add_option("--seed", sweep.base.seed, "Master seed");
  sweep_regular->add_option("--threads", sweep.base.threads, "Worker threads");
  sweep_regular->add_flag("--celf,!--no-celf", sweep.base.celf, "Lazy Random Greedy pools");
  sweep_regular->add_flag("--timing", sweep.base.timing, "Fill the seconds column");
  add_out(sweep_regular);

  // fixture
  auto* fixture = app.add_subcommand("fixture", "Emit a known-answer interval instance");
  fixture->require_subcommand(1);
  auto* fixture_counter = fixture->add_subcommand("counterexample", "Four-node path instance");
  add_out(fixture_counter);
  std::string reduction_source;
  bool reduction_undirected = false;
  auto* fixture_reduction = fixture->add_subcommand("reduction", "MIS reduction instance");
  fixture_reduction->add_option("--from", reduction_source, "Source edge list")->required();
  fixture_reduction->add_flag("--undirected", reduction_undirected, "Undirected input");
  add_out(fixture_reduction);

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exact computations on small inputs");
  oracle->require_subcommand(1);
  auto* oracle_sigma = oracle->add_subcommand("sigma", "Exact sigma of a seed set");
  auto* oracle_delta = oracle->add_subcommand("delta", "Exact delta of a seed set");
  auto* oracle_mis = oracle->add_subcommand("mis", "Maximum independent set size");
  auto* oracle_reduction = oracle->add_subcommand("reduction", "Check the MIS reduction");
  auto* oracle_violations =
      oracle->add_subcommand("violations", "Submodularity violations of exact delta");
  for (CLI::App* cmd : {oracle_sigma, oracle_delta, oracle_mis, oracle_reduction,
                        oracle_violations}) {
    AddInputOptions(cmd, in);
    add_out(cmd);
  }
  for (CLI::App* cmd : {oracle_sigma, oracle_delta}) {
    cmd->add_option("--seeds", seed_labels, "Seed labels")->delimiter(',');
  }
  bool sigma_only = false;
  oracle_violations->add_flag("--sigma", sigma_only, "Check sigma at the chosen bound instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    if (generate->parsed()) {
      const Graph g = Generate(ParseGenSpec(network, sampling.seed));
      const std::vector<std::string> labels = IndexLabels(g.num_nodes());
      WithOutput(out, [&](std::ostream& os) { DumpEdgeList(g, labels, os); });
    } else if (estimate->parsed()) {
      const Problem problem = LoadProblem(in);
      const SeedSet seeds = ParseSeeds(problem.graph, seed_labels);
      const EstimatorConfig cfg = ToEstimator(sampling);
      const Estimate result =
          objective_name == "sigma"
              ? EstimateSigma(problem.graph.graph, problem.theta, seeds, cfg)
              : EstimateDelta(problem.graph.graph, problem.plus, problem.minus, seeds, cfg);
      PrintJson({{"objective", objective_name},
                 {"seeds", Labels(problem.graph, seeds)},
                 {"mean", result.mean},
                 {"std_error", result.std_error},
                 {"samples", result.samples}},
                out);
    } else if (maximize->parsed() || diff_maximize->parsed()) {
      const bool diff = diff_maximize->parsed();
      const bool lazy = diff ? idm_celf : im_celf;
      const Problem problem = LoadProblem(in);
      const Graph& g = problem.graph.graph;
      std::unique_ptr<Objective> obj;
      if (sampling.exact) {
        obj = std::make_unique<ExactObjective>(
            diff ? ExactObjective::Delta(g, problem.plus, problem.minus)
                 : ExactObjective::Sigma(g, problem.theta));
      } else {
        const EstimatorConfig cfg = ToEstimator(sampling);
        obj = std::make_unique<SaaObjective>(
            diff ? SaaObjective::Delta(g, problem.plus, problem.minus, cfg)
                 : SaaObjective::Sigma(g, problem.theta, cfg));
      }
      GreedyReport report;
      std::string algorithm;
      if (diff) {
        report = RandomGreedy(*obj, k, sampling.seed, lazy);
        algorithm = lazy ? "random-greedy-lazy" : "random-greedy";
      } else {
        report = lazy ? LazyGreedy(*obj, k) : NaiveGreedy(*obj, k);
        algorithm = lazy ? "celf" : "greedy";
      }
      PrintJson(ReportJson(problem.graph, report, diff ? "delta" : "sigma", algorithm), out);
    } else if (stability->parsed()) {
      ExperimentConfig cfg;
      cfg.seed = default_seed;
      if (!config_path.empty()) {
        std::ifstream file(config_path);
        if (!file) throw InputError(fmt::format("cannot open config '{}'", config_path));
        cfg = LoadExperimentConfig(file, cfg);
      }
      if (opt_network->count()) cfg.network = exp.network;
      if (opt_undirected->count()) cfg.undirected = exp.undirected;
      if (opt_model->count()) cfg.model = ParseModel(exp_model);
      if (opt_p->count()) cfg.base_p = exp.base_p;
      if (opt_deltas->count()) cfg.deltas = exp.deltas;
      if (opt_k->count()) cfg.k = exp.k;
      if (opt_samples->count()) cfg.samples = exp.samples;
      if (opt_seed->count()) cfg.seed = exp.seed;
      if (opt_threads->count()) cfg.threads = exp.threads;
      if (opt_celf->count()) cfg.celf = exp.celf;
      if (opt_out->count()) cfg.output = exp.output;
      if (opt_timing->count()) cfg.timing = exp.timing;
      const std::vector<ReportRow> rows = RunComparison(cfg);
      for (const ReportRow& row : rows) {
        if (row.repaired_nodes > 0) {
          std::cerr << fmt::format("note: p={} delta={}: scaled down LT upper bounds at {} nodes\n",
                                   row.p, row.delta, row.repaired_nodes);
        }
      }
      WithOutput(cfg.output, [&](std::ostream& os) { WriteReportCsv(rows, os); });
    } else if (table1->parsed()) {
      const EstimatorConfig cfg = ToEstimator(table_sampling);
      const std::vector<TableRow> rows =
          RunCliqueTable(clique_n, deltas, cfg.samples, cfg.master_seed, cfg.threads);
      WithOutput(out, [&](std::ostream& os) { WriteTableCsv(rows, os); });
    } else if (sweep_regular->parsed()) {
      sweep.base.model = ParseModel(sweep_model);
      const std::vector<ReportRow> rows = RunRegularSweep(sweep);
      WithOutput(out, [&](std::ostream& os) { WriteReportCsv(rows, os); });
    } else if (fixture_counter->parsed()) {
      const UncertainInstance instance = CounterexampleInstance();
      WithOutput(out, [&](std::ostream& os) { DumpInstance(instance, os); });
    } else if (fixture_reduction->parsed()) {
      const LabeledGraph source = LoadEdgeListFile(reduction_source, reduction_undirected);
      const ReductionInstance reduction = MakeReductionInstance(source.graph, source.labels);
      WithOutput(out, [&](std::ostream& os) { DumpInstance(reduction.instance, os); });
    } else if (oracle_sigma->parsed() || oracle_delta->parsed()) {
      const Problem problem = LoadProblem(in);
      const SeedSet seeds = ParseSeeds(problem.graph, seed_labels);
      const bool is_sigma = oracle_sigma->parsed();
      const double value =
          is_sigma ? ExactSigma(problem.graph.graph, problem.theta, seeds)
                   : ExactDelta(problem.graph.graph, problem.plus, problem.minus, seeds);
      PrintJson({{"objective", is_sigma ? "sigma" : "delta"},
                 {"seeds", Labels(problem.graph, seeds)},
                 {"value", value}},
                out);
    } else if (oracle_mis->parsed() || oracle_reduction->parsed()) {
      const Problem problem = LoadProblem(in);
      if (oracle_mis->parsed()) {
        PrintJson({{"mis", MisBruteforce(problem.graph.graph)}}, out);
      } else {
        const ReductionCheck check = CheckReduction(problem.graph.graph);
        PrintJson({{"mis", check.mis},
                   {"idm_optimum", check.idm_optimum},
                   {"agrees", check.agrees}},
                  out);
      }
    } else if (oracle_violations->parsed()) {
      const Problem problem = LoadProblem(in);
      const Graph& g = problem.graph.graph;
      const std::vector<Violation> found =
          sigma_only ? SubmodularityViolations(ExactObjective::Sigma(g, problem.theta))
                     : SubmodularityViolations(g, problem.plus, problem.minus);
      json list = json::array();
      for (const Violation& v : found) list.push_back(ViolationJson(problem.graph, v));
      PrintJson({{"objective", sigma_only ? "sigma" : "delta"},
                 {"count", found.size()},
                 {"violations", std::move(list)}},
                out);
    }
  } catch (const CapacityError& e) {
    std::cerr << "capacity exceeded: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace imstab
