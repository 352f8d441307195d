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

#include "imstab/experiments.h"

#include <chrono>
#include <filesystem>
#include <istream>
#include <ostream>

#include <fmt/format.h>

#include "imstab/errors.h"
#include "imstab/netgen.h"
#include "imstab/objective.h"
#include "imstab/optimize.h"
#include "imstab/rng.h"
#include "imstab/uncertainty.h"
#include "json.hpp"

namespace imstab {

std::vector<TableRow> RunCliqueTable(std::size_t n, const std::vector<double>& deltas,
                                     std::size_t samples, std::uint64_t seed, int threads) {
  if (n < 2) throw InputError("the clique table needs n >= 2");
  const Graph g = Clique(n);
  const ParamVector theta = UniformParams(g, 1.0 / static_cast<double>(n), Model::kIC).params;
  const SeedSet seeds({0}, n);
  const EstimatorConfig est{samples, seed, threads};
  std::vector<TableRow> rows;
  for (double delta : deltas) {
    const UncertaintyModel u = RelativeIntervals(g, theta, delta).model;
    TableRow row;
    row.delta = delta;
    row.sigma_plus = EstimateSigma(g, ExtremeParams(u, Bound::kUpper), seeds, est);
    row.sigma_minus = EstimateSigma(g, ExtremeParams(u, Bound::kLower), seeds, est);
    rows.push_back(row);
  }
  return rows;
}

namespace {

using nlohmann::json;

template <typename T>
T Field(const json& value, const std::string& key) {
  try {
    return value.get<T>();
  } catch (const json::exception&) {
    throw InputError(fmt::format("config key '{}' has the wrong type", key));
  }
}

}  // namespace

ExperimentConfig LoadExperimentConfig(std::istream& in, ExperimentConfig cfg) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(fmt::format("config is not valid JSON: {}", e.what()));
  }
  if (!doc.is_object()) throw InputError("config must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key == "network") {
      cfg.network = Field<std::string>(value, key);
    } else if (key == "undirected") {
      cfg.undirected = Field<bool>(value, key);
    } else if (key == "model") {
      cfg.model = ParseModel(Field<std::string>(value, key));
    } else if (key == "base_p") {
      cfg.base_p = Field<std::vector<double>>(value, key);
    } else if (key == "deltas") {
      cfg.deltas = Field<std::vector<double>>(value, key);
    } else if (key == "k") {
      cfg.k = Field<std::size_t>(value, key);
    } else if (key == "samples") {
      cfg.samples = Field<std::size_t>(value, key);
    } else if (key == "seed") {
      cfg.seed = Field<std::uint64_t>(value, key);
    } else if (key == "celf") {
      cfg.celf = Field<bool>(value, key);
    } else if (key == "threads") {
      cfg.threads = Field<int>(value, key);
    } else if (key == "output") {
      cfg.output = Field<std::string>(value, key);
    } else if (key == "timing") {
      cfg.timing = Field<bool>(value, key);
    } else {
      throw InputError(fmt::format("unknown config key '{}'", key));
    }
  }
  return cfg;
}

void ValidateExperimentConfig(const ExperimentConfig& cfg) {
  if (cfg.network.empty()) throw InputError("no network given");
  if (cfg.base_p.empty()) throw InputError("base_p list is empty");
  if (cfg.deltas.empty()) throw InputError("delta list is empty");
  if (cfg.k < 1) throw InputError("k must be at least 1");
  if (cfg.samples < 1) throw InputError("sample count must be at least 1");
  if (cfg.threads < 1) throw InputError("thread count must be at least 1");
}

std::optional<double> StabilityRatio(const Estimate& im, const Estimate& idm) {
  if (im.mean <= 0.0 || im.mean < 3.0 * im.std_error) return std::nullopt;
  return idm.mean / im.mean;
}

NamedGraph ResolveNetwork(const std::string& network, bool undirected, std::uint64_t seed) {
  if (std::filesystem::is_regular_file(network)) {
    return {network, LoadEdgeListFile(network, undirected).graph};
  }
  const GenSpec spec = ParseGenSpec(network, DeriveSeed(seed, kGraphSeed));
  return {FormatGenSpec(spec), Generate(spec)};
}

std::vector<ReportRow> CompareOnGraph(const NamedGraph& network, const ParamVector& theta,
                                      double p, const ExperimentConfig& cfg) {
  ValidateExperimentConfig(cfg);
  const Graph& g = network.graph;
  if (cfg.k > g.num_nodes()) {
    throw InputError(fmt::format("cannot select {} seeds from {} nodes", cfg.k, g.num_nodes()));
  }
  using Clock = std::chrono::steady_clock;
  const auto saa = [&](SeedPurpose purpose) {
    return EstimatorConfig{cfg.samples, DeriveSeed(cfg.seed, purpose), cfg.threads};
  };
  const EstimatorConfig eval = saa(kEvaluationSeed);

  const auto im_start = Clock::now();
  const SaaObjective sigma = SaaObjective::Sigma(g, theta, saa(kImSampleSeed));
  const SeedSet im_set = LazyGreedy(sigma, cfg.k).selected;
  const Estimate im = EstimateSigma(g, theta, im_set, eval);
  const std::chrono::duration<double> im_time = Clock::now() - im_start;

  std::vector<ReportRow> rows;
  for (double delta : cfg.deltas) {
    const auto start = Clock::now();
    const RelativeIntervalsResult intervals = RelativeIntervals(g, theta, delta);
    const ParamVector plus = ExtremeParams(intervals.model, Bound::kUpper);
    const ParamVector minus = ExtremeParams(intervals.model, Bound::kLower);
    const SaaObjective diff = SaaObjective::Delta(g, plus, minus, saa(kIdmSampleSeed));
    const SeedSet idm_set =
        RandomGreedy(diff, cfg.k, DeriveSeed(cfg.seed, kDrawSeed), cfg.celf).selected;

    ReportRow row;
    row.network = network.id;
    row.p = p;
    row.delta = delta;
    row.k = cfg.k;
    row.samples = cfg.samples;
    row.im = im;
    row.idm = EstimateDelta(g, plus, minus, idm_set, eval);
    row.ratio = StabilityRatio(row.im, row.idm);
    row.repaired_nodes = intervals.repaired_nodes;
    if (cfg.timing) {
      const std::chrono::duration<double> elapsed = Clock::now() - start;
      row.seconds = elapsed.count() + im_time.count();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ReportRow> RunComparison(const ExperimentConfig& cfg) {
  ValidateExperimentConfig(cfg);
  const NamedGraph network = ResolveNetwork(cfg.network, cfg.undirected, cfg.seed);
  std::vector<ReportRow> rows;
  for (double p : cfg.base_p) {
    const ParamVector theta = UniformParams(network.graph, p, cfg.model).params;
    std::vector<ReportRow> part = CompareOnGraph(network, theta, p, cfg);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

std::vector<ReportRow> RunRegularSweep(const SweepConfig& cfg) {
  std::vector<ReportRow> rows;
  for (std::size_t d : cfg.degrees) {
    GenSpec spec;
    spec.family = Family::kRandomRegular;
    spec.n = cfg.n;
    spec.degree = d;
    spec.seed = DeriveSeed(cfg.base.seed, kGraphSeed);
    const NamedGraph network{FormatGenSpec(spec), Generate(spec)};
    ExperimentConfig base = cfg.base;
    base.network = network.id;
    for (double alpha : cfg.alphas) {
      const double p = (1.0 + alpha) / static_cast<double>(d);
      const ParamVector theta = UniformParams(network.graph, p, base.model).params;
      std::vector<ReportRow> part = CompareOnGraph(network, theta, p, base);
      rows.insert(rows.end(), part.begin(), part.end());
    }
  }
  return rows;
}

void WriteTableCsv(const std::vector<TableRow>& rows, std::ostream& out) {
  out << "delta,sigma_plus,sigma_plus_stderr,sigma_minus,sigma_minus_stderr,samples\n";
  for (const TableRow& r : rows) {
    out << fmt::format("{},{},{},{},{},{}\n", r.delta, r.sigma_plus.mean,
                       r.sigma_plus.std_error, r.sigma_minus.mean, r.sigma_minus.std_error,
                       r.sigma_plus.samples);
  }
}

void WriteReportCsv(const std::vector<ReportRow>& rows, std::ostream& out) {
  out << "network,p,delta,k,M,im_value,im_stderr,idm_value,idm_stderr,ratio,seconds\n";
  for (const ReportRow& r : rows) {
    const std::string ratio = r.ratio ? fmt::format("{}", *r.ratio) : "degenerate";
    const std::string seconds = r.seconds ? fmt::format("{:.3f}", *r.seconds) : "";
    const bool quote = r.network.find(',') != std::string::npos;
    const std::string network = quote ? "\"" + r.network + "\"" : r.network;
    out << fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", network, r.p, r.delta, r.k,
                       r.samples, r.im.mean, r.im.std_error, r.idm.mean, r.idm.std_error, ratio,
                       seconds);
  }
}

}  // namespace imstab
