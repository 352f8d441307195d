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

#ifndef IMSTAB_EXPERIMENTS_H_
#define IMSTAB_EXPERIMENTS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "imstab/diffusion.h"
#include "imstab/graph.h"

namespace imstab {

// Seed purposes for DeriveSeed(master_seed, purpose).
enum SeedPurpose : std::uint64_t {
  kGraphSeed = 0,
  kImSampleSeed = 1,
  kIdmSampleSeed = 2,
  kEvaluationSeed = 3,
  kDrawSeed = 4,
};

struct TableRow {
  double delta = 0.0;
  Estimate sigma_plus;
  Estimate sigma_minus;
};

// Clique K_n with every theta_e = 1/n and relative intervals of each width.
// All singletons are exchangeable, so node 0 stands in for the best seed.
std::vector<TableRow> RunCliqueTable(std::size_t n, const std::vector<double>& deltas,
                                     std::size_t samples, std::uint64_t seed, int threads = 1);

struct ExperimentConfig {
  std::string network;  // GenSpec string or edge-list path
  bool undirected = false;
  Model model = Model::kIC;
  std::vector<double> base_p = {0.01, 0.02, 0.05, 0.1};
  std::vector<double> deltas = {0.01, 0.05, 0.1, 0.2, 0.5};
  std::size_t k = 20;
  std::size_t samples = 2000;
  std::uint64_t seed = 1;
  bool celf = false;  // lazy top-k pools inside Random Greedy
  int threads = 1;
  std::string output;  // empty: stdout
  bool timing = false;
};

// Flat JSON object with the ExperimentConfig field names as keys. Keys not
// present keep the values already in `base`.
ExperimentConfig LoadExperimentConfig(std::istream& in, ExperimentConfig base = {});
void ValidateExperimentConfig(const ExperimentConfig& cfg);

struct ReportRow {
  std::string network;
  double p = 0.0;
  double delta = 0.0;
  std::size_t k = 0;
  std::size_t samples = 0;
  Estimate im;
  Estimate idm;
  std::optional<double> ratio;  // nullopt when IM is not clearly positive
  std::optional<double> seconds;
  std::size_t repaired_nodes = 0;
};

// Ratio idm / im, or nullopt when im is non-positive or below three
// standard errors.
std::optional<double> StabilityRatio(const Estimate& im, const Estimate& idm);

struct NamedGraph {
  std::string id;
  Graph graph;
};

// Builds a generator spec, or loads an edge list when `network` names an
// existing file.
NamedGraph ResolveNetwork(const std::string& network, bool undirected, std::uint64_t seed);

// One row per (p, delta). IM is lazy greedy on a frozen sigma objective; IDM
// is Random Greedy on a frozen coupled delta objective. Both chosen sets are
// then re-estimated on a shared fresh set of tapes.
std::vector<ReportRow> RunComparison(const ExperimentConfig& cfg);

// Same comparison on a graph that is already built, for one parameter
// vector; `p` only labels the rows.
std::vector<ReportRow> CompareOnGraph(const NamedGraph& network, const ParamVector& theta,
                                      double p, const ExperimentConfig& cfg);

struct SweepConfig {
  std::size_t n = 400;
  std::vector<std::size_t> degrees = {5, 10, 15, 20, 25};
  std::vector<double> alphas = {-0.2, 0.0, 0.2};
  ExperimentConfig base;  // model, deltas, k, samples, seed, celf, threads
};

// Random d-regular graphs with theta_e = (1 + alpha) / d.
std::vector<ReportRow> RunRegularSweep(const SweepConfig& cfg);

void WriteTableCsv(const std::vector<TableRow>& rows, std::ostream& out);
void WriteReportCsv(const std::vector<ReportRow>& rows, std::ostream& out);

}  // namespace imstab

#endif  // IMSTAB_EXPERIMENTS_H_
