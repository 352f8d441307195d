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

#include "imstab/diffusion.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "imstab/errors.h"
#include "internal/scratch.h"

namespace imstab {

RandomTape DrawTape(const Graph& g, Model model, std::uint64_t master_seed,
                    std::uint64_t sample_index) {
  RandomTape tape{model, master_seed, sample_index, {}};
  const std::size_t entities = model == Model::kIC ? g.num_edges() : g.num_nodes();
  tape.uniforms.resize(entities);
  for (std::size_t i = 0; i < entities; ++i) {
    tape.uniforms[i] =
        TapeUniform(model, master_seed, sample_index, static_cast<std::uint32_t>(i));
  }
  return tape;
}

std::size_t LiveEdgeSample::count() const {
  return static_cast<std::size_t>(std::count(live.begin(), live.end(), std::uint8_t{1}));
}

LiveEdgeRule::LiveEdgeRule(const Graph& g, const ParamVector& theta, const ParamVector& layout)
    : model_(theta.model), theta_(theta.values) {
  if (theta.values.size() != g.num_edges()) {
    throw InputError(fmt::format("parameter vector has {} entries for {} edges",
                                 theta.values.size(), g.num_edges()));
  }
  if (model_ != Model::kLT) return;
  if (layout.model != Model::kLT) throw InputError("LT realization needs an LT layout");
  ValidateParams(g, layout);
  if (!Dominates(layout, theta)) {
    throw InputError("LT layout must dominate the realized parameters on every edge");
  }
  start_.assign(g.num_edges(), 0.0);
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    double offset = 0.0;
    for (EdgeId e : g.in_edges(v)) {
      start_[e] = offset;
      offset += layout.values[e];
    }
  }
}

LiveEdgeSample Realize(const Graph& g, const RandomTape& tape, const LiveEdgeRule& rule) {
  if (tape.model != rule.model()) throw InputError("tape and parameter models differ");
  const std::size_t entities = rule.model() == Model::kIC ? g.num_edges() : g.num_nodes();
  if (tape.uniforms.size() != entities) throw InputError("tape does not match the graph");
  LiveEdgeSample sample;
  sample.live.resize(g.num_edges());
  for (const Edge& e : g.edges()) {
    sample.live[e.id] = rule.Live(e.id, tape.uniforms[rule.Entity(e)]) ? 1 : 0;
  }
  return sample;
}

LiveEdgeSample RealizeIC(const RandomTape& tape, const ParamVector& theta) {
  if (tape.model != Model::kIC || theta.model != Model::kIC) {
    throw InputError("RealizeIC needs an IC tape and IC parameters");
  }
  if (tape.uniforms.size() != theta.values.size()) {
    throw InputError("tape does not match the parameter vector");
  }
  LiveEdgeSample sample;
  sample.live.resize(theta.values.size());
  for (std::size_t e = 0; e < theta.values.size(); ++e) {
    sample.live[e] = tape.uniforms[e] < theta.values[e] ? 1 : 0;
  }
  return sample;
}

LiveEdgeSample RealizeLT(const Graph& g, const RandomTape& tape, const ParamVector& theta,
                         const ParamVector& layout) {
  if (tape.model != Model::kLT || theta.model != Model::kLT) {
    throw InputError("RealizeLT needs an LT tape and LT parameters");
  }
  return Realize(g, tape, LiveEdgeRule(g, theta, layout));
}

LiveGraph LiveGraph::From(const Graph& g, const LiveEdgeSample& live) {
  LiveGraph out;
  out.offsets.assign(g.num_nodes() + 1, 0);
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    for (EdgeId e : g.out_edges(u)) {
      if (live.live[e]) out.targets.push_back(g.edge(e).dst);
    }
    out.offsets[u + 1] = static_cast<std::uint32_t>(out.targets.size());
  }
  return out;
}

std::vector<NodeId> Reach(const Graph& g, const LiveEdgeSample& live, const SeedSet& seeds) {
  std::vector<std::uint8_t> seen(g.num_nodes(), 0);
  std::vector<NodeId> order(seeds.nodes().begin(), seeds.nodes().end());
  for (NodeId s : order) seen[s] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (EdgeId e : g.out_edges(order[head])) {
      const NodeId v = g.edge(e).dst;
      if (!seen[v] && live.live[e]) {
        seen[v] = 1;
        order.push_back(v);
      }
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

DiffusionTrace SimulateRounds(const Graph& g, const ParamVector& theta, const SeedSet& seeds,
                              const RandomTape& tape) {
  ValidateParams(g, theta);
  if (tape.model != theta.model) throw InputError("tape and parameter models differ");
  const std::size_t entities = theta.model == Model::kIC ? g.num_edges() : g.num_nodes();
  if (tape.uniforms.size() != entities) throw InputError("tape does not match the graph");

  std::vector<std::uint8_t> active(g.num_nodes(), 0);
  std::vector<double> weight(theta.model == Model::kLT ? g.num_nodes() : 0, 0.0);
  std::vector<NodeId> frontier(seeds.nodes().begin(), seeds.nodes().end());
  for (NodeId s : frontier) active[s] = 1;

  DiffusionTrace trace;
  trace.rounds.push_back(frontier);
  while (true) {
    std::vector<NodeId> next;
    if (theta.model == Model::kIC) {
      for (NodeId u : frontier) {
        for (EdgeId e : g.out_edges(u)) {
          const NodeId v = g.edge(e).dst;
          if (!active[v] && tape.uniforms[e] < theta[e]) {
            active[v] = 1;
            next.push_back(v);
          }
        }
      }
    } else {
      // weight[v] accumulates the in-weight from A_{t-1}; only nodes that just
      // gained weight can cross their threshold.
      std::vector<NodeId> touched;
      for (NodeId u : frontier) {
        for (EdgeId e : g.out_edges(u)) {
          const NodeId v = g.edge(e).dst;
          if (active[v]) continue;
          weight[v] += theta[e];
          touched.push_back(v);
        }
      }
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
      for (NodeId v : touched) {
        if (weight[v] > 0.0 && weight[v] >= tape.uniforms[v]) next.push_back(v);
      }
      for (NodeId v : next) active[v] = 1;
    }
    if (next.empty()) break;
    std::vector<NodeId> merged = trace.rounds.back();
    merged.insert(merged.end(), next.begin(), next.end());
    std::sort(merged.begin(), merged.end());
    trace.rounds.push_back(std::move(merged));
    frontier = std::move(next);
  }
  return trace;
}

void ForEachOutcome(const Graph& g, const ParamVector& theta,
                    const std::function<void(double, const LiveEdgeSample&)>& fn) {
  ValidateParams(g, theta);
  LiveEdgeSample sample;
  sample.live.assign(g.num_edges(), 0);

  if (theta.model == Model::kIC) {
    std::vector<EdgeId> free_edges;
    for (const Edge& e : g.edges()) {
      const double p = theta[e.id];
      if (p >= 1.0) {
        sample.live[e.id] = 1;
      } else if (p > 0.0) {
        free_edges.push_back(e.id);
      }
    }
    if (free_edges.size() > kMaxFreeIcEdges) {
      throw CapacityError(fmt::format("exact IC oracle: {} uncertain edges exceed the limit of {}",
                                      free_edges.size(), kMaxFreeIcEdges));
    }
    const std::uint64_t outcomes = std::uint64_t{1} << free_edges.size();
    for (std::uint64_t mask = 0; mask < outcomes; ++mask) {
      double prob = 1.0;
      for (std::size_t i = 0; i < free_edges.size(); ++i) {
        const EdgeId e = free_edges[i];
        const bool on = (mask >> i) & 1;
        sample.live[e] = on ? 1 : 0;
        prob *= on ? theta[e] : 1.0 - theta[e];
      }
      fn(prob, sample);
    }
    return;
  }

  // LT: each node independently keeps one in-edge (probability = weight) or
  // none (probability = 1 - in-sum).
  std::uint64_t configurations = 1;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    configurations *= g.in_edges(v).size() + 1;
    if (configurations > kMaxLtConfigurations) {
      throw CapacityError(fmt::format("exact LT oracle: more than {} live-edge configurations",
                                      kMaxLtConfigurations));
    }
  }
  struct Choice {
    EdgeId edge;  // kNone for "no live in-edge"
    double prob;
  };
  constexpr EdgeId kNone = ~EdgeId{0};
  std::vector<std::vector<Choice>> choices(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    double sum = 0.0;
    for (EdgeId e : g.in_edges(v)) {
      sum += theta[e];
      if (theta[e] > 0.0) choices[v].push_back({e, theta[e]});
    }
    if (1.0 - sum > 0.0) choices[v].push_back({kNone, 1.0 - sum});
    if (choices[v].empty()) choices[v].push_back({kNone, 1.0});
  }
  std::vector<std::size_t> pick(g.num_nodes(), 0);
  while (true) {
    double prob = 1.0;
    std::fill(sample.live.begin(), sample.live.end(), std::uint8_t{0});
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      const Choice& c = choices[v][pick[v]];
      prob *= c.prob;
      if (c.edge != kNone) sample.live[c.edge] = 1;
    }
    fn(prob, sample);
    std::size_t v = 0;
    while (v < pick.size() && ++pick[v] == choices[v].size()) pick[v++] = 0;
    if (v == pick.size()) break;
  }
}

double ExactSigma(const Graph& g, const ParamVector& theta, const SeedSet& seeds) {
  double total = 0.0;
  ForEachOutcome(g, theta, [&](double prob, const LiveEdgeSample& live) {
    total += prob * static_cast<double>(Reach(g, live, seeds).size());
  });
  return total;
}

namespace {

void CheckCoupledPair(const Graph& g, const ParamVector& plus, const ParamVector& minus) {
  if (plus.model != minus.model) throw InputError("theta+ and theta- use different models");
  ValidateParams(g, plus);
  ValidateParams(g, minus);
  if (!Dominates(plus, minus)) {
    throw InputError("theta+ must dominate theta- on every edge");
  }
}

}  // namespace

double ExactDelta(const Graph& g, const ParamVector& theta_plus, const ParamVector& theta_minus,
                  const SeedSet& seeds) {
  CheckCoupledPair(g, theta_plus, theta_minus);
  return ExactSigma(g, theta_plus, seeds) - ExactSigma(g, theta_minus, seeds);
}

Estimate Summarize(const std::vector<double>& values) {
  Estimate est;
  est.samples = values.size();
  if (values.empty()) return est;
  double sum = 0.0;
  for (double x : values) sum += x;
  est.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double squares = 0.0;
    for (double x : values) squares += (x - est.mean) * (x - est.mean);
    const double variance = squares / static_cast<double>(values.size() - 1);
    est.std_error = std::sqrt(variance / static_cast<double>(values.size()));
  }
  return est;
}

namespace {

void CheckConfig(const EstimatorConfig& cfg) {
  if (cfg.samples == 0) throw InputError("estimator needs at least one sample");
}

}  // namespace

Estimate EstimateSigma(const Graph& g, const ParamVector& theta, const SeedSet& seeds,
                       const EstimatorConfig& cfg) {
  CheckConfig(cfg);
  ValidateParams(g, theta);
  const LiveEdgeRule rule(g, theta);
  std::vector<double> values(cfg.samples, 0.0);
  const auto samples = static_cast<std::int64_t>(cfg.samples);
#pragma omp parallel num_threads(std::max(1, cfg.threads))
  {
    internal::LazyTape tape(theta.model, cfg.master_seed, g);
    internal::ReachScratch scratch(g.num_nodes());
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < samples; ++i) {
      tape.Reset(static_cast<std::uint64_t>(i));
      values[i] = static_cast<double>(scratch.CountLazy(g, rule, seeds.nodes(), tape));
    }
  }
  return Summarize(values);
}

Estimate EstimateDelta(const Graph& g, const ParamVector& theta_plus,
                       const ParamVector& theta_minus, const SeedSet& seeds,
                       const EstimatorConfig& cfg) {
  CheckConfig(cfg);
  CheckCoupledPair(g, theta_plus, theta_minus);
  const LiveEdgeRule plus_rule(g, theta_plus, theta_plus);
  const LiveEdgeRule minus_rule(g, theta_minus, theta_plus);
  std::vector<double> values(cfg.samples, 0.0);
  const auto samples = static_cast<std::int64_t>(cfg.samples);
#pragma omp parallel num_threads(std::max(1, cfg.threads))
  {
    internal::LazyTape tape(theta_plus.model, cfg.master_seed, g);
    internal::ReachScratch scratch(g.num_nodes());
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < samples; ++i) {
      tape.Reset(static_cast<std::uint64_t>(i));
      const std::size_t upper = scratch.CountLazy(g, plus_rule, seeds.nodes(), tape);
      const std::size_t lower = scratch.CountLazy(g, minus_rule, seeds.nodes(), tape);
      values[i] = static_cast<double>(upper) - static_cast<double>(lower);
    }
  }
  return Summarize(values);
}

}  // namespace imstab
