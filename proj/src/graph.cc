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

#include "imstab/graph.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include <fmt/format.h>

#include "imstab/errors.h"

namespace imstab {

const char* ModelName(Model model) { return model == Model::kIC ? "IC" : "LT"; }

Model ParseModel(const std::string& name) {
  if (name == "ic" || name == "IC") return Model::kIC;
  if (name == "lt" || name == "LT") return Model::kLT;
  throw InputError(fmt::format("unknown diffusion model '{}'", name));
}

struct GraphBuilder {
  static Graph Make(std::size_t n, std::vector<Edge> edges) {
    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    std::vector<std::size_t> out_deg(n, 0), in_deg(n, 0);
    for (const Edge& e : g.edges_) {
      ++out_deg[e.src];
      ++in_deg[e.dst];
    }
    g.out_offsets_.assign(n + 1, 0);
    g.in_offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
      g.out_offsets_[v + 1] = g.out_offsets_[v] + out_deg[v];
      g.in_offsets_[v + 1] = g.in_offsets_[v] + in_deg[v];
    }
    g.out_ids_.resize(g.edges_.size());
    g.in_ids_.resize(g.edges_.size());
    std::vector<std::size_t> out_pos(g.out_offsets_.begin(), g.out_offsets_.end() - 1);
    std::vector<std::size_t> in_pos(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
    // Edges are visited in id order, so every adjacency list is id-sorted.
    for (const Edge& e : g.edges_) {
      g.out_ids_[out_pos[e.src]++] = e.id;
      g.in_ids_[in_pos[e.dst]++] = e.id;
    }
    return g;
  }
};

BuildResult BuildGraph(std::size_t n, std::span<const Arc> arcs, bool undirected) {
  std::vector<Arc> directed;
  directed.reserve(undirected ? 2 * arcs.size() : arcs.size());
  BuildResult result;
  for (const Arc& a : arcs) {
    if (a.src >= n || a.dst >= n) {
      throw InputError(fmt::format("arc ({}, {}) has an endpoint outside [0, {})", a.src,
                                   a.dst, n));
    }
    if (a.multiplicity == 0) {
      throw InputError(fmt::format("arc ({}, {}) has zero multiplicity", a.src, a.dst));
    }
    if (a.src == a.dst) {
      ++result.dropped_self_loops;
      continue;
    }
    directed.push_back(a);
    if (undirected) directed.push_back({a.dst, a.src, a.multiplicity});
  }
  std::sort(directed.begin(), directed.end(), [](const Arc& a, const Arc& b) {
    return a.src != b.src ? a.src < b.src : a.dst < b.dst;
  });
  std::vector<Edge> edges;
  for (const Arc& a : directed) {
    if (!edges.empty() && edges.back().src == a.src && edges.back().dst == a.dst) {
      edges.back().multiplicity += a.multiplicity;
    } else {
      edges.push_back({static_cast<EdgeId>(edges.size()), a.src, a.dst, a.multiplicity});
    }
  }
  result.graph = GraphBuilder::Make(n, std::move(edges));
  return result;
}

NodeId LabeledGraph::Lookup(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw InputError(fmt::format("unknown node label '{}'", label));
  return static_cast<NodeId>(it - labels.begin());
}

std::vector<std::string> IndexLabels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  return labels;
}

namespace {

constexpr std::string_view kNodesPragma = "# nodes:";

struct LabelTable {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> ids;

  NodeId Intern(const std::string& label) {
    auto [it, inserted] = ids.emplace(label, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  }
};

}  // namespace

LabeledGraph LoadEdgeList(std::istream& in, bool undirected) {
  LabelTable table;
  std::vector<Arc> arcs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.rfind(kNodesPragma, 0) == 0) {
      std::istringstream tokens(line.substr(kNodesPragma.size()));
      std::string label;
      while (tokens >> label) table.Intern(label);
      continue;
    }
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream tokens(line);
    std::vector<std::string> fields;
    for (std::string tok; tokens >> tok;) fields.push_back(std::move(tok));
    if (fields.empty()) continue;
    if (fields.size() < 2 || fields.size() > 3) {
      throw InputError(fmt::format("line {}: expected 'src dst [multiplicity]', got {} fields",
                                   line_no, fields.size()));
    }
    std::uint32_t multiplicity = 1;
    if (fields.size() == 3) {
      std::size_t used = 0;
      unsigned long parsed = 0;
      try {
        parsed = std::stoul(fields[2], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != fields[2].size() || parsed == 0 || parsed > 0xFFFFFFFFul) {
        throw InputError(
            fmt::format("line {}: invalid multiplicity '{}'", line_no, fields[2]));
      }
      multiplicity = static_cast<std::uint32_t>(parsed);
    }
    const NodeId src = table.Intern(fields[0]);
    const NodeId dst = table.Intern(fields[1]);
    arcs.push_back({src, dst, multiplicity});
  }
  BuildResult built = BuildGraph(table.labels.size(), arcs, undirected);
  return {std::move(built.graph), std::move(table.labels), built.dropped_self_loops};
}

LabeledGraph LoadEdgeListFile(const std::string& path, bool undirected) {
  std::ifstream in(path);
  if (!in) throw InputError(fmt::format("cannot open edge list '{}'", path));
  return LoadEdgeList(in, undirected);
}

void DumpEdgeList(const Graph& g, std::span<const std::string> labels, std::ostream& out) {
  if (labels.size() != g.num_nodes()) {
    throw InputError("label count does not match node count");
  }
  out << kNodesPragma;
  for (const std::string& label : labels) out << ' ' << label;
  out << '\n';
  for (const Edge& e : g.edges()) {
    out << labels[e.src] << ' ' << labels[e.dst] << ' ' << e.multiplicity << '\n';
  }
}

void ValidateParams(const Graph& g, const ParamVector& theta) {
  if (theta.values.size() != g.num_edges()) {
    throw InputError(fmt::format("parameter vector has {} entries for {} edges",
                                 theta.values.size(), g.num_edges()));
  }
  for (std::size_t e = 0; e < theta.values.size(); ++e) {
    const double value = theta.values[e];
    if (!(value >= 0.0 && value <= 1.0)) {
      throw InputError(fmt::format("parameter of edge {} is {}, outside [0,1]", e, value));
    }
  }
  if (theta.model == Model::kLT) {
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      double sum = 0.0;
      for (EdgeId e : g.in_edges(v)) sum += theta.values[e];
      if (sum > 1.0 + kLtSumSlack) {
        throw InputError(fmt::format("LT in-weights of node {} sum to {} > 1", v, sum));
      }
    }
  }
}

bool Dominates(const ParamVector& a, const ParamVector& b) {
  if (a.values.size() != b.values.size()) return false;
  for (std::size_t e = 0; e < a.values.size(); ++e) {
    if (a.values[e] < b.values[e]) return false;
  }
  return true;
}

UniformParamsResult UniformParams(const Graph& g, double base_p, Model model) {
  if (!(base_p >= 0.0 && base_p <= 1.0)) {
    throw InputError(fmt::format("base probability {} outside [0,1]", base_p));
  }
  UniformParamsResult result;
  result.params.model = model;
  result.params.values.resize(g.num_edges());
  for (const Edge& e : g.edges()) {
    const double raw = e.multiplicity * base_p;
    if (raw > 1.0) ++result.clamped_edges;
    result.params.values[e.id] = std::min(1.0, raw);
  }
  if (model == Model::kLT) {
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      double sum = 0.0;
      for (EdgeId e : g.in_edges(v)) sum += result.params.values[e];
      if (sum <= 1.0) continue;
      ++result.rescaled_nodes;
      for (EdgeId e : g.in_edges(v)) result.params.values[e] /= sum;
    }
  }
  return result;
}

SeedSet::SeedSet(std::vector<NodeId> nodes, std::size_t n) : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
  if (std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end()) {
    throw InputError("seed set contains duplicate nodes");
  }
  if (!nodes_.empty() && nodes_.back() >= n) {
    throw InputError(fmt::format("seed {} outside [0, {})", nodes_.back(), n));
  }
}

SeedSet SeedSet::All(std::size_t n) {
  std::vector<NodeId> all(n);
  for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<NodeId>(v);
  return SeedSet(std::move(all), n);
}

bool SeedSet::contains(NodeId v) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), v);
}

}  // namespace imstab
