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

#ifndef IMSTAB_GRAPH_H_
#define IMSTAB_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace imstab {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

enum class Model { kIC, kLT };

const char* ModelName(Model model);
Model ParseModel(const std::string& name);

struct Arc {
  NodeId src;
  NodeId dst;
  std::uint32_t multiplicity = 1;
};

struct Edge {
  EdgeId id;
  NodeId src;
  NodeId dst;
  std::uint32_t multiplicity;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Weighted simple digraph. Edges are sorted by (src, dst) and ids are dense,
// so an EdgeId doubles as an index into any per-edge vector. Immutable once
// built.
class Graph {
 public:
  Graph() = default;

  std::size_t num_nodes() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const EdgeId> out_edges(NodeId v) const {
    return {out_ids_.data() + out_offsets_[v], out_ids_.data() + out_offsets_[v + 1]};
  }
  // In-edges of v in increasing EdgeId order.
  std::span<const EdgeId> in_edges(NodeId v) const {
    return {in_ids_.data() + in_offsets_[v], in_ids_.data() + in_offsets_[v + 1]};
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  friend struct GraphBuilder;

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<EdgeId> out_ids_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<EdgeId> in_ids_;
};

struct BuildResult {
  Graph graph;
  std::size_t dropped_self_loops = 0;
};

// Collapses parallel arcs by summing multiplicities and drops self-loops.
// With `undirected`, every arc also contributes its reverse.
BuildResult BuildGraph(std::size_t n, std::span<const Arc> arcs, bool undirected);

// Graph together with the external node labels it was read with.
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;
  std::size_t dropped_self_loops = 0;

  // Throws InputError for unknown labels.
  NodeId Lookup(const std::string& label) const;
};

// Labels "0".."n-1", for generated graphs.
std::vector<std::string> IndexLabels(std::size_t n);

// Whitespace-separated "src dst [multiplicity]" lines; '#' starts a comment.
// Labels are mapped to dense ids in first-appearance order. A leading
// "# nodes: a b c ..." comment pre-registers labels, which is how isolated
// nodes and id order survive a dump/load round trip.
LabeledGraph LoadEdgeList(std::istream& in, bool undirected);
LabeledGraph LoadEdgeListFile(const std::string& path, bool undirected);

// Writes the "# nodes:" header followed by one "src dst multiplicity" line
// per directed edge.
void DumpEdgeList(const Graph& g, std::span<const std::string> labels, std::ostream& out);

// Per-edge parameter vector: IC activation probabilities or LT weights.
struct ParamVector {
  Model model = Model::kIC;
  std::vector<double> values;

  double operator[](EdgeId e) const { return values[e]; }
};

inline constexpr double kLtSumSlack = 1e-9;

// Throws InputError unless the vector matches g, every value is in [0,1],
// and (LT) every node's in-weights sum to at most 1 + kLtSumSlack.
void ValidateParams(const Graph& g, const ParamVector& theta);

// True iff a[e] >= b[e] for every edge.
bool Dominates(const ParamVector& a, const ParamVector& b);

struct UniformParamsResult {
  ParamVector params;
  std::size_t clamped_edges = 0;
  std::size_t rescaled_nodes = 0;
};

// value_e = min(1, c_e * base_p). For LT, nodes whose in-sum exceeds one are
// rescaled proportionally to sum exactly one.
UniformParamsResult UniformParams(const Graph& g, double base_p, Model model);

// Sorted, duplicate-free seed set over [0, n).
class SeedSet {
 public:
  SeedSet() = default;
  // Sorts and checks; throws InputError on duplicates or ids >= n.
  SeedSet(std::vector<NodeId> nodes, std::size_t n);

  static SeedSet All(std::size_t n);

  std::span<const NodeId> nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  bool contains(NodeId v) const;

  friend bool operator==(const SeedSet&, const SeedSet&) = default;

 private:
  std::vector<NodeId> nodes_;
};

}  // namespace imstab

#endif  // IMSTAB_GRAPH_H_
