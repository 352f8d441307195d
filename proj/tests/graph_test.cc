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

#include <sstream>

#include <gtest/gtest.h>

#include "imstab/errors.h"
#include "test_util.h"

namespace imstab {
namespace {

using testing::TestRng;

TEST(BuildGraphTest, CollapsesParallelArcs) {
  const std::vector<Arc> arcs = {{0, 1, 1}, {0, 1, 1}};
  const BuildResult r = BuildGraph(2, arcs, false);
  ASSERT_EQ(r.graph.num_edges(), 1u);
  EXPECT_EQ(r.graph.edge(0), (Edge{0, 0, 1, 2}));
}

TEST(BuildGraphTest, UndirectedAddsReverse) {
  const std::vector<Arc> arcs = {{0, 1, 1}};
  const Graph g = BuildGraph(3, arcs, true).graph;
  ASSERT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.edge(0), (Edge{0, 0, 1, 1}));
  EXPECT_EQ(g.edge(1), (Edge{1, 1, 0, 1}));
  EXPECT_EQ(g.num_nodes(), 3u);
}

TEST(BuildGraphTest, DropsSelfLoops) {
  const std::vector<Arc> arcs = {{0, 0, 1}};
  const BuildResult r = BuildGraph(2, arcs, false);
  EXPECT_EQ(r.graph.num_edges(), 0u);
  EXPECT_EQ(r.dropped_self_loops, 1u);
}

TEST(BuildGraphTest, RejectsOutOfRangeEndpoint) {
  const std::vector<Arc> arcs = {{0, 2, 1}};
  EXPECT_THROW(BuildGraph(2, arcs, false), InputError);
}

TEST(BuildGraphTest, RejectsZeroMultiplicity) {
  const std::vector<Arc> arcs = {{0, 1, 0}};
  EXPECT_THROW(BuildGraph(2, arcs, false), InputError);
}

TEST(BuildGraphTest, AdjacencyConsistentOnRandomGraphs) {
  TestRng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng.Below(30);
    std::vector<Arc> arcs;
    const std::size_t m = rng.Below(4 * n);
    for (std::size_t i = 0; i < m; ++i) {
      arcs.push_back({static_cast<NodeId>(rng.Below(n)), static_cast<NodeId>(rng.Below(n)),
                      static_cast<std::uint32_t>(1 + rng.Below(3))});
    }
    const Graph g = BuildGraph(n, arcs, rng.Coin(0.5)).graph;
    std::size_t out_total = 0, in_total = 0;
    for (NodeId v = 0; v < n; ++v) {
      for (EdgeId e : g.out_edges(v)) EXPECT_EQ(g.edge(e).src, v);
      for (EdgeId e : g.in_edges(v)) EXPECT_EQ(g.edge(e).dst, v);
      for (std::size_t i = 1; i < g.in_edges(v).size(); ++i) {
        EXPECT_LT(g.in_edges(v)[i - 1], g.in_edges(v)[i]);
      }
      out_total += g.out_edges(v).size();
      in_total += g.in_edges(v).size();
    }
    EXPECT_EQ(out_total, g.num_edges());
    EXPECT_EQ(in_total, g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      EXPECT_EQ(g.edge(e).id, e);
      EXPECT_NE(g.edge(e).src, g.edge(e).dst);
      EXPECT_GE(g.edge(e).multiplicity, 1u);
      if (e > 0) {
        const Edge& a = g.edge(e - 1);
        const Edge& b = g.edge(e);
        EXPECT_TRUE(a.src < b.src || (a.src == b.src && a.dst < b.dst));
      }
    }
  }
}

TEST(LoadEdgeListTest, PlainPairs) {
  std::istringstream in("a b\nb c\n");
  const LabeledGraph lg = LoadEdgeList(in, false);
  EXPECT_EQ(lg.graph.num_nodes(), 3u);
  EXPECT_EQ(lg.graph.num_edges(), 2u);
  EXPECT_EQ(lg.labels, (std::vector<std::string>{"a", "b", "c"}));
}

TEST(LoadEdgeListTest, Multiplicity) {
  std::istringstream in("a b 3\n");
  const LabeledGraph lg = LoadEdgeList(in, false);
  ASSERT_EQ(lg.graph.num_edges(), 1u);
  EXPECT_EQ(lg.graph.edge(0).multiplicity, 3u);
}

TEST(LoadEdgeListTest, CommentsIgnored) {
  std::istringstream in("# header\na b  # trailing\n\n");
  EXPECT_EQ(LoadEdgeList(in, false).graph.num_edges(), 1u);
}

TEST(LoadEdgeListTest, MalformedLineReportsNumber) {
  std::istringstream in("a b\nonly\n");
  try {
    LoadEdgeList(in, false);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(LoadEdgeListTest, BadMultiplicity) {
  for (const char* text : {"a b 0\n", "a b x\n", "a b 2.5\n", "a b c d e\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(LoadEdgeList(in, false), InputError) << text;
  }
}

TEST(LoadEdgeListTest, LookupUnknownLabelThrows) {
  std::istringstream in("a b\n");
  const LabeledGraph lg = LoadEdgeList(in, false);
  EXPECT_EQ(lg.Lookup("b"), 1u);
  EXPECT_THROW(lg.Lookup("zz"), InputError);
}

TEST(LoadEdgeListTest, DumpThenLoadIsIdentity) {
  TestRng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng.Below(15);
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < 2 * n; ++i) {
      arcs.push_back({static_cast<NodeId>(rng.Below(n)), static_cast<NodeId>(rng.Below(n)),
                      static_cast<std::uint32_t>(1 + rng.Below(4))});
    }
    const Graph g = BuildGraph(n, arcs, false).graph;
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < n; ++v) labels.push_back("n" + std::to_string(n - v));
    std::stringstream text;
    DumpEdgeList(g, labels, text);
    const LabeledGraph back = LoadEdgeList(text, false);
    EXPECT_EQ(back.graph, g);
    EXPECT_EQ(back.labels, labels);
  }
}

TEST(UniformParamsTest, ScalesByMultiplicity) {
  const std::vector<Arc> arcs = {{0, 1, 1}, {1, 2, 3}};
  const Graph g = BuildGraph(3, arcs, false).graph;
  const UniformParamsResult ic = UniformParams(g, 0.05, Model::kIC);
  EXPECT_DOUBLE_EQ(ic.params[0], 0.05);
  EXPECT_DOUBLE_EQ(ic.params[1], 0.15);
  const UniformParamsResult clamped = UniformParams(g, 0.4, Model::kIC);
  EXPECT_EQ(clamped.params[1], 1.0);
  EXPECT_EQ(clamped.clamped_edges, 1u);
}

TEST(UniformParamsTest, LtRescalesOverfullNode) {
  const std::vector<Arc> arcs = {{0, 3, 1}, {1, 3, 1}, {2, 3, 1}};
  const Graph g = BuildGraph(4, arcs, false).graph;
  const UniformParamsResult lt = UniformParams(g, 0.4, Model::kLT);
  EXPECT_EQ(lt.rescaled_nodes, 1u);
  double sum = 0.0;
  for (EdgeId e : g.in_edges(3)) {
    EXPECT_NEAR(lt.params[e], 1.0 / 3.0, 1e-15);
    sum += lt.params[e];
  }
  EXPECT_NEAR(sum, 1.0, 1e-15);
}

TEST(UniformParamsTest, OutputAlwaysValid) {
  TestRng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = testing::RandomDigraph(rng, 2 + rng.Below(12), 0.4);
    const double p = rng.Uniform();
    for (Model model : {Model::kIC, Model::kLT}) {
      EXPECT_NO_THROW(ValidateParams(g, UniformParams(g, p, model).params));
    }
  }
}

TEST(UniformParamsTest, RejectsOutOfRangeBase) {
  const Graph g = BuildGraph(1, {}, false).graph;
  EXPECT_THROW(UniformParams(g, 1.5, Model::kIC), InputError);
  EXPECT_THROW(UniformParams(g, -0.1, Model::kIC), InputError);
}

TEST(ValidateParamsTest, RejectsInvalidVectors) {
  const std::vector<Arc> arcs = {{0, 2, 1}, {1, 2, 1}};
  const Graph g = BuildGraph(3, arcs, false).graph;
  EXPECT_THROW(ValidateParams(g, {Model::kIC, {0.5}}), InputError);
  EXPECT_THROW(ValidateParams(g, {Model::kIC, {0.5, 1.2}}), InputError);
  EXPECT_NO_THROW(ValidateParams(g, {Model::kIC, {0.7, 0.7}}));
  EXPECT_THROW(ValidateParams(g, {Model::kLT, {0.7, 0.7}}), InputError);
  EXPECT_NO_THROW(ValidateParams(g, {Model::kLT, {0.5, 0.5 + 1e-12}}));
}

TEST(ModelTest, ParseAndName) {
  EXPECT_EQ(ParseModel("ic"), Model::kIC);
  EXPECT_EQ(ParseModel("LT"), Model::kLT);
  EXPECT_THROW(ParseModel("sir"), InputError);
  EXPECT_STREQ(ModelName(Model::kLT), "LT");
}

TEST(SeedSetTest, SortsAndValidates) {
  const SeedSet s({3, 1, 2}, 4);
  EXPECT_EQ(std::vector<NodeId>(s.nodes().begin(), s.nodes().end()),
            (std::vector<NodeId>{1, 2, 3}));
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(0));
  EXPECT_THROW(SeedSet({1, 1}, 4), InputError);
  EXPECT_THROW(SeedSet({4}, 4), InputError);
  EXPECT_EQ(SeedSet::All(3).size(), 3u);
  EXPECT_TRUE(SeedSet().empty());
}

}  // namespace
}  // namespace imstab
