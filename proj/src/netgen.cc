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

#include "imstab/netgen.h"

#include <algorithm>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "imstab/errors.h"
#include "imstab/rng.h"

namespace imstab {
namespace {

Graph FromUndirected(std::size_t n, const std::vector<Arc>& arcs) {
  return BuildGraph(n, arcs, /*undirected=*/true).graph;
}

std::vector<Arc> ArcsFromAdjacency(const std::vector<std::set<NodeId>>& adj) {
  std::vector<Arc> arcs;
  for (NodeId u = 0; u < adj.size(); ++u) {
    for (NodeId w : adj[u]) {
      if (u < w) arcs.push_back({u, w, 1});
    }
  }
  return arcs;
}

}  // namespace

Graph Grid2D(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw InputError("grid dimensions must be positive");
  std::vector<Arc> arcs;
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<NodeId>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) arcs.push_back({id(r, c), id(r, c + 1), 1});
      if (r + 1 < rows) arcs.push_back({id(r, c), id(r + 1, c), 1});
    }
  }
  return FromUndirected(rows * cols, arcs);
}

Graph RandomRegular(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (d >= n || (n * d) % 2 != 0) {
    throw InputError(fmt::format("no simple {}-regular graph on {} nodes", d, n));
  }
  for (int attempt = 0; attempt < kRegularRestartBudget; ++attempt) {
    CounterRng rng(seed, StreamDomain::kGenerator, static_cast<std::uint64_t>(attempt));
    std::vector<NodeId> points;
    points.reserve(n * d);
    for (NodeId v = 0; v < n; ++v) points.insert(points.end(), d, v);
    std::vector<std::vector<NodeId>> adj(n);
    auto legal = [&adj](NodeId u, NodeId v) {
      return u != v && std::find(adj[u].begin(), adj[u].end(), v) == adj[u].end();
    };
    auto take = [&points](std::size_t i, std::size_t j) {
      if (i < j) std::swap(i, j);
      points[i] = points.back();
      points.pop_back();
      points[j] = points.back();
      points.pop_back();
    };

    bool stuck = false;
    while (!points.empty()) {
      bool paired = false;
      for (int tries = 0; tries < 64 && !paired; ++tries) {
        const std::size_t i = rng.Below(points.size());
        const std::size_t j = rng.Below(points.size());
        if (i == j || !legal(points[i], points[j])) continue;
        adj[points[i]].push_back(points[j]);
        adj[points[j]].push_back(points[i]);
        take(i, j);
        paired = true;
      }
      if (paired) continue;
      // Random probing failed; fall back to the explicit list of legal pairs.
      std::vector<std::pair<std::size_t, std::size_t>> candidates;
      for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
          if (legal(points[i], points[j])) candidates.emplace_back(i, j);
        }
      }
      if (candidates.empty()) {
        stuck = true;
        break;
      }
      auto [i, j] = candidates[rng.Below(candidates.size())];
      adj[points[i]].push_back(points[j]);
      adj[points[j]].push_back(points[i]);
      take(i, j);
    }
    if (stuck) continue;

    std::vector<Arc> arcs;
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId w : adj[u]) {
        if (u < w) arcs.push_back({u, w, 1});
      }
    }
    return FromUndirected(n, arcs);
  }
  throw GenerationError(fmt::format("random {}-regular graph on {} nodes: restart budget of {} "
                                    "exhausted",
                                    d, n, kRegularRestartBudget));
}

Graph WattsStrogatz(std::size_t n, std::size_t side, double beta, std::uint64_t seed) {
  if (side == 0 || 2 * side >= n) {
    throw InputError(fmt::format("small world needs 0 < 2*side < n (side={}, n={})", side, n));
  }
  if (!(beta >= 0.0 && beta <= 1.0)) throw InputError("rewiring probability outside [0,1]");
  std::vector<std::set<NodeId>> adj(n);
  for (NodeId u = 0; u < n; ++u) {
    for (std::size_t j = 1; j <= side; ++j) {
      const NodeId v = static_cast<NodeId>((u + j) % n);
      adj[u].insert(v);
      adj[v].insert(u);
    }
  }
  CounterRng rng(seed, StreamDomain::kGenerator);
  for (std::size_t j = 1; j <= side; ++j) {
    for (NodeId u = 0; u < n; ++u) {
      const NodeId v = static_cast<NodeId>((u + j) % n);
      if (!rng.Bernoulli(beta)) continue;
      // The lattice edge may already be gone if v rewired it earlier.
      if (!adj[u].contains(v)) continue;
      if (adj[u].size() >= n - 1) continue;
      NodeId w;
      do {
        w = static_cast<NodeId>(rng.Below(n));
      } while (w == u || adj[u].contains(w));
      adj[u].erase(v);
      adj[v].erase(u);
      adj[u].insert(w);
      adj[w].insert(u);
    }
  }
  return FromUndirected(n, ArcsFromAdjacency(adj));
}

Graph BarabasiAlbert(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m == 0 || m >= n) {
    throw InputError(fmt::format("preferential attachment needs 1 <= m < n (m={}, n={})", m, n));
  }
  std::vector<Arc> arcs;
  std::vector<NodeId> endpoints;
  for (NodeId u = 0; u <= m; ++u) {
    for (NodeId w = u + 1; w <= m; ++w) {
      arcs.push_back({u, w, 1});
      endpoints.push_back(u);
      endpoints.push_back(w);
    }
  }
  CounterRng rng(seed, StreamDomain::kGenerator);
  std::vector<NodeId> targets;
  for (NodeId t = static_cast<NodeId>(m + 1); t < n; ++t) {
    targets.clear();
    while (targets.size() < m) {
      const NodeId x = endpoints[rng.Below(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), x) == targets.end()) targets.push_back(x);
    }
    for (NodeId x : targets) {
      arcs.push_back({t, x, 1});
      endpoints.push_back(x);
      endpoints.push_back(t);
    }
  }
  return FromUndirected(n, arcs);
}

Graph Clique(std::size_t n) {
  if (n < 2) throw InputError("clique needs at least 2 nodes");
  std::vector<Arc> arcs;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId w = u + 1; w < n; ++w) arcs.push_back({u, w, 1});
  }
  return FromUndirected(n, arcs);
}

Graph TwoCliques(std::size_t n) {
  if (n < 2) throw InputError("two_cliques needs at least 2 nodes per clique");
  std::vector<Arc> arcs;
  for (NodeId block = 0; block < 2; ++block) {
    const NodeId base = static_cast<NodeId>(block * n);
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId w = u + 1; w < n; ++w) arcs.push_back({base + u, base + w, 1});
    }
  }
  return FromUndirected(2 * n, arcs);
}

namespace {

struct FamilyName {
  Family family;
  const char* name;
};

constexpr FamilyName kFamilies[] = {
    {Family::kGrid2D, "grid"},       {Family::kRandomRegular, "regular"},
    {Family::kSmallWorld, "smallworld"}, {Family::kPrefAttach, "pa"},
    {Family::kClique, "clique"},     {Family::kTwoCliques, "two-cliques"},
};

std::size_t ParseCount(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  unsigned long long parsed = 0;
  try {
    parsed = std::stoull(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) {
    throw InputError(fmt::format("network parameter {}='{}' is not a count", key, value));
  }
  return static_cast<std::size_t>(parsed);
}

}  // namespace

GenSpec ParseGenSpec(const std::string& text, std::uint64_t seed) {
  GenSpec spec;
  spec.seed = seed;
  const auto colon = text.find(':');
  const std::string family = text.substr(0, colon);
  auto it = std::find_if(std::begin(kFamilies), std::end(kFamilies),
                         [&](const FamilyName& f) { return family == f.name; });
  if (it == std::end(kFamilies)) {
    throw InputError(fmt::format("unknown network family '{}'", family));
  }
  spec.family = it->family;
  if (colon != std::string::npos) {
    std::istringstream params(text.substr(colon + 1));
    for (std::string item; std::getline(params, item, ',');) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) {
        throw InputError(fmt::format("network parameter '{}' is not key=value", item));
      }
      const std::string key = item.substr(0, eq);
      const std::string value = item.substr(eq + 1);
      if (key == "rows") {
        spec.rows = ParseCount(key, value);
      } else if (key == "cols") {
        spec.cols = ParseCount(key, value);
      } else if (key == "n") {
        spec.n = ParseCount(key, value);
      } else if (key == "d") {
        spec.degree = ParseCount(key, value);
      } else if (key == "side") {
        spec.side = ParseCount(key, value);
      } else if (key == "m") {
        spec.attach = ParseCount(key, value);
      } else if (key == "beta") {
        try {
          spec.beta = std::stod(value);
        } catch (const std::exception&) {
          throw InputError(fmt::format("network parameter beta='{}' is not a number", value));
        }
      } else {
        throw InputError(fmt::format("unknown network parameter '{}'", key));
      }
    }
  }
  return spec;
}

std::string FormatGenSpec(const GenSpec& spec) {
  switch (spec.family) {
    case Family::kGrid2D:
      return fmt::format("grid:rows={},cols={}", spec.rows, spec.cols);
    case Family::kRandomRegular:
      return fmt::format("regular:n={},d={}", spec.n, spec.degree);
    case Family::kSmallWorld:
      return fmt::format("smallworld:n={},side={},beta={}", spec.n, spec.side, spec.beta);
    case Family::kPrefAttach:
      return fmt::format("pa:n={},m={}", spec.n, spec.attach);
    case Family::kClique:
      return fmt::format("clique:n={}", spec.n);
    case Family::kTwoCliques:
      return fmt::format("two-cliques:n={}", spec.n);
  }
  return "unknown";
}

Graph Generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::kGrid2D:
      return Grid2D(spec.rows, spec.cols);
    case Family::kRandomRegular:
      return RandomRegular(spec.n, spec.degree, spec.seed);
    case Family::kSmallWorld:
      return WattsStrogatz(spec.n, spec.side, spec.beta, spec.seed);
    case Family::kPrefAttach:
      return BarabasiAlbert(spec.n, spec.attach, spec.seed);
    case Family::kClique:
      return Clique(spec.n);
    case Family::kTwoCliques:
      return TwoCliques(spec.n);
  }
  throw InputError("unknown network family");
}

}  // namespace imstab
