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

#include "imstab/instance_io.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <utility>

#include <fmt/format.h>

#include "imstab/errors.h"

namespace imstab {
namespace {

constexpr std::string_view kNodesPragma = "# nodes:";

struct Line {
  std::size_t number;
  std::vector<std::string> fields;
};

double ParseBound(const std::string& text, std::size_t line_no) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw InputError(fmt::format("line {}: invalid interval bound '{}'", line_no, text));
  }
  return value;
}

InstanceFile ParseIntervals(const std::vector<std::string>& header,
                            const std::vector<Line>& lines, Model model, bool undirected) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> ids;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = ids.emplace(label, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };
  for (const std::string& label : header) intern(label);

  std::map<std::pair<NodeId, NodeId>, Interval> bounds;
  std::size_t self_loops = 0;
  auto add = [&](NodeId src, NodeId dst, Interval iv, std::size_t line_no) {
    if (!bounds.emplace(std::make_pair(src, dst), iv).second) {
      throw InputError(fmt::format("line {}: edge {} -> {} listed twice", line_no,
                                   labels[src], labels[dst]));
    }
  };
  for (const Line& line : lines) {
    const NodeId src = intern(line.fields[0]);
    const NodeId dst = intern(line.fields[1]);
    const Interval iv{ParseBound(line.fields[2], line.number),
                      ParseBound(line.fields[3], line.number)};
    if (src == dst) {
      ++self_loops;
      continue;
    }
    add(src, dst, iv, line.number);
    if (undirected) add(dst, src, iv, line.number);
  }

  std::vector<Arc> arcs;
  arcs.reserve(bounds.size());
  for (const auto& [key, iv] : bounds) arcs.push_back({key.first, key.second, 1});
  BuildResult built = BuildGraph(labels.size(), arcs, false);

  UncertaintyModel u;
  u.model = model;
  u.intervals.reserve(bounds.size());
  // BuildGraph orders edges by (src, dst), the same order as the map.
  for (const auto& [key, iv] : bounds) u.intervals.push_back(iv);
  ValidateUncertainty(built.graph, u);

  InstanceFile file;
  file.graph = {std::move(built.graph), std::move(labels), self_loops};
  file.uncertainty = std::move(u);
  return file;
}

}  // namespace

InstanceFile LoadInstance(std::istream& in, Model model, bool undirected) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  std::istringstream scan(text);
  std::vector<std::string> header;
  std::vector<Line> interval_lines;
  std::size_t plain_lines = 0;
  std::size_t first_plain = 0;
  std::string line;
  for (std::size_t line_no = 1; std::getline(scan, line); ++line_no) {
    if (line.rfind(kNodesPragma, 0) == 0) {
      std::istringstream tokens(line.substr(kNodesPragma.size()));
      for (std::string label; tokens >> label;) header.push_back(label);
      continue;
    }
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream tokens(line);
    Line parsed{line_no, {}};
    for (std::string tok; tokens >> tok;) parsed.fields.push_back(std::move(tok));
    if (parsed.fields.size() == 4) {
      interval_lines.push_back(std::move(parsed));
    } else if (!parsed.fields.empty()) {
      if (plain_lines++ == 0) first_plain = line_no;
    }
  }

  if (interval_lines.empty()) {
    std::istringstream plain(text);
    return {LoadEdgeList(plain, undirected), std::nullopt};
  }
  if (plain_lines > 0) {
    throw InputError(fmt::format(
        "line {}: interval instances need 'src dst lower upper' on every line",
        first_plain));
  }
  return ParseIntervals(header, interval_lines, model, undirected);
}

InstanceFile LoadInstanceFile(const std::string& path, Model model, bool undirected) {
  std::ifstream in(path);
  if (!in) throw InputError(fmt::format("cannot open instance '{}'", path));
  return LoadInstance(in, model, undirected);
}

void DumpInstance(const UncertainInstance& instance, std::ostream& out) {
  const Graph& g = instance.graph;
  if (instance.labels.size() != g.num_nodes()) {
    throw InputError("label count does not match node count");
  }
  ValidateUncertainty(g, instance.uncertainty);
  out << kNodesPragma;
  for (const std::string& label : instance.labels) out << ' ' << label;
  out << '\n';
  for (const Edge& e : g.edges()) {
    const Interval& iv = instance.uncertainty.intervals[e.id];
    out << fmt::format("{} {} {} {}\n", instance.labels[e.src], instance.labels[e.dst],
                       iv.lower, iv.upper);
  }
}

}  // namespace imstab
