// Copyright 2026 The trajkit Authors
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

#include "trajkit/dot.hpp"

#include <map>
#include <set>
#include <sstream>

namespace trajkit {
namespace {

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string_view shape(const VertexKind& kind) {
  switch (kind.index()) {
    case 0: return "circle";
    case 1: return "doublecircle";
    case 2: return "box3d";
    default: return "Mrecord";
  }
}

constexpr std::string_view kPalette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown"};

std::string weight_label(const VectorEstimate& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + to_string(w[i]);
  return w.size() > 1 ? "(" + out + ")" : out;
}

}  // namespace

std::string export_dot(const DesignSpace& space, std::span<const Route> highlight) {
  std::ostringstream out;
  out << "digraph space {\n";
  if (space.vertices.empty()) {
    out << "}\n";
    return out.str();
  }
  out << "  rankdir=LR;\n";
  const std::set<std::string> origins(space.origins.begin(), space.origins.end());
  const std::set<std::string> goals(space.goals.begin(), space.goals.end());
  for (const auto& v : space.vertices) {
    out << "  " << quote(v.id) << " [shape=" << shape(v.kind) << ", kind=" << kind_name(v.kind);
    if (origins.count(v.id) || goals.count(v.id)) out << ", style=bold";
    out << "];\n";
  }
  std::map<std::pair<std::string, std::string>, std::size_t> colored;
  for (std::size_t r = 0; r < highlight.size(); ++r) {
    const auto& vs = highlight[r].vertices;
    for (std::size_t i = 1; i < vs.size(); ++i) colored.emplace(std::pair{vs[i - 1], vs[i]}, r);
  }
  for (const auto& a : space.arcs) {
    out << "  " << quote(a.tail) << " -> " << quote(a.head) << " [label=" << quote(weight_label(a.weight));
    if (auto it = colored.find({a.tail, a.head}); it != colored.end()) {
      out << ", color=" << kPalette[it->second % std::size(kPalette)] << ", penwidth=2";
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_dot(const TreatmentScheme& scheme) {
  std::ostringstream out;
  out << "digraph scheme {\n  rankdir=LR;\n";
  for (const auto& d : scheme.design_points) {
    out << "  " << quote(d.id) << " [shape=ellipse, style=filled, fillcolor=lightblue, kind=design";
    if (d.id == scheme.initial) out << ", penwidth=2";
    out << "];\n";
  }
  for (const auto& a : scheme.analysis_points) {
    out << "  " << quote(a.point) << " [shape=diamond, kind=analysis];\n";
  }
  out << "  " << quote(kEndPoint) << " [shape=box, kind=end];\n";
  for (const auto& d : scheme.design_points) out << "  " << quote(d.id) << " -> " << quote(d.next) << ";\n";
  for (const auto& a : scheme.analysis_points) {
    for (const auto& r : a.rules) {
      out << "  " << quote(a.point) << " -> " << quote(r.target) << " [label=" << quote(r.outcome) << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace trajkit
