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

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "trajkit/ids.hpp"
#include "trajkit/morph.hpp"
#include "trajkit/rational.hpp"

namespace trajkit {

enum class Sense { maximize, minimize };

struct CriterionSpec {
  std::string name;
  Sense sense = Sense::maximize;

  bool operator==(const CriterionSpec&) const = default;
};

using Criteria = std::vector<CriterionSpec>;

/// One value per criterion of a fixed registry.
using VectorEstimate = std::vector<Rational>;

struct PlainKind {
  bool operator==(const PlainKind&) const = default;
};
struct AlternativesKind {
  std::vector<DesignAlternative> alternatives;
  bool operator==(const AlternativesKind&) const = default;
};
struct HierarchyKind {
  std::string structure;
  bool operator==(const HierarchyKind&) const = default;
};
struct TwoComponentKind {
  std::string structure;
  std::string rules;
  bool operator==(const TwoComponentKind&) const = default;
};

using VertexKind = std::variant<PlainKind, AlternativesKind, HierarchyKind, TwoComponentKind>;

std::string_view kind_name(const VertexKind& kind);

struct Vertex {
  std::string id;
  VertexKind kind;
  VectorEstimate profit;
  Rational duration{0};
  std::set<std::string> labels;

  bool operator==(const Vertex&) const = default;
};

/// Arc weights are vectors; a scalar weight is a vector of length one.
struct Arc {
  std::string tail;
  std::string head;
  VectorEstimate weight;

  bool operator==(const Arc&) const = default;
};

struct Rule {
  std::string outcome;
  std::string target;

  bool operator==(const Rule&) const = default;
};

struct RuleSet {
  std::string point;
  std::vector<Rule> rules;

  bool operator==(const RuleSet&) const = default;
};

struct DesignSpace {
  std::vector<Vertex> vertices;
  std::vector<Arc> arcs;
  std::vector<std::string> origins;
  std::vector<std::string> goals;
  Criteria criteria;
  std::map<std::string, MorphStructure> structures;
  std::map<std::string, RuleSet> rule_sets;
  // Compatibility between alternatives of neighbouring vertices.
  std::optional<CompatibilityTable> alternative_compatibility;

  const Vertex* find_vertex(std::string_view id) const;
  const Arc* find_arc(std::string_view tail, std::string_view head) const;

  bool operator==(const DesignSpace&) const = default;
};

struct Route {
  std::vector<std::string> vertices;
  VectorEstimate cost;    // summed arc weights
  VectorEstimate profit;  // summed vertex profits, origin excluded
  Rational duration{0};   // summed durations, origin excluded
  bool walk = false;      // revisits allowed

  std::size_t arcs() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
  bool operator==(const Route&) const = default;
};

struct ResolvedRoute {
  Route base;
  std::map<std::string, std::string> choice;  // vertex id -> alternative id

  bool operator==(const ResolvedRoute&) const = default;
};

struct Violation {
  std::string element;
  std::string message;

  bool operator==(const Violation&) const = default;
};

/// Empty iff every type invariant holds.
std::vector<Violation> validate_space(const DesignSpace& space);

/// True iff `a` is at least as good as `b` everywhere and strictly better
/// somewhere. Throws InvalidInput on length mismatch.
bool dominates(const VectorEstimate& a, const VectorEstimate& b, const Criteria& criteria);

/// Indices of the non-dominated estimates, in input order. Equal vectors are
/// all kept.
std::vector<std::size_t> pareto_indices(std::span<const VectorEstimate> items,
                                        const Criteria& criteria);

template <typename T, typename Projection>
std::vector<T> pareto_filter(const std::vector<T>& items, const Criteria& criteria,
                             Projection project) {
  std::vector<VectorEstimate> keys;
  keys.reserve(items.size());
  for (const auto& item : items) keys.push_back(project(item));
  std::vector<T> out;
  for (std::size_t i : pareto_indices(keys, criteria)) out.push_back(items[i]);
  return out;
}

inline std::vector<VectorEstimate> pareto_filter(const std::vector<VectorEstimate>& items,
                                                 const Criteria& criteria) {
  return pareto_filter(items, criteria, [](const VectorEstimate& v) { return v; });
}

/// Cumulative-count dominance on N(S): w1 >= w2 and every prefix sum of n1 is
/// >= the prefix sum of n2, with at least one strict inequality.
/// Throws InvalidInput when the priority vectors differ in length.
bool quality_dominates(const SystemQuality& a, const SystemQuality& b);

struct RouteAggregates {
  VectorEstimate profit;
  Rational duration{0};
  VectorEstimate cost;

  bool operator==(const RouteAggregates&) const = default;
};

/// Profit and duration sum over every vertex except the first; cost sums the
/// arc weights. Throws InvalidRoute for unknown vertices or missing arcs.
RouteAggregates route_aggregates(std::span<const std::string> route, const DesignSpace& space);

/// Builds a Route with its aggregates filled in.
Route make_route(std::vector<std::string> vertices, const DesignSpace& space);

/// Number of arc criteria used by the space (length of the first arc weight).
std::size_t arc_arity(const DesignSpace& space);

/// Sub-space induced by the kept vertices. Origins and goals are filtered.
template <typename Keep>
DesignSpace restrict_space(const DesignSpace& space, Keep keep) {
  DesignSpace out;
  out.criteria = space.criteria;
  out.structures = space.structures;
  out.rule_sets = space.rule_sets;
  out.alternative_compatibility = space.alternative_compatibility;
  std::set<std::string> kept;
  for (const auto& v : space.vertices) {
    if (keep(v)) {
      out.vertices.push_back(v);
      kept.insert(v.id);
    }
  }
  for (const auto& a : space.arcs) {
    if (kept.count(a.tail) && kept.count(a.head)) out.arcs.push_back(a);
  }
  for (const auto& o : space.origins) {
    if (kept.count(o)) out.origins.push_back(o);
  }
  for (const auto& g : space.goals) {
    if (kept.count(g)) out.goals.push_back(g);
  }
  return out;
}

}  // namespace trajkit
