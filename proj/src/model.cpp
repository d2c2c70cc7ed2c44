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

#include "trajkit/model.hpp"

#include <algorithm>
#include <set>

#include "trajkit/errors.hpp"

namespace trajkit {

std::string_view kind_name(const VertexKind& kind) {
  switch (kind.index()) {
    case 0: return "plain";
    case 1: return "alternatives";
    case 2: return "hierarchy";
    default: return "two_component";
  }
}

const Vertex* DesignSpace::find_vertex(std::string_view id) const {
  for (const auto& v : vertices) {
    if (v.id == id) return &v;
  }
  return nullptr;
}

const Arc* DesignSpace::find_arc(std::string_view tail, std::string_view head) const {
  for (const auto& a : arcs) {
    if (a.tail == tail && a.head == head) return &a;
  }
  return nullptr;
}

std::size_t arc_arity(const DesignSpace& space) {
  return space.arcs.empty() ? 1 : space.arcs.front().weight.size();
}

std::vector<Violation> validate_space(const DesignSpace& space) {
  std::vector<Violation> out;
  auto report = [&out](std::string element, std::string message) {
    out.push_back({std::move(element), std::move(message)});
  };

  std::set<std::string> names;
  for (const auto& c : space.criteria) {
    if (!names.insert(c.name).second) report("criterion " + c.name, "duplicate criterion name");
  }

  std::set<std::string> ids;
  for (const auto& v : space.vertices) {
    const std::string element = "vertex " + v.id;
    if (v.id.empty()) report(element, "empty id");
    if (v.id.find(kAltSeparator) != std::string::npos) {
      report(element, "id contains the reserved '^' separator");
    }
    if (!ids.insert(v.id).second) report(element, "duplicate vertex id");
    if (v.duration < 0) report(element, "negative duration");
    if (v.profit.size() != space.criteria.size()) {
      report(element, "profit has " + std::to_string(v.profit.size()) + " values, registry has " +
                          std::to_string(space.criteria.size()));
    }
    if (const auto* alts = std::get_if<AlternativesKind>(&v.kind)) {
      if (alts->alternatives.empty()) report(element, "empty alternatives list");
      std::set<std::string> alt_ids;
      for (const auto& a : alts->alternatives) {
        if (!alt_ids.insert(a.id).second) report(element, "duplicate alternative " + a.id);
        if (a.priority < 1) report(element, "alternative " + a.id + " has priority < 1");
      }
    } else if (const auto* h = std::get_if<HierarchyKind>(&v.kind)) {
      if (!space.structures.count(h->structure)) {
        report(element, "unknown structure '" + h->structure + "'");
      }
    } else if (const auto* t = std::get_if<TwoComponentKind>(&v.kind)) {
      if (!space.structures.count(t->structure)) {
        report(element, "unknown structure '" + t->structure + "'");
      }
      if (!space.rule_sets.count(t->rules)) report(element, "unknown rule set '" + t->rules + "'");
    }
  }

  std::set<std::pair<std::string, std::string>> seen_arcs;
  const std::size_t arity = arc_arity(space);
  for (const auto& a : space.arcs) {
    const std::string element = "arc " + a.tail + "->" + a.head;
    if (!ids.count(a.tail)) report(element, "unknown tail vertex '" + a.tail + "'");
    if (!ids.count(a.head)) report(element, "unknown head vertex '" + a.head + "'");
    if (!seen_arcs.insert({a.tail, a.head}).second) report(element, "duplicate arc");
    if (a.weight.empty()) report(element, "missing weight");
    if (a.weight.size() != arity) report(element, "weight arity differs from other arcs");
    for (const auto& w : a.weight) {
      if (w < 0) {
        report(element, "negative weight " + to_string(w));
        break;
      }
    }
  }

  if (space.origins.empty()) report("origins", "no origin");
  for (const auto& o : space.origins) {
    if (!ids.count(o)) report("origin " + o, "unknown vertex");
  }
  if (space.goals.empty()) report("goals", "no goal");
  for (const auto& g : space.goals) {
    if (!ids.count(g)) report("goal " + g, "unknown vertex");
  }
  return out;
}

bool dominates(const VectorEstimate& a, const VectorEstimate& b, const Criteria& criteria) {
  if (a.size() != b.size() || a.size() != criteria.size()) {
    throw InvalidInput("dominates: estimate lengths " + std::to_string(a.size()) + "/" +
                       std::to_string(b.size()) + " do not match " +
                       std::to_string(criteria.size()) + " criteria");
  }
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const bool maximize = criteria[i].sense == Sense::maximize;
    const bool worse = maximize ? a[i] < b[i] : a[i] > b[i];
    if (worse) return false;
    if (a[i] != b[i]) strict = true;
  }
  return strict;
}

std::vector<std::size_t> pareto_indices(std::span<const VectorEstimate> items,
                                        const Criteria& criteria) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < items.size() && !dominated; ++j) {
      dominated = j != i && dominates(items[j], items[i], criteria);
    }
    if (!dominated) out.push_back(i);
  }
  return out;
}

bool quality_dominates(const SystemQuality& a, const SystemQuality& b) {
  if (a.n.size() != b.n.size()) {
    throw InvalidInput("quality_dominates: priority scales differ (" + std::to_string(a.n.size()) +
                       " vs " + std::to_string(b.n.size()) + ")");
  }
  if (a.w < b.w) return false;
  bool strict = a.w > b.w;
  int sum_a = 0;
  int sum_b = 0;
  for (std::size_t r = 0; r < a.n.size(); ++r) {
    sum_a += a.n[r];
    sum_b += b.n[r];
    if (sum_a < sum_b) return false;
    if (sum_a > sum_b) strict = true;
  }
  return strict;
}

RouteAggregates route_aggregates(std::span<const std::string> route, const DesignSpace& space) {
  RouteAggregates agg;
  agg.profit.assign(space.criteria.size(), Rational(0));
  agg.cost.assign(arc_arity(space), Rational(0));
  for (std::size_t i = 0; i < route.size(); ++i) {
    const Vertex* v = space.find_vertex(route[i]);
    if (v == nullptr) throw InvalidRoute("unknown vertex '" + route[i] + "' in route");
    if (i == 0) continue;
    const Arc* arc = space.find_arc(route[i - 1], route[i]);
    if (arc == nullptr) {
      throw InvalidRoute("no arc " + route[i - 1] + "->" + route[i] + " in route");
    }
    for (std::size_t c = 0; c < agg.cost.size() && c < arc->weight.size(); ++c) {
      agg.cost[c] += arc->weight[c];
    }
    for (std::size_t c = 0; c < agg.profit.size() && c < v->profit.size(); ++c) {
      agg.profit[c] += v->profit[c];
    }
    agg.duration += v->duration;
  }
  return agg;
}

Route make_route(std::vector<std::string> vertices, const DesignSpace& space) {
  auto agg = route_aggregates(vertices, space);
  Route r;
  r.vertices = std::move(vertices);
  r.cost = std::move(agg.cost);
  r.profit = std::move(agg.profit);
  r.duration = agg.duration;
  return r;
}

}  // namespace trajkit
