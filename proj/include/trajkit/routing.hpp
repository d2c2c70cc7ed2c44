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
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "trajkit/model.hpp"

namespace trajkit {

/// Dense index over a DesignSpace. Outgoing arcs are listed in id order of
/// their heads; `rank` gives each vertex's position in id order.
class SpaceIndex {
 public:
  struct Edge {
    int head;
    const VectorEstimate* weight;
  };

  explicit SpaceIndex(const DesignSpace& space);

  int size() const noexcept { return static_cast<int>(ids_.size()); }
  /// -1 when the id is unknown.
  int index(std::string_view id) const;
  int require(std::string_view id) const;
  const std::string& id(int v) const { return ids_[v]; }
  int rank(int v) const { return rank_[v]; }
  const std::vector<Edge>& out(int v) const { return out_[v]; }
  const Vertex& vertex(int v) const { return *vertices_[v]; }
  const DesignSpace& space() const noexcept { return *space_; }

  std::vector<std::string> to_ids(std::span<const int> path) const;
  /// Lexicographic comparison of vertex sequences under id order.
  bool lex_less(std::span<const int> a, std::span<const int> b) const;

 private:
  const DesignSpace* space_;
  std::vector<std::string> ids_;
  std::vector<const Vertex*> vertices_;
  std::vector<int> rank_;
  std::vector<std::vector<Edge>> out_;
  std::unordered_map<std::string, int> lookup_;
};

/// Total order used for every tie-break: cost, then fewer arcs, then
/// lexicographically smaller vertex sequence. Requires scalar costs.
bool route_order_less(const Route& a, const Route& b);

/// Minimum-weight path. nullopt when the goal is unreachable.
/// Throws InvalidInput for unknown ids, vector or negative weights.
std::optional<Route> shortest_path(const DesignSpace& space, std::string_view origin,
                                   std::string_view goal);

/// The k lowest-cost simple paths (Yen's deviation scheme), in route order.
std::vector<Route> k_shortest_paths(const DesignSpace& space, std::string_view origin,
                                    std::string_view goal, std::size_t k);

/// One shortest-path tree, read off at every goal.
std::map<std::string, std::optional<Route>, IdLess> multi_goal_shortest(
    const DesignSpace& space, std::string_view origin, std::span<const std::string> goals);

/// Pareto-optimal cost vectors (all criteria minimized) with one
/// representative path each, found by label correcting with dominance
/// pruning. Sorted by cost vector.
std::vector<Route> multicriteria_shortest(const DesignSpace& space, std::string_view origin,
                                          std::string_view goal);

struct ReplanState {
  std::vector<std::string> prefix;  // traversed so far; back() is the current vertex
  std::vector<Route> candidates;    // produced against the original space
  std::size_t incumbent = 0;        // candidate currently followed
  DesignSpace updated;              // same vertex ids, new weights/arcs
};

struct ReplanDecision {
  std::size_t candidate = 0;
  Route connector;     // current vertex -> join vertex (single vertex when already on it)
  Route continuation;  // connector followed by the candidate's remainder
  Rational total{0};
  bool switched = false;
};

/// Re-costs every candidate's remaining part (plus the cheapest connector
/// onto it) under the updated weights and returns the cheapest. A connector
/// joins a candidate at or after the current vertex's position and before
/// its last vertex. The incumbent wins ties. Throws NoFeasibleRoute when nothing is reachable.
ReplanDecision replan_on_change(const ReplanState& state);

struct OrienteeringInstance {
  DesignSpace space;
  std::string start;
  std::string end;
  std::optional<Rational> budget;    // cap on total arc cost
  std::optional<Rational> arc_cap;   // cap on every single arc
  std::optional<Rational> time_cap;  // cap on summed durations (start excluded)
  std::size_t profit_index = 0;      // criterion used as scalar profit
  std::size_t max_vertices = 24;
};

struct OrienteeringResult {
  Route route;
  Rational score{0};  // summed profit over every visited vertex
};

/// Exact single-objective orienteering by depth-first branch and bound.
/// Throws Infeasible when the budget admits no start->end path.
OrienteeringResult orienteering_exact(const OrienteeringInstance& instance);

/// All simple start->end paths meeting the per-arc and time caps, filtered to
/// the Pareto set over (profits..., total cost minimized).
std::vector<Route> orienteering_multiobjective(const OrienteeringInstance& instance);

/// The registry used by orienteering_multiobjective: the space criteria plus
/// a minimized "d" for the summed arc cost.
Criteria route_criteria(const DesignSpace& space);
VectorEstimate route_objectives(const Route& route);

}  // namespace trajkit
