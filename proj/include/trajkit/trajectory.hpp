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

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trajkit/hmmd.hpp"
#include "trajkit/model.hpp"

namespace trajkit {

// Composite routes over spaces whose vertices carry alternatives.

/// Vertex id -> alternative id forced during resolution.
using Pins = std::map<std::string, std::string>;

/// Shortest route over the base vertices, then one alternative per non-plain
/// vertex: minimum summed priority, ties to the smaller id sequence, with
/// nonzero compatibility between consecutive choices when the space carries
/// an alternative table. Hierarchy and two-component vertices offer their
/// synthesized composites at priority 1.
/// Throws NoFeasibleRoute, IncompatibleResolution, InvalidInput.
ResolvedRoute strategy1_global_route(const DesignSpace& space, std::string_view origin,
                                     std::string_view goal, const Pins& pins = {});

/// Extra cost for an extended arc, given the base arc and the two endpoint
/// alternatives (nullptr for a plain endpoint).
using Surcharge = std::function<Rational(const Arc&, const DesignAlternative* tail,
                                         const DesignAlternative* head)>;

/// "m2^3": alternative 3 (1-based, declaration order) of vertex "m2".
std::string extended_id(std::string_view vertex, std::size_t alternative);
/// Inverse of extended_id; plain ids come back with index 0.
std::pair<std::string, std::size_t> split_extended_id(std::string_view id);

/// One vertex per (vertex, alternative); plain vertices are copied. Arcs
/// follow the base arcs, skipping pairs the alternative table scores 0.
/// Weight = base weight + surcharge. Origins and goals expand likewise.
/// Throws InvalidInput for hierarchy or two-component vertices.
DesignSpace extend_digraph(const DesignSpace& space, const Surcharge& surcharge = {});

/// Best route in the extended space over every (origin, goal) pair under the
/// route order. Origins/goals may name base vertices (all their
/// alternatives) or extended ids. The result's cost includes surcharges.
/// Throws NoFeasibleRoute.
ResolvedRoute strategy2_solve(const DesignSpace& space, std::span<const std::string> origins,
                              std::span<const std::string> goals, const Surcharge& surcharge = {});

struct Stage {
  std::string id;
  MorphStructure structure;
  // Stage-level priority of each composite (1 when absent).
  std::map<std::string, int> priorities;

  bool operator==(const Stage&) const = default;
};

struct Scenario {
  std::vector<Stage> stages;
  CompatibilityTable compatibility;  // between composites of different stages
  int k = 3;
  int l = 3;

  bool operator==(const Scenario&) const = default;
};

struct StageTrajectory {
  std::vector<std::string> composites;  // one per stage
  SystemQuality quality;

  bool operator==(const StageTrajectory&) const = default;
};

struct MultistageResult {
  std::vector<SynthesisResult> stages;
  std::vector<StageTrajectory> trajectories;
  std::vector<std::string> diagnostics;

  bool operator==(const MultistageResult&) const = default;
};

/// One composite per stage. w is the minimum estimate over adjacent stages
/// (missing = 0) and over any non-adjacent pair the table defines; n counts
/// stage-level priorities. Returns the quality_dominates-Pareto set of the
/// trajectories with w >= 1 in enumeration order.
MultistageResult multistage_synthesize(const Scenario& scenario);

struct Checkpoint {
  std::string id;
  std::map<std::string, std::string> required;  // domain -> vertex

  bool operator==(const Checkpoint&) const = default;
};

struct CoordinationEntry {
  std::string domain;
  std::string checkpoint;
  std::string detail;

  bool operator==(const CoordinationEntry&) const = default;
};

struct CoordinationReport {
  std::vector<CoordinationEntry> satisfied;
  std::vector<CoordinationEntry> violated;

  bool feasible() const noexcept { return violated.empty(); }
  bool operator==(const CoordinationReport&) const = default;
};

/// Checkpoints are in time order: each domain route must visit the required
/// vertices in that order.
CoordinationReport coordinate_multidomain(const std::map<std::string, Route>& routes,
                                          std::span<const Checkpoint> checkpoints);

struct LayerDomain {
  DesignSpace space;
  std::vector<std::string> gateways;      // present in both layers
  std::vector<std::string> destinations;  // vertices of this domain

  bool operator==(const LayerDomain&) const = default;
};

struct LayeredPlan {
  DesignSpace up;
  std::map<std::string, LayerDomain> domains;
  std::vector<std::string> up_destinations;  // served by the up-layer alone

  bool operator==(const LayeredPlan&) const = default;
};

struct LayeredRoute {
  std::string domain;   // empty for up-layer destinations
  std::string gateway;  // empty for up-layer destinations
  Route up;
  std::optional<Route> down;
  std::vector<std::string> vertices;  // joined at the gateway
  Rational total{0};

  bool operator==(const LayeredRoute&) const = default;
};

/// Cheapest source -> gateway -> destination per destination; ties follow
/// the route order on the joined sequence. nullopt marks unreachable ones.
/// Throws InvalidInput when a destination id is listed twice or a gateway
/// is missing from either layer.
std::map<std::string, std::optional<LayeredRoute>, IdLess> compose_layered_routes(
    const LayeredPlan& plan, std::string_view source);

}  // namespace trajkit
