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
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trajkit/hmmd.hpp"
#include "trajkit/model.hpp"

namespace trajkit {

/// Reserved id of the terminal point.
inline constexpr std::string_view kEndPoint = "End";

struct DesignPoint {
  std::string id;
  MorphStructure structure;
  std::string next;  // analysis point id or "End"

  bool operator==(const DesignPoint&) const = default;
};

struct TreatmentScheme {
  std::vector<DesignPoint> design_points;
  std::vector<RuleSet> analysis_points;  // RuleSet::point is the analysis point id
  std::string initial;
  // Estimates shared by every design point, consulted after each
  // structure's own tables.
  CompatibilityTable shared;

  const DesignPoint* find_design(std::string_view id) const;
  const RuleSet* find_analysis(std::string_view id) const;

  bool operator==(const TreatmentScheme&) const = default;
};

/// Outcome labels consumed at successive analysis-point visits.
struct OutcomeScript {
  std::vector<std::string> outcomes;
  // Optional composite picks for successive design steps.
  std::vector<std::string> selections;

  bool operator==(const OutcomeScript&) const = default;
};

/// Empty iff ids are unique, every reference resolves, the initial point is
/// a design point and End is reachable from it.
std::vector<Violation> validate_scheme(const TreatmentScheme& scheme);

enum class WalkStatus { completed, truncated_visits, script_exhausted };

std::string_view status_name(WalkStatus status);

struct WalkStep {
  std::string point;
  std::string composite;  // design points only
  std::string outcome;    // analysis points only

  bool operator==(const WalkStep&) const = default;
};

struct WalkResult {
  WalkStatus status = WalkStatus::completed;
  std::vector<WalkStep> steps;
  std::string detail;  // why a walk stopped early

  /// Composite ids in visit order.
  std::vector<std::string> trajectory() const;
  bool operator==(const WalkResult&) const = default;
};

/// Picks one composite at a design point given its Pareto list and the
/// number of design steps already taken in the walk.
using Selector = std::function<std::string(const DesignPoint&, const std::vector<CompositeDA>&,
                                           std::size_t step)>;

/// Selector returning selections[step], or the first composite once the
/// list runs out.
Selector pinned_selector(std::vector<std::string> selections);

class TreatmentPlanner {
 public:
  /// Throws ValidationError when the scheme is invalid.
  explicit TreatmentPlanner(TreatmentScheme scheme);

  const TreatmentScheme& scheme() const noexcept { return scheme_; }

  /// Pareto composites of a design point, computed once.
  /// Throws InvalidInput for unknown points, EmptySynthesis when empty.
  const std::vector<CompositeDA>& design_at_point(std::string_view point);

  /// Default selector: first composite. A point visited more than
  /// `max_visits` times truncates the walk.
  /// Throws UnknownOutcome and InvalidInput (selector returned a foreign id).
  WalkResult plan_walk(const OutcomeScript& script, const Selector& selector = {},
                       std::size_t max_visits = 3);

  /// Every initial -> End point sequence with no point visited more than
  /// `max_visits` times, in rule order.
  std::vector<std::vector<std::string>> enumerate_trajectories(std::size_t max_visits) const;

 private:
  TreatmentScheme scheme_;
  std::map<std::string, std::vector<CompositeDA>> cache_;
};

}  // namespace trajkit
