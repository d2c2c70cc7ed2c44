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

#include "trajkit/treatment.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "trajkit/errors.hpp"

namespace trajkit {

const DesignPoint* TreatmentScheme::find_design(std::string_view id) const {
  for (const auto& p : design_points) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

const RuleSet* TreatmentScheme::find_analysis(std::string_view id) const {
  for (const auto& p : analysis_points) {
    if (p.point == id) return &p;
  }
  return nullptr;
}

std::vector<Violation> validate_scheme(const TreatmentScheme& scheme) {
  std::vector<Violation> out;
  std::set<std::string> ids;
  auto claim = [&](const std::string& id, const std::string& element) {
    if (id.empty()) out.push_back({element, "empty id"});
    if (id == kEndPoint) out.push_back({element, "id 'End' is reserved"});
    if (!ids.insert(id).second) out.push_back({element, "duplicate point id"});
  };
  for (const auto& d : scheme.design_points) claim(d.id, "design point " + d.id);
  for (const auto& a : scheme.analysis_points) claim(a.point, "analysis point " + a.point);

  for (const auto& d : scheme.design_points) {
    if (d.next != kEndPoint && scheme.find_analysis(d.next) == nullptr) {
      out.push_back({"design point " + d.id, "successor '" + d.next + "' is neither an analysis point nor End"});
    }
  }
  for (const auto& a : scheme.analysis_points) {
    std::set<std::string> labels;
    if (a.rules.empty()) out.push_back({"analysis point " + a.point, "no rules"});
    for (const auto& r : a.rules) {
      if (!labels.insert(r.outcome).second) {
        out.push_back({"analysis point " + a.point, "duplicate outcome '" + r.outcome + "'"});
      }
      if (r.target != kEndPoint && scheme.find_design(r.target) == nullptr) {
        out.push_back({"analysis point " + a.point,
                       "rule '" + r.outcome + "' targets unknown design point '" + r.target + "'"});
      }
    }
  }
  if (scheme.find_design(scheme.initial) == nullptr) {
    out.push_back({"initial", "initial point '" + scheme.initial + "' is not a design point"});
    return out;
  }

  std::set<std::string> seen{scheme.initial};
  std::deque<std::string> queue{scheme.initial};
  bool end_reached = false;
  while (!queue.empty()) {
    const std::string id = queue.front();
    queue.pop_front();
    std::vector<std::string> next;
    if (const auto* d = scheme.find_design(id)) next.push_back(d->next);
    if (const auto* a = scheme.find_analysis(id)) {
      for (const auto& r : a->rules) next.push_back(r.target);
    }
    for (auto& n : next) {
      if (n == kEndPoint) end_reached = true;
      else if (seen.insert(n).second) queue.push_back(n);
    }
  }
  if (!end_reached) out.push_back({"scheme", "End is not reachable from '" + scheme.initial + "'"});
  return out;
}

std::string_view status_name(WalkStatus status) {
  switch (status) {
    case WalkStatus::completed: return "completed";
    case WalkStatus::truncated_visits: return "truncated_visits";
    case WalkStatus::script_exhausted: return "script_exhausted";
  }
  return "unknown";
}

std::vector<std::string> WalkResult::trajectory() const {
  std::vector<std::string> out;
  for (const auto& s : steps) {
    if (!s.composite.empty()) out.push_back(s.composite);
  }
  return out;
}

Selector pinned_selector(std::vector<std::string> selections) {
  return [selections = std::move(selections)](const DesignPoint&, const std::vector<CompositeDA>& list,
                                              std::size_t step) {
    return step < selections.size() ? selections[step] : list.front().id;
  };
}

TreatmentPlanner::TreatmentPlanner(TreatmentScheme scheme) : scheme_(std::move(scheme)) {
  auto violations = validate_scheme(scheme_);
  if (!violations.empty()) {
    std::vector<std::string> text;
    for (const auto& v : violations) text.push_back(v.element + ": " + v.message);
    throw ValidationError(std::move(text));
  }
}

const std::vector<CompositeDA>& TreatmentPlanner::design_at_point(std::string_view point) {
  const auto key = std::string(point);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  const DesignPoint* d = scheme_.find_design(point);
  if (d == nullptr) throw InvalidInput("'" + key + "' is not a design point");
  MorphStructure structure = d->structure;
  structure.shared.merge_missing(scheme_.shared);
  auto result = synthesize_hierarchical(structure);
  if (result.composites.empty()) {
    throw EmptySynthesis(key, "design point '" + key + "' has no feasible composite (node " +
                                  result.failed_node.value_or(d->structure.root.id) + ")");
  }
  return cache_.emplace(key, std::move(result.composites)).first->second;
}

WalkResult TreatmentPlanner::plan_walk(const OutcomeScript& script, const Selector& selector,
                                       std::size_t max_visits) {
  WalkResult result;
  std::map<std::string, std::size_t> visits;
  std::size_t consumed = 0;
  std::string at = scheme_.initial;
  while (at != kEndPoint) {
    if (++visits[at] > max_visits) {
      result.status = WalkStatus::truncated_visits;
      result.detail = "point " + at + " would be visited more than " + std::to_string(max_visits) + " times";
      return result;
    }
    if (const DesignPoint* d = scheme_.find_design(at)) {
      const auto& list = design_at_point(at);
      std::string pick = selector ? selector(*d, list, result.trajectory().size()) : list.front().id;
      if (std::none_of(list.begin(), list.end(), [&](const CompositeDA& c) { return c.id == pick; })) {
        throw InvalidInput("selection '" + pick + "' is not a Pareto composite of point " + at);
      }
      result.steps.push_back({at, std::move(pick), ""});
      at = d->next;
      continue;
    }
    const RuleSet* a = scheme_.find_analysis(at);
    if (consumed == script.outcomes.size()) {
      --visits[at];
      result.status = WalkStatus::script_exhausted;
      result.detail = "no outcome left for analysis point " + at;
      return result;
    }
    const std::string& label = script.outcomes[consumed++];
    auto rule = std::find_if(a->rules.begin(), a->rules.end(), [&](const Rule& r) { return r.outcome == label; });
    if (rule == a->rules.end()) throw UnknownOutcome(at, label);
    result.steps.push_back({at, "", label});
    at = rule->target;
  }
  result.status = WalkStatus::completed;
  return result;
}

std::vector<std::vector<std::string>> TreatmentPlanner::enumerate_trajectories(std::size_t max_visits) const {
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> path;
  std::map<std::string, std::size_t> visits;
  auto walk = [&](auto&& self, const std::string& at) -> void {
    if (at == kEndPoint) {
      path.push_back(at);
      out.push_back(path);
      path.pop_back();
      return;
    }
    if (visits[at] >= max_visits) return;
    ++visits[at];
    path.push_back(at);
    if (const DesignPoint* d = scheme_.find_design(at)) {
      self(self, d->next);
    } else {
      for (const auto& r : scheme_.find_analysis(at)->rules) self(self, r.target);
    }
    path.pop_back();
    --visits[at];
  };
  walk(walk, scheme_.initial);
  return out;
}

}  // namespace trajkit
