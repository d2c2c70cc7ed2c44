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

#include "trajkit/presets.hpp"

#include <algorithm>
#include <set>

#include "bundled.hpp"
#include "trajkit/errors.hpp"
#include "trajkit/io.hpp"
#include "trajkit/routing.hpp"

namespace trajkit {

std::string_view bundled_text(std::string_view name) {
  for (const auto& f : detail::bundled_files()) {
    if (f.name == name) return f.text;
  }
  throw InvalidInput("no bundled data file named '" + std::string(name) + "'");
}

std::vector<std::string> bundled_names() {
  std::vector<std::string> out;
  for (const auto& f : detail::bundled_files()) out.emplace_back(f.name);
  return out;
}

namespace {

template <typename T>
T load(std::string_view name) {
  return parse_as<T>(bundled_text(name), "bundled:" + std::string(name));
}

std::vector<std::vector<std::string>> all_paths(const DesignSpace& space, std::string_view start,
                                                std::string_view end) {
  SpaceIndex g(space);
  const int s = g.index(start);
  const int t = g.index(end);
  std::vector<std::vector<std::string>> out;
  if (s < 0 || t < 0) return out;
  std::vector<int> path{s};
  std::vector<char> on_path(g.size(), 0);
  on_path[s] = 1;
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == t) {
      out.push_back(g.to_ids(path));
      return;
    }
    for (const auto& e : g.out(v)) {
      if (on_path[e.head]) continue;
      on_path[e.head] = 1;
      path.push_back(e.head);
      self(self, e.head);
      path.pop_back();
      on_path[e.head] = 0;
    }
  };
  dfs(dfs, s);
  return out;
}

bool within_caps(const Route& r, const DesignSpace& space, const Rational& arc_cap, const Rational& time_cap) {
  if (r.duration > time_cap) return false;
  for (std::size_t i = 1; i < r.vertices.size(); ++i) {
    const Arc* a = space.find_arc(r.vertices[i - 1], r.vertices[i]);
    if (a->weight.at(0) > arc_cap) return false;
  }
  return true;
}

}  // namespace

DesignSpace bundled_edu_space() { return load<DesignSpace>("edu_space"); }
EduReference bundled_edu_reference() { return load<EduReference>("edu_reference"); }
Scenario bundled_startup_scenario() { return load<Scenario>("startup_scenario"); }
StartupReference bundled_startup_reference() { return load<StartupReference>("startup_reference"); }
TreatmentScheme bundled_medical_scheme() { return load<TreatmentScheme>("medical_scheme"); }
OutcomeScript bundled_medical_script() { return load<OutcomeScript>("medical_script"); }

DesignSpace template_space(const DesignSpace& space, const GeneralizedTemplate& tpl) {
  auto class_of = [&](const Vertex& v) -> int {
    for (std::size_t i = 0; i < tpl.classes.size(); ++i) {
      if (v.labels.count(tpl.classes[i])) return static_cast<int>(i);
    }
    return -1;
  };
  DesignSpace out = restrict_space(space, [&](const Vertex& v) { return class_of(v) >= 0; });
  std::erase_if(out.arcs, [&](const Arc& a) {
    return class_of(*out.find_vertex(a.head)) != class_of(*out.find_vertex(a.tail)) + 1;
  });
  return out;
}

EduResult edu_pipeline(const DesignSpace& space, const EduReference& reference,
                       std::optional<Rational> arc_cap, std::optional<Rational> time_cap) {
  EduResult result;
  result.arc_cap = arc_cap.value_or(reference.arc_cap);
  result.time_cap = time_cap.value_or(reference.time_cap);
  if (result.arc_cap < 0 || result.time_cap < 0) throw InvalidInput("caps must be nonnegative");

  std::vector<Route> pool;
  for (const auto& tpl : reference.templates) {
    TemplateOutcome outcome;
    outcome.id = tpl.id;
    const DesignSpace sub = template_space(space, tpl);
    std::vector<Route> routes;
    for (auto& p : all_paths(sub, reference.start, reference.end)) routes.push_back(make_route(std::move(p), space));
    outcome.route_count = routes.size();
    for (const auto& r : routes) {
      if (!outcome.min_d || r.cost.at(0) < *outcome.min_d) outcome.min_d = r.cost.at(0);
    }
    for (const auto& r : routes) {
      if (r.cost.at(0) == *outcome.min_d) outcome.ties.push_back(r);
    }
    std::sort(outcome.ties.begin(), outcome.ties.end(), route_order_less);

    // Successive non-dominated layers over the profit criteria.
    outcome.theta_rank.assign(outcome.ties.size(), 0);
    for (int layer = 1; std::count(outcome.theta_rank.begin(), outcome.theta_rank.end(), 0) > 0; ++layer) {
      std::vector<std::size_t> current;
      for (std::size_t i = 0; i < outcome.ties.size(); ++i) {
        if (outcome.theta_rank[i] != 0) continue;
        bool dominated = false;
        for (std::size_t j = 0; j < outcome.ties.size() && !dominated; ++j) {
          dominated = outcome.theta_rank[j] == 0 &&
                      dominates(outcome.ties[j].profit, outcome.ties[i].profit, space.criteria);
        }
        if (!dominated) current.push_back(i);
      }
      for (auto i : current) outcome.theta_rank[i] = layer;
    }
    pool.insert(pool.end(), outcome.ties.begin(), outcome.ties.end());
    result.templates.push_back(std::move(outcome));
  }

  std::erase_if(pool, [&](const Route& r) { return !within_caps(r, space, result.arc_cap, result.time_cap); });
  result.final_set = pareto_filter(pool, route_criteria(space), route_objectives);
  return result;
}

std::vector<DiscrepancyRecord> audit_printed_routes(const DesignSpace& space, const EduReference& reference) {
  std::vector<DiscrepancyRecord> out;
  for (const auto& p : reference.printed) {
    const auto agg = route_aggregates(p.vertices, space);
    if (p.theta.size() != agg.profit.size()) {
      throw InvalidInput("printed route " + p.id + " has " + std::to_string(p.theta.size()) + " profit values");
    }
    for (std::size_t i = 0; i < agg.profit.size(); ++i) {
      if (p.theta[i] != agg.profit[i]) out.push_back({p.id, space.criteria[i].name, p.theta[i], agg.profit[i]});
    }
    if (p.tau != agg.duration) out.push_back({p.id, "tau", p.tau, agg.duration});
    if (p.d != agg.cost.at(0)) out.push_back({p.id, "d", p.d, agg.cost.at(0)});
  }
  return out;
}

std::vector<DiscrepancyRecord> edu_audit_table6() {
  return audit_printed_routes(bundled_edu_space(), bundled_edu_reference());
}

MultistageResult startup_pipeline(const Scenario& scenario) { return multistage_synthesize(scenario); }

MultistageResult startup_pipeline() { return startup_pipeline(bundled_startup_scenario()); }

MedicalResult medical_pipeline(const TreatmentScheme& scheme, const OutcomeScript& script,
                               std::size_t max_visits) {
  TreatmentPlanner planner(scheme);
  MedicalResult result;
  for (const auto& d : planner.scheme().design_points) {
    result.points.emplace_back(d.id, planner.design_at_point(d.id));
  }
  Selector selector;
  if (!script.selections.empty()) selector = pinned_selector(script.selections);
  result.walk = planner.plan_walk(script, selector, max_visits);
  return result;
}

MedicalResult medical_pipeline(const OutcomeScript& script) {
  return medical_pipeline(bundled_medical_scheme(), script);
}

}  // namespace trajkit
