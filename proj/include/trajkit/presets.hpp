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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trajkit/model.hpp"
#include "trajkit/trajectory.hpp"
#include "trajkit/treatment.hpp"

namespace trajkit {

/// Ordered vertex classes a route must follow; a vertex's class is one of
/// its labels.
struct GeneralizedTemplate {
  std::string id;
  std::vector<std::string> classes;

  bool operator==(const GeneralizedTemplate&) const = default;
};

/// A published route together with its printed aggregates.
struct PrintedRoute {
  std::string id;
  std::string template_id;
  std::vector<std::string> vertices;
  VectorEstimate theta;
  Rational tau{0};
  Rational d{0};

  bool operator==(const PrintedRoute&) const = default;
};

struct EduReference {
  std::string start;
  std::string end;
  std::vector<GeneralizedTemplate> templates;
  std::vector<PrintedRoute> printed;
  Rational arc_cap{5};
  Rational time_cap{12};

  bool operator==(const EduReference&) const = default;
};

/// Printed start-up results as leaf-alternative sets.
struct StartupReference {
  std::vector<std::vector<std::vector<std::string>>> stage_sets;  // stage -> composite -> leaves
  std::vector<std::vector<std::string>> trajectory;               // stage -> leaves
  std::vector<std::string> trajectory_ids;

  bool operator==(const StartupReference&) const = default;
};

struct DiscrepancyRecord {
  std::string route_id;
  std::string field;
  Rational printed{0};
  Rational recomputed{0};

  bool operator==(const DiscrepancyRecord&) const = default;
};

/// Raw text of a bundled data file ("edu_space", "startup_scenario", ...).
/// Throws InvalidInput for unknown names.
std::string_view bundled_text(std::string_view name);
std::vector<std::string> bundled_names();

DesignSpace bundled_edu_space();
EduReference bundled_edu_reference();
Scenario bundled_startup_scenario();
StartupReference bundled_startup_reference();
TreatmentScheme bundled_medical_scheme();
OutcomeScript bundled_medical_script();

/// Space restricted to the template: vertices whose label is one of the
/// classes, arcs only between consecutive classes.
DesignSpace template_space(const DesignSpace& space, const GeneralizedTemplate& tpl);

struct TemplateOutcome {
  std::string id;
  std::size_t route_count = 0;    // start -> end routes through the template
  std::optional<Rational> min_d;  // nullopt when the template has no route
  std::vector<Route> ties;        // every route attaining min_d
  std::vector<int> theta_rank;    // per tie: 1 = not theta-dominated within the class

  bool operator==(const TemplateOutcome&) const = default;
};

struct EduResult {
  std::vector<TemplateOutcome> templates;
  std::vector<Route> final_set;  // Pareto over (theta..., d) among feasible ties
  Rational arc_cap{0};
  Rational time_cap{0};

  bool operator==(const EduResult&) const = default;
};

/// Stage 1: minimum-d routes per template (all ties, ranked by theta layers).
/// Stage 2: pooled ties meeting both caps, Pareto-filtered.
EduResult edu_pipeline(const DesignSpace& space, const EduReference& reference,
                       std::optional<Rational> arc_cap = std::nullopt,
                       std::optional<Rational> time_cap = std::nullopt);

/// Recomputes every printed route and lists the fields that disagree.
std::vector<DiscrepancyRecord> audit_printed_routes(const DesignSpace& space,
                                                    const EduReference& reference);
std::vector<DiscrepancyRecord> edu_audit_table6();

MultistageResult startup_pipeline();
MultistageResult startup_pipeline(const Scenario& scenario);

struct MedicalResult {
  std::vector<std::pair<std::string, std::vector<CompositeDA>>> points;  // in scheme order
  WalkResult walk;

  bool operator==(const MedicalResult&) const = default;
};

/// Synthesizes every design point, then walks the script (its selections
/// pin the design steps).
MedicalResult medical_pipeline(const TreatmentScheme& scheme, const OutcomeScript& script,
                               std::size_t max_visits = 3);
MedicalResult medical_pipeline(const OutcomeScript& script);

}  // namespace trajkit
