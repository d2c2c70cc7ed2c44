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

#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "trajkit/errors.hpp"
#include "trajkit/presets.hpp"

using namespace trajkit;

namespace {

using Ids = std::vector<std::string>;

Rational R(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

VectorEstimate V(std::initializer_list<std::int64_t> xs) {
  VectorEstimate v;
  for (auto x : xs) v.push_back(R(x));
  return v;
}

const TemplateOutcome& outcome(const EduResult& r, std::string_view id) {
  for (const auto& t : r.templates) {
    if (t.id == id) return t;
  }
  FAIL("missing template " << id);
  throw;
}

std::set<Ids> tie_paths(const TemplateOutcome& t) {
  std::set<Ids> out;
  for (const auto& r : t.ties) out.insert(r.vertices);
  return out;
}

}  // namespace

TEST_SUITE("bundled data") {
  TEST_CASE("every bundled name resolves and unknown names throw") {
    const auto names = bundled_names();
    CHECK(names.size() == 9);
    for (const auto& n : names) CHECK_FALSE(bundled_text(n).empty());
    CHECK_THROWS_AS(bundled_text("nope"), InvalidInput);
  }

  TEST_CASE("template space keeps only the listed classes") {
    const auto space = bundled_edu_space();
    const auto ref = bundled_edu_reference();
    const auto sub = template_space(space, ref.templates.at(0));
    for (const auto& v : sub.vertices) {
      const bool known = std::any_of(v.labels.begin(), v.labels.end(), [](const std::string& l) {
        return l == "a" || l == "b" || l == "h" || l == "p";
      });
      CHECK(known);
    }
    CHECK(validate_space(sub).empty());
  }
}

TEST_SUITE("educational pipeline") {
  const auto space = bundled_edu_space();
  const auto reference = bundled_edu_reference();
  const auto result = edu_pipeline(space, reference);

  TEST_CASE("stage one agrees with exhaustive enumeration per template") {
    REQUIRE(result.templates.size() == reference.templates.size());
    for (const auto& tpl : reference.templates) {
      INFO(tpl.id);
      const auto sub = template_space(space, tpl);
      const auto paths = oracle::all_simple_paths(sub, reference.start, reference.end);
      const auto& got = outcome(result, tpl.id);
      CHECK(got.route_count == paths.size());
      REQUIRE_FALSE(paths.empty());
      Rational best = oracle::path_cost(sub, paths.front())[0];
      for (const auto& p : paths) best = std::min(best, oracle::path_cost(sub, p)[0]);
      std::set<Ids> expected;
      for (const auto& p : paths) {
        if (oracle::path_cost(sub, p)[0] == best) expected.insert(p);
      }
      REQUIRE(got.min_d.has_value());
      CHECK(*got.min_d == best);
      CHECK(tie_paths(got) == expected);
      CHECK(got.theta_rank.size() == got.ties.size());
    }
  }

  TEST_CASE("frozen template outcomes") {
    // Values produced by the enumeration oracle above.
    CHECK(outcome(result, "L1").route_count == 39);
    CHECK(*outcome(result, "L1").min_d == R(6));
    CHECK(tie_paths(outcome(result, "L1")) == std::set<Ids>{{"a1", "b1", "h3", "p1"}});
    CHECK(outcome(result, "L2").route_count == 120);
    CHECK(tie_paths(outcome(result, "L2")) == std::set<Ids>{{"a1", "b1", "g1", "h3", "p1"}});
    CHECK(tie_paths(outcome(result, "L3")) ==
          std::set<Ids>{{"a1", "b1", "h1", "f1", "p1"}, {"a1", "b2", "h2", "f1", "p1"}});
    CHECK(tie_paths(outcome(result, "L4")) ==
          std::set<Ids>{{"a1", "b1", "g1", "h7", "f2", "p1"}, {"a1", "b1", "g3", "h7", "f2", "p1"}});
  }

  TEST_CASE("theta ranking inside a tie class") {
    const auto& l3 = outcome(result, "L3");
    for (std::size_t i = 0; i < l3.ties.size(); ++i) {
      const bool top = l3.ties[i].vertices == Ids{"a1", "b2", "h2", "f1", "p1"};
      CHECK(l3.theta_rank[i] == (top ? 1 : 2));
    }
  }

  TEST_CASE("pooled final set under default caps") {
    REQUIRE(result.final_set.size() == 1);
    CHECK(result.final_set[0].vertices == Ids{"a1", "b1", "g1", "h7", "f2", "p1"});
    CHECK(result.final_set[0].profit == V({19, 21, 23}));
    CHECK(result.final_set[0].duration == R(11));
    CHECK(result.final_set[0].cost == V({5}));
    CHECK(result.arc_cap == R(5));
    CHECK(result.time_cap == R(12));
  }

  TEST_CASE("tighter time cap drops the longest template") {
    const auto tight = edu_pipeline(space, reference, std::nullopt, R(10));
    REQUIRE(tight.final_set.size() == 1);
    CHECK(tight.final_set[0].vertices == Ids{"a1", "b2", "h2", "f1", "p1"});
    CHECK(edu_pipeline(space, reference, R(1)).final_set.empty());
    CHECK(edu_pipeline(space, reference, std::nullopt, R(7)).final_set.empty());
  }

  TEST_CASE("printed rows 1 and 2 match their recomputed aggregates") {
    for (std::size_t row : {0u, 1u}) {
      const auto& p = reference.printed[row];
      const auto agg = route_aggregates(p.vertices, space);
      CHECK(agg.profit == p.theta);
      CHECK(agg.duration == p.tau);
      CHECK(agg.cost == VectorEstimate{p.d});
    }
  }
}

TEST_SUITE("audit") {
  TEST_CASE("four discrepancies against the printed table") {
    const std::vector<DiscrepancyRecord> expected = {
        {"row3", "theta1", R(15), R(17)},
        {"row4", "d", R(6), R(7)},
        {"row5", "d", R(6), R(8)},
        {"row6", "theta2", R(22), R(24)},
    };
    CHECK(edu_audit_table6() == expected);
    CHECK(audit_printed_routes(bundled_edu_space(), bundled_edu_reference()) == expected);
  }

  TEST_CASE("a consistent reference audits clean") {
    const auto space = bundled_edu_space();
    auto ref = bundled_edu_reference();
    for (auto& p : ref.printed) {
      const auto agg = route_aggregates(p.vertices, space);
      p.theta = agg.profit;
      p.tau = agg.duration;
      p.d = agg.cost[0];
    }
    CHECK(audit_printed_routes(space, ref).empty());
  }
}

TEST_SUITE("start-up pipeline") {
  const auto result = startup_pipeline();

  TEST_CASE("three stages, no diagnostics") {
    REQUIRE(result.stages.size() == 3);
    CHECK(result.diagnostics.empty());
    REQUIRE(result.stages[0].composites.size() == 1);
    CHECK(result.stages[0].composites[0].id == "S1_1");
  }

  TEST_CASE("first stage reproduces the reference composite") {
    const auto ref = bundled_startup_reference();
    const auto& leaves = result.stages[0].composites[0].leaves;
    std::set<std::string> got;
    for (const auto& [part, leaf] : leaves) got.insert(leaf);
    const auto& printed = ref.stage_sets[0][0];
    CHECK(got == std::set<std::string>(printed.begin(), printed.end()));
  }

  TEST_CASE("frozen trajectory set") {
    // Enumeration result under the bundled tables: one trajectory survives.
    REQUIRE(result.trajectories.size() == 1);
    CHECK(result.trajectories[0].composites == Ids{"S1_1", "S2_1", "S3_1"});
    CHECK(result.trajectories[0].quality == SystemQuality{3, {1, 2, 0}});
  }

  TEST_CASE("every stage set is a quality antichain") {
    for (const auto& stage : result.stages) {
      for (const auto& a : stage.composites) {
        for (const auto& b : stage.composites) CHECK_FALSE(quality_dominates(a.quality, b.quality));
      }
    }
  }
}

TEST_SUITE("medical pipeline") {
  TEST_CASE("all design points synthesized and the script walked") {
    const auto result = medical_pipeline(bundled_medical_script());
    Ids points;
    for (const auto& [id, list] : result.points) {
      points.push_back(id);
      CHECK_FALSE(list.empty());
    }
    CHECK(points == Ids{"mu0", "mu1", "mu2", "mu3", "mu4"});
    CHECK(result.walk.status == WalkStatus::completed);
    CHECK(result.walk.trajectory() == Ids{"S_mu0_3", "S_mu0_1", "S_mu4_2", "S_mu2_1"});
  }

  TEST_CASE("an immediately excellent result stops after the first point") {
    const auto result = medical_pipeline({{"excellent"}, {}});
    CHECK(result.walk.status == WalkStatus::completed);
    CHECK(result.walk.trajectory().size() == 1);
  }

  TEST_CASE("repeated runs are identical") {
    CHECK(medical_pipeline(bundled_medical_script()) == medical_pipeline(bundled_medical_script()));
    CHECK(startup_pipeline() == startup_pipeline());
  }
}
