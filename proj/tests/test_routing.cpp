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

#include <random>
#include <set>

#include "oracles.hpp"
#include "trajkit/errors.hpp"
#include "trajkit/presets.hpp"
#include "trajkit/routing.hpp"

using namespace trajkit;

namespace {

Rational R(std::int64_t p) { return Rational(p); }

Vertex plain(std::string id, std::int64_t profit = 0) {
  Vertex v;
  v.id = std::move(id);
  v.profit = {R(profit)};
  return v;
}

DesignSpace graph(std::vector<std::string> ids, std::vector<std::tuple<std::string, std::string, std::int64_t>> arcs) {
  DesignSpace s;
  s.criteria = {{"theta", Sense::maximize}};
  for (auto& id : ids) s.vertices.push_back(plain(id));
  for (auto& [t, h, w] : arcs) s.arcs.push_back({t, h, {R(w)}});
  s.origins = {s.vertices.front().id};
  s.goals = {s.vertices.back().id};
  return s;
}

using Ids = std::vector<std::string>;

OrienteeringInstance instance(DesignSpace space, std::string start, std::string end,
                              std::optional<Rational> budget = std::nullopt) {
  OrienteeringInstance inst;
  inst.space = std::move(space);
  inst.start = std::move(start);
  inst.end = std::move(end);
  inst.budget = budget;
  return inst;
}

// Weighted five-vertex digraph shaped like the worked composite examples.
DesignSpace five_vertex() {
  return graph({"m1", "m2", "m3", "m4", "m5"},
               {{"m1", "m2", 1}, {"m2", "m4", 1}, {"m4", "m5", 1}, {"m2", "m3", 2}, {"m3", "m5", 2}, {"m4", "m3", 1}});
}

DesignSpace diamond() { return graph({"a", "b", "c", "d"}, {{"a", "b", 1}, {"b", "d", 1}, {"a", "c", 1}, {"c", "d", 2}}); }

}  // namespace

TEST_SUITE("shortest_path") {
  TEST_CASE("single arc") {
    const auto s = graph({"a", "b"}, {{"a", "b", 4}});
    const auto r = shortest_path(s, "a", "b");
    REQUIRE(r);
    CHECK(r->vertices == Ids{"a", "b"});
    CHECK(r->cost == VectorEstimate{R(4)});
  }

  TEST_CASE("five-vertex example picks m1 m2 m4 m5") {
    const auto r = shortest_path(five_vertex(), "m1", "m5");
    REQUIRE(r);
    CHECK(r->vertices == Ids{"m1", "m2", "m4", "m5"});
    CHECK(r->cost[0] == R(3));
  }

  TEST_CASE("disconnected goal") {
    const auto s = graph({"a", "b", "c"}, {{"a", "b", 1}});
    CHECK_FALSE(shortest_path(s, "a", "c").has_value());
  }

  TEST_CASE("origin equals goal") {
    const auto r = shortest_path(diamond(), "a", "a");
    REQUIRE(r);
    CHECK(r->vertices == Ids{"a"});
    CHECK(r->cost[0] == R(0));
  }

  TEST_CASE("ties go to fewer arcs, then smaller id sequence") {
    const auto s = graph({"a", "b", "c", "x", "t"},
                         {{"a", "t", 2}, {"a", "b", 1}, {"b", "t", 1}, {"a", "x", 1}, {"x", "t", 1}, {"a", "c", 1}, {"c", "t", 1}});
    CHECK(shortest_path(s, "a", "t")->vertices == Ids{"a", "t"});
    auto no_direct = s;
    no_direct.arcs.erase(no_direct.arcs.begin());
    CHECK(shortest_path(no_direct, "a", "t")->vertices == Ids{"a", "b", "t"});
  }

  TEST_CASE("errors") {
    auto s = diamond();
    CHECK_THROWS_AS(shortest_path(s, "a", "zz"), InvalidInput);
    s.arcs[0].weight = {R(1), R(2)};
    for (auto& a : s.arcs) a.weight = {R(1), R(2)};
    CHECK_THROWS_AS(shortest_path(s, "a", "d"), InvalidInput);
    auto neg = diamond();
    neg.arcs[0].weight = {R(-1)};
    CHECK_THROWS_AS(shortest_path(neg, "a", "d"), InvalidInput);
  }

  TEST_CASE("matches enumeration on random graphs") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
      const auto s = oracle::random_space(rng, 8, 0.35, 1, 9);
      const auto best = oracle::k_shortest(s, "v0", "v7", 1);
      const auto r = shortest_path(s, "v0", "v7");
      REQUIRE(r.has_value() == !best.empty());
      if (r) CHECK(r->vertices == best.front());
    }
  }
}

TEST_SUITE("k_shortest_paths") {
  TEST_CASE("k=1 reduces to shortest_path") {
    const auto s = five_vertex();
    const auto k1 = k_shortest_paths(s, "m1", "m5", 1);
    REQUIRE(k1.size() == 1);
    CHECK(k1.front() == *shortest_path(s, "m1", "m5"));
  }

  TEST_CASE("diamond with k=2") {
    const auto r = k_shortest_paths(diamond(), "a", "d", 2);
    REQUIRE(r.size() == 2);
    CHECK(r[0].vertices == Ids{"a", "b", "d"});
    CHECK(r[0].cost[0] == R(2));
    CHECK(r[1].vertices == Ids{"a", "c", "d"});
    CHECK(r[1].cost[0] == R(3));
  }

  TEST_CASE("k beyond the number of simple paths saturates") {
    const auto s = five_vertex();
    const auto r = k_shortest_paths(s, "m1", "m5", 50);
    CHECK(r.size() == oracle::all_simple_paths(s, "m1", "m5").size());
    CHECK(r.size() == 3);
  }

  TEST_CASE("equals sorted enumeration on random graphs") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> kdist(1, 12);
    for (int trial = 0; trial < 100; ++trial) {
      const auto s = oracle::random_space(rng, 8, 0.4, 1, 5);
      const std::size_t k = kdist(rng);
      const auto expected = oracle::k_shortest(s, "v0", "v7", k);
      const auto got = k_shortest_paths(s, "v0", "v7", k);
      REQUIRE(got.size() == expected.size());
      for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].vertices == expected[i]);
    }
  }
}

TEST_SUITE("multi_goal_shortest") {
  // Branching space: one origin fanning out to three goals.
  const auto fan = graph({"s", "a", "b", "g1", "g2", "g3", "iso"},
                         {{"s", "a", 1}, {"s", "b", 3}, {"a", "b", 1}, {"a", "g1", 4}, {"b", "g1", 1},
                          {"b", "g2", 2}, {"a", "g3", 6}, {"b", "g3", 5}});

  TEST_CASE("goal equal to origin") {
    const Ids goals = {"s"};
    const auto r = multi_goal_shortest(fan, "s", goals);
    REQUIRE(r.at("s"));
    CHECK(r.at("s")->vertices == Ids{"s"});
  }

  TEST_CASE("three goals, each individually optimal") {
    const Ids goals = {"g1", "g2", "g3"};
    const auto r = multi_goal_shortest(fan, "s", goals);
    REQUIRE(r.size() == 3);
    for (const auto& g : goals) {
      REQUIRE(r.at(g));
      CHECK(*r.at(g) == *shortest_path(fan, "s", g));
    }
    CHECK(r.at("g1")->vertices == Ids{"s", "a", "b", "g1"});
  }

  TEST_CASE("unreachable goal is reported alone") {
    const Ids goals = {"g2", "iso"};
    const auto r = multi_goal_shortest(fan, "s", goals);
    CHECK(r.at("g2").has_value());
    CHECK_FALSE(r.at("iso").has_value());
  }
}

TEST_SUITE("multicriteria_shortest") {
  TEST_CASE("single criterion reduces to shortest_path") {
    const auto s = five_vertex();
    const auto r = multicriteria_shortest(s, "m1", "m5");
    REQUIRE(r.size() == 1);
    CHECK(r.front().vertices == shortest_path(s, "m1", "m5")->vertices);
  }

  TEST_CASE("two incomparable parallel routes") {
    DesignSpace s = graph({"a", "x", "y", "b"}, {});
    s.arcs = {{"a", "x", {R(1), R(3)}}, {"x", "b", {R(0), R(0)}}, {"a", "y", {R(3), R(1)}}, {"y", "b", {R(0), R(0)}}};
    const auto r = multicriteria_shortest(s, "a", "b");
    REQUIRE(r.size() == 2);
    CHECK(r[0].cost == VectorEstimate{R(1), R(3)});
    CHECK(r[1].cost == VectorEstimate{R(3), R(1)});
  }

  TEST_CASE("Pareto set equals enumeration on random DAGs") {
    std::mt19937 rng(8080);
    std::uniform_int_distribution<int> nd(4, 12);
    std::uniform_int_distribution<int> ad(2, 3);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = nd(rng);
      const auto s = oracle::random_space(rng, n, 0.45, 0, 9, true, ad(rng));
      const auto goal = oracle::vid(n - 1);
      const auto expected = oracle::pareto_costs(s, "v0", goal);
      std::set<VectorEstimate> got;
      for (const auto& r : multicriteria_shortest(s, "v0", goal)) {
        CHECK(oracle::path_cost(s, r.vertices) == r.cost);
        got.insert(r.cost);
      }
      CHECK(got == expected);
    }
  }
}

TEST_SUITE("replan_on_change") {
  const auto base = graph({"s", "a", "b", "t"}, {{"s", "a", 1}, {"a", "t", 1}, {"s", "b", 2}, {"b", "t", 2}, {"a", "b", 1}});

  ReplanState state(const DesignSpace& updated, Ids prefix) {
    ReplanState st;
    st.prefix = std::move(prefix);
    st.candidates = k_shortest_paths(base, "s", "t", 2);
    st.incumbent = 0;
    st.updated = updated;
    return st;
  }

  TEST_CASE("unchanged weights keep the incumbent") {
    const auto d = replan_on_change(state(base, {"s"}));
    CHECK_FALSE(d.switched);
    CHECK(d.candidate == 0);
    CHECK(d.continuation.vertices == Ids{"s", "a", "t"});
    CHECK(d.total == R(2));
  }

  TEST_CASE("raised next arc switches to the alternative") {
    auto updated = base;
    for (auto& a : updated.arcs) {
      if (a.tail == "s" && a.head == "a") a.weight = {R(9)};
    }
    const auto st = state(updated, {"s"});
    REQUIRE(st.candidates[1].vertices == Ids{"s", "b", "t"});
    const auto d = replan_on_change(st);
    CHECK(d.switched);
    CHECK(d.continuation.vertices == Ids{"s", "b", "t"});
    CHECK(d.total == R(4));
  }

  TEST_CASE("mid-route change reconnects through the cheapest join") {
    auto updated = base;
    for (auto& a : updated.arcs) {
      if (a.tail == "a" && a.head == "t") a.weight = {R(10)};
    }
    const auto d = replan_on_change(state(updated, {"s", "a"}));
    CHECK(d.switched);
    CHECK(d.candidate == 1);
    CHECK(d.connector.vertices == Ids{"a", "b"});
    CHECK(d.continuation.vertices == Ids{"a", "b", "t"});
    CHECK(d.total == R(3));
  }

  TEST_CASE("no outgoing arcs from the current vertex") {
    auto updated = base;
    std::erase_if(updated.arcs, [](const Arc& a) { return a.tail == "a"; });
    CHECK_THROWS_AS(replan_on_change(state(updated, {"s", "a"})), NoFeasibleRoute);
  }
}

TEST_SUITE("orienteering_exact") {
  DesignSpace four_vertex() {
    auto s = graph({"s", "a", "b", "t"}, {{"s", "a", 1}, {"a", "t", 1}, {"s", "b", 2}, {"b", "t", 2}, {"s", "t", 5}});
    s.vertices[1].profit = {R(1)};
    s.vertices[2].profit = {R(5)};
    s.vertices[3].profit = {R(1)};
    return s;
  }

  TEST_CASE("budget below the cheapest path is infeasible") {
    auto inst = instance(four_vertex(), "s", "t", R(1));
    CHECK_THROWS_AS(orienteering_exact(inst), Infeasible);
  }

  TEST_CASE("four-vertex instance picks s b t") {
    auto inst = instance(four_vertex(), "s", "t", R(4));
    const auto r = orienteering_exact(inst);
    CHECK(r.route.vertices == Ids{"s", "b", "t"});
    CHECK(r.score == R(6));
  }

  TEST_CASE("argument checks") {
    auto no_budget = instance(four_vertex(), "s", "t");
    CHECK_THROWS_AS(orienteering_exact(no_budget), InvalidInput);
    auto negative = instance(four_vertex(), "s", "t", R(-1));
    CHECK_THROWS_AS(orienteering_exact(negative), InvalidInput);
    auto both = instance(four_vertex(), "s", "t", R(4));
    both.arc_cap = R(3);
    CHECK_THROWS_AS(orienteering_exact(both), InvalidInput);
    std::mt19937 rng(1);
    auto big = instance(oracle::random_space(rng, 30, 0.1, 1, 9), "v0", "v29", R(10));
    CHECK_THROWS_AS(orienteering_exact(big), InvalidInput);
  }

  TEST_CASE("equals brute force on random instances") {
    std::mt19937 rng(1729);
    std::uniform_int_distribution<int> nd(3, 10);
    std::uniform_int_distribution<int> bd(0, 30);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const int n = nd(rng);
      OrienteeringInstance inst;
      inst.space = oracle::random_space(rng, n, 0.4, 1, 9);
      inst.start = "v0";
      inst.end = oracle::vid(n - 1);
      inst.budget = R(bd(rng));
      const auto expected = oracle::orienteering_score(inst.space, inst.start, inst.end, *inst.budget);
      if (!expected) {
        CHECK_THROWS_AS(orienteering_exact(inst), Infeasible);
        continue;
      }
      const auto r = orienteering_exact(inst);
      CHECK(r.score == *expected);
      CHECK(r.route.cost[0] <= *inst.budget);
      CHECK(r.route.vertices.front() == inst.start);
      CHECK(r.route.vertices.back() == inst.end);
      CHECK(std::set<std::string>(r.route.vertices.begin(), r.route.vertices.end()).size() == r.route.vertices.size());
      ++checked;
    }
    CHECK(checked > 30);
  }
}

TEST_SUITE("orienteering_multiobjective") {
  TEST_CASE("zero time cap with positive durations leaves nothing") {
    auto inst = instance(bundled_edu_space(), "a1", "p1");
    inst.time_cap = R(0);
    CHECK(orienteering_multiobjective(inst).empty());
  }

  TEST_CASE("template L2 under the default caps contains printed row 2") {
    const auto reference = bundled_edu_reference();
    auto inst = instance(template_space(bundled_edu_space(), reference.templates[1]), "a1", "p1");
    inst.arc_cap = R(5);
    inst.time_cap = R(12);
    bool found = false;
    for (const auto& r : orienteering_multiobjective(inst)) found = found || r.vertices == Ids{"a1", "b1", "g1", "h3", "p1"};
    CHECK(found);
  }

  TEST_CASE("full educational space equals enumeration") {
    const auto space = bundled_edu_space();
    auto inst = instance(space, "a1", "p1");
    inst.arc_cap = R(5);
    inst.time_cap = R(12);
    std::vector<Route> feasible;
    for (const auto& p : oracle::all_simple_paths(space, "a1", "p1")) {
      bool ok = true;
      for (std::size_t i = 1; i < p.size(); ++i) ok = ok && space.find_arc(p[i - 1], p[i])->weight[0] <= 5;
      auto r = make_route(p, space);
      if (ok && r.duration <= 12) feasible.push_back(std::move(r));
    }
    const auto expected = pareto_filter(feasible, route_criteria(space), route_objectives);
    std::set<Ids> want;
    for (const auto& r : expected) want.insert(r.vertices);
    std::set<Ids> got;
    for (const auto& r : orienteering_multiobjective(inst)) got.insert(r.vertices);
    CHECK_FALSE(want.empty());
    CHECK(got == want);
  }
}
