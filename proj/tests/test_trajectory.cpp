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

#include "oracles.hpp"
#include "trajkit/errors.hpp"
#include "trajkit/io.hpp"
#include "trajkit/presets.hpp"
#include "trajkit/routing.hpp"
#include "trajkit/trajectory.hpp"

using namespace trajkit;

namespace {

using Ids = std::vector<std::string>;
Rational R(std::int64_t p) { return Rational(p); }

DesignSpace load_space(std::string_view name) { return parse_as<DesignSpace>(bundled_text(name), name); }

std::vector<std::string> choices_along(const ResolvedRoute& r) {
  std::vector<std::string> out;
  for (const auto& v : r.base.vertices) out.push_back(r.choice.at(v));
  return out;
}

DesignSpace plain_graph(std::vector<std::string> ids, std::vector<std::tuple<std::string, std::string, std::int64_t>> arcs) {
  DesignSpace s;
  for (auto& id : ids) s.vertices.push_back({id, PlainKind{}, {}, R(0), {}});
  for (auto& [t, h, w] : arcs) s.arcs.push_back({t, h, {R(w)}});
  s.origins = {s.vertices.front().id};
  s.goals = {s.vertices.back().id};
  return s;
}

Vertex with_alternatives(std::string id, int count, int priority = 1) {
  AlternativesKind k;
  for (int i = 1; i <= count; ++i) k.alternatives.push_back({"A_" + id + "_" + std::to_string(i), priority});
  return {std::move(id), k, {}, R(0), {}};
}

}  // namespace

TEST_SUITE("strategy1_global_route") {
  TEST_CASE("first composite example resolves the printed route") {
    const auto space = load_space("example1_space");
    const Pins pins = {{"m1", "A_m1_3"}, {"m2", "A_m2_3"}, {"m5", "A_m5_2"}, {"m6", "A_m6_1"}, {"m8", "A_m8_2"}};
    const auto pinned = strategy1_global_route(space, "m1", "m8", pins);
    CHECK(pinned.base.vertices == Ids{"m1", "m2", "m5", "m6", "m8"});
    CHECK(choices_along(pinned) == Ids{"A_m1_3", "A_m2_3", "A_m5_2", "A_m6_1", "A_m8_2"});
    // The printed selections are also the priority-optimal ones.
    CHECK(strategy1_global_route(space, "m1", "m8") == pinned);
  }

  TEST_CASE("hierarchical example resolves the printed route under pins") {
    const auto space = load_space("example2_space");
    const Pins pins = {{"m1", "A_m1_1"}, {"m2", "A_m2_3"}, {"m4", "A_m4_2"}, {"m5", "A_m5_2"}};
    const auto r = strategy1_global_route(space, "m1", "m5", pins);
    CHECK(r.base.vertices == Ids{"m1", "m2", "m4", "m5"});
    CHECK(choices_along(r) == Ids{"A_m1_1", "A_m2_3", "A_m4_2", "A_m5_2"});
  }

  TEST_CASE("all-plain space equals shortest_path") {
    const auto s = plain_graph({"a", "b", "c"}, {{"a", "b", 1}, {"b", "c", 1}, {"a", "c", 3}});
    const auto r = strategy1_global_route(s, "a", "c");
    CHECK(r.choice.empty());
    CHECK(r.base == *shortest_path(s, "a", "c"));
  }

  TEST_CASE("incompatible pins and unknown alternatives") {
    DesignSpace s;
    s.vertices = {with_alternatives("x", 2), with_alternatives("y", 2)};
    s.arcs = {{"x", "y", {R(1)}}};
    s.origins = {"x"};
    s.goals = {"y"};
    CompatibilityTable t;
    t.insert("A_x_1", "A_y_1", 0);
    t.insert("A_x_1", "A_y_2", 0);
    t.insert("A_x_2", "A_y_1", 2);
    t.insert("A_x_2", "A_y_2", 2);
    s.alternative_compatibility = t;
    CHECK(strategy1_global_route(s, "x", "y").choice.at("x") == "A_x_2");
    CHECK_THROWS_AS(strategy1_global_route(s, "x", "y", {{"x", "A_x_1"}}), IncompatibleResolution);
    CHECK_THROWS_AS(strategy1_global_route(s, "x", "y", {{"x", "nope"}}), InvalidInput);
    s.arcs.clear();
    CHECK_THROWS_AS(strategy1_global_route(s, "x", "y"), NoFeasibleRoute);
  }
}

TEST_SUITE("extend_digraph") {
  TEST_CASE("five vertices with three alternatives each, fully wired") {
    const auto base = load_space("example3_space");
    const auto ext = extend_digraph(base);
    CHECK(ext.vertices.size() == 15);
    CHECK(ext.arcs.size() == base.arcs.size() * 9);
    CHECK(ext.find_arc("m1^1", "m2^3") != nullptr);
    CHECK(ext.origins == Ids{"m1^1", "m1^2", "m1^3"});
  }

  TEST_CASE("single plain vertex is unchanged") {
    DesignSpace s;
    s.vertices = {{"solo", PlainKind{}, {}, R(0), {}}};
    s.origins = s.goals = {"solo"};
    const auto ext = extend_digraph(s);
    CHECK(ext.vertices == s.vertices);
    CHECK(ext.arcs.empty());
  }

  TEST_CASE("a fully forbidden base arc contributes nothing") {
    DesignSpace s;
    s.vertices = {with_alternatives("x", 2), with_alternatives("y", 2), with_alternatives("z", 1)};
    s.arcs = {{"x", "y", {R(1)}}, {"y", "z", {R(1)}}};
    s.origins = {"x"};
    s.goals = {"z"};
    CompatibilityTable t;
    for (const char* a : {"A_x_1", "A_x_2"}) {
      for (const char* b : {"A_y_1", "A_y_2"}) t.insert(a, b, 0);
    }
    t.insert("A_y_1", "A_z_1", 1);
    t.insert("A_y_2", "A_z_1", 1);
    s.alternative_compatibility = t;
    const auto ext = extend_digraph(s);
    CHECK(ext.arcs.size() == 2);
    for (const auto& a : ext.arcs) CHECK(split_extended_id(a.tail).first == "y");
  }

  TEST_CASE("hierarchy vertices are rejected") {
    CHECK_THROWS_AS(extend_digraph(load_space("example2_space")), InvalidInput);
  }

  TEST_CASE("surcharge is added to every extended arc") {
    const auto base = load_space("example3_space");
    const auto ext = extend_digraph(base, [](const Arc&, const DesignAlternative*, const DesignAlternative* head) {
      return head ? Rational(head->priority) : Rational(0);
    });
    const auto* a = ext.find_arc("m1^1", "m2^1");
    REQUIRE(a != nullptr);
    CHECK(a->weight[0] == base.find_arc("m1", "m2")->weight[0] + R(2));
  }

  TEST_CASE("vertex and arc counting identity on random spaces") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> alts(0, 3);
    std::bernoulli_distribution zero(0.3);
    for (int trial = 0; trial < 100; ++trial) {
      auto s = oracle::random_space(rng, 7, 0.4, 1, 5);
      std::map<std::string, std::vector<std::string>> ids;
      for (auto& v : s.vertices) {
        const int m = alts(rng);
        if (m == 0) continue;
        auto profit = v.profit;
        v = with_alternatives(v.id, m);
        v.profit = profit;
        for (const auto& a : std::get<AlternativesKind>(v.kind).alternatives) ids[v.id].push_back(a.id);
      }
      CompatibilityTable t;
      std::size_t expected_arcs = 0;
      for (const auto& a : s.arcs) {
        const auto tails = ids.count(a.tail) ? ids[a.tail] : Ids{""};
        const auto heads = ids.count(a.head) ? ids[a.head] : Ids{""};
        for (const auto& x : tails) {
          for (const auto& y : heads) {
            // Pairs are symmetric, so arcs in both directions share a value.
            if (!x.empty() && !y.empty() && !t.find(x, y)) t.insert(x, y, zero(rng) ? 0 : 1);
            if (x.empty() || y.empty() || t.get(x, y, 0) != 0) ++expected_arcs;
          }
        }
      }
      s.alternative_compatibility = t;
      std::size_t expected_vertices = 0;
      for (const auto& v : s.vertices) expected_vertices += ids.count(v.id) ? ids[v.id].size() : 1;
      const auto ext = extend_digraph(s);
      CHECK(ext.vertices.size() == expected_vertices);
      CHECK(ext.arcs.size() == expected_arcs);
    }
  }
}

TEST_SUITE("strategy2_solve") {
  TEST_CASE("extended-digraph example with pinned origin and goal") {
    const auto space = load_space("example3_space");
    const Surcharge surcharge = [](const Arc&, const DesignAlternative*, const DesignAlternative* head) {
      return head ? Rational(head->priority - 1) : Rational(0);
    };
    const Ids origins = {"m1^1"};
    const Ids goals = {"m5^2"};
    const auto r = strategy2_solve(space, origins, goals, surcharge);
    CHECK(r.base.vertices == Ids{"m1", "m2", "m3", "m5"});
    std::vector<std::string> ext;
    for (const auto& v : r.base.vertices) {
      const auto* alts = &std::get<AlternativesKind>(space.find_vertex(v)->kind).alternatives;
      std::size_t j = 0;
      while ((*alts)[j].id != r.choice.at(v)) ++j;
      ext.push_back(extended_id(v, j + 1));
    }
    CHECK(ext == Ids{"m1^1", "m2^3", "m3^1", "m5^2"});
  }

  TEST_CASE("all-plain space equals shortest_path") {
    const auto s = plain_graph({"a", "b", "c", "d"}, {{"a", "b", 2}, {"b", "d", 2}, {"a", "c", 1}, {"c", "d", 2}});
    const Ids o = {"a"};
    const Ids g = {"d"};
    const auto r = strategy2_solve(s, o, g);
    CHECK(r.choice.empty());
    CHECK(r.base == *shortest_path(s, "a", "d"));
  }

  TEST_CASE("unreachable goal") {
    const auto s = plain_graph({"a", "b"}, {});
    const Ids o = {"a"};
    const Ids g = {"b"};
    CHECK_THROWS_AS(strategy2_solve(s, o, g), NoFeasibleRoute);
  }

  TEST_CASE("agrees with strategy1 on fully compatible equal-quality spaces") {
    std::mt19937 rng(271828);
    std::uniform_int_distribution<int> alts(1, 3);
    int compared = 0;
    for (int trial = 0; trial < 50; ++trial) {
      auto s = oracle::random_space(rng, 8, 0.4, 1, 9);
      for (auto& v : s.vertices) v = with_alternatives(v.id, alts(rng));
      const Ids o = {"v0"};
      const Ids g = {"v7"};
      const auto sp = shortest_path(s, "v0", "v7");
      if (!sp) {
        CHECK_THROWS_AS(strategy1_global_route(s, "v0", "v7"), NoFeasibleRoute);
        CHECK_THROWS_AS(strategy2_solve(s, o, g), NoFeasibleRoute);
        continue;
      }
      const auto r1 = strategy1_global_route(s, "v0", "v7");
      const auto r2 = strategy2_solve(s, o, g);
      CHECK(r1.base.vertices == r2.base.vertices);
      ++compared;
    }
    CHECK(compared > 10);
  }
}

TEST_SUITE("multistage_synthesize") {
  Stage leaf_stage(std::string id, std::vector<DesignAlternative> alts) {
    Stage s;
    s.id = std::move(id);
    s.structure.root.id = s.id;
    s.structure.root.alternatives = std::move(alts);
    return s;
  }

  TEST_CASE("single stage keeps its composites") {
    Scenario sc;
    sc.stages = {leaf_stage("t1", {{"a", 1}, {"b", 1}, {"c", 1}})};
    const auto r = multistage_synthesize(sc);
    REQUIRE(r.trajectories.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(r.trajectories[i].composites == Ids{sc.stages[0].structure.root.alternatives[i].id});
  }

  TEST_CASE("all-zero inter-stage table names the blocked pair") {
    Scenario sc;
    sc.stages = {leaf_stage("t1", {{"a", 1}, {"b", 1}}), leaf_stage("t2", {{"c", 1}})};
    sc.compatibility.insert("a", "c", 0);
    sc.compatibility.insert("b", "c", 0);
    const auto r = multistage_synthesize(sc);
    CHECK(r.trajectories.empty());
    REQUIRE(r.diagnostics.size() == 1);
    CHECK(r.diagnostics[0].find("t1") != std::string::npos);
    CHECK(r.diagnostics[0].find("t2") != std::string::npos);
  }

  TEST_CASE("non-adjacent entries constrain and stage priorities rank") {
    Scenario sc;
    sc.stages = {leaf_stage("t1", {{"a", 1}}), leaf_stage("t2", {{"b", 1}, {"c", 1}}), leaf_stage("t3", {{"d", 1}, {"e", 1}})};
    sc.stages[2].priorities = {{"e", 2}};
    for (auto [x, y] : {std::pair{"a", "b"}, {"a", "c"}, {"b", "d"}, {"b", "e"}, {"c", "d"}, {"c", "e"}}) {
      sc.compatibility.insert(x, y, 3);
    }
    sc.compatibility.insert("a", "d", 0);
    const auto r = multistage_synthesize(sc);
    // a-d is forbidden across the middle stage; the e trajectories remain.
    REQUIRE(r.trajectories.size() == 2);
    for (const auto& t : r.trajectories) CHECK(t.composites.back() == "e");
    CHECK(r.trajectories[0].quality == SystemQuality{3, {2, 1, 0}});
  }
}

TEST_SUITE("coordinate_multidomain") {
  // Four domain routes sharing two synchronization vertices.
  std::map<std::string, Route> domain_routes() {
    std::map<std::string, Route> routes;
    routes["D1"].vertices = {"s1", "h1", "x1", "h2", "t1"};
    routes["D2"].vertices = {"s2", "h1", "h2", "t2"};
    routes["D3"].vertices = {"s3", "y3", "h1", "h2"};
    routes["D4"].vertices = {"h1", "z4", "h2", "t4"};
    return routes;
  }

  std::vector<Checkpoint> checkpoints() {
    return {{"c1", {{"D1", "h1"}, {"D2", "h1"}, {"D3", "h1"}, {"D4", "h1"}}},
            {"c2", {{"D1", "h2"}, {"D2", "h2"}, {"D3", "h2"}, {"D4", "h2"}}}};
  }

  TEST_CASE("no checkpoints is feasible") { CHECK(coordinate_multidomain(domain_routes(), {}).feasible()); }

  TEST_CASE("all routes meet both checkpoints in order") {
    const auto cps = checkpoints();
    const auto report = coordinate_multidomain(domain_routes(), cps);
    CHECK(report.feasible());
    CHECK(report.satisfied.size() == 8);
  }

  TEST_CASE("a route missing its second checkpoint vertex") {
    auto routes = domain_routes();
    routes["D3"].vertices = {"s3", "y3", "h1", "t3"};
    const auto cps = checkpoints();
    const auto report = coordinate_multidomain(routes, cps);
    REQUIRE(report.violated.size() == 1);
    CHECK(report.violated[0].domain == "D3");
    CHECK(report.violated[0].checkpoint == "c2");
  }

  TEST_CASE("checkpoints out of order are violated") {
    auto routes = domain_routes();
    routes["D2"].vertices = {"s2", "h2", "h1", "t2"};
    const auto cps = checkpoints();
    const auto report = coordinate_multidomain(routes, cps);
    REQUIRE(report.violated.size() == 1);
    CHECK(report.violated[0].domain == "D2");
  }
}

TEST_SUITE("compose_layered_routes") {
  LayerDomain domain(DesignSpace space, Ids gateways, Ids destinations) {
    return {std::move(space), std::move(gateways), std::move(destinations)};
  }

  TEST_CASE("up-layer destination is a plain shortest path") {
    LayeredPlan plan;
    plan.up = plain_graph({"s", "u", "w"}, {{"s", "u", 1}, {"u", "w", 1}, {"s", "w", 5}});
    plan.up_destinations = {"w"};
    const auto r = compose_layered_routes(plan, "s");
    REQUIRE(r.at("w"));
    CHECK(r.at("w")->vertices == Ids{"s", "u", "w"});
    CHECK_FALSE(r.at("w")->down.has_value());
    CHECK(r.at("w")->total == R(2));
  }

  TEST_CASE("cheaper combined gateway wins") {
    LayeredPlan plan;
    plan.up = plain_graph({"s", "x", "y"}, {{"s", "x", 3}, {"s", "y", 1}});
    plan.domains["D"] = domain(plain_graph({"x", "y", "d"}, {{"x", "d", 4}, {"y", "d", 8}}), {"x", "y"}, {"d"});
    const auto r = compose_layered_routes(plan, "s");
    REQUIRE(r.at("d"));
    CHECK(r.at("d")->gateway == "x");
    CHECK(r.at("d")->total == R(7));
    CHECK(r.at("d")->vertices == Ids{"s", "x", "d"});
  }

  TEST_CASE("three-domain topology routes through exactly one gateway each") {
    LayeredPlan plan;
    plan.up = plain_graph({"s", "u1", "g1", "g2", "g3"}, {{"s", "u1", 1}, {"u1", "g1", 1}, {"s", "g2", 1}, {"u1", "g3", 1}});
    plan.domains["D1"] = domain(plain_graph({"g1", "a1", "a2"}, {{"g1", "a1", 1}, {"a1", "a2", 1}}), {"g1"}, {"a1", "a2"});
    plan.domains["D2"] = domain(plain_graph({"g2", "b1", "b2"}, {{"g2", "b1", 1}, {"g2", "b2", 1}}), {"g2"}, {"b1", "b2"});
    plan.domains["D3"] = domain(plain_graph({"g3", "c1"}, {{"g3", "c1", 1}}), {"g3"}, {"c1"});
    const auto r = compose_layered_routes(plan, "s");
    const Ids gateways = {"g1", "g2", "g3"};
    REQUIRE(r.size() == 5);
    for (const auto& [dest, route] : r) {
      REQUIRE(route.has_value());
      int hits = 0;
      for (const auto& v : route->vertices) hits += std::count(gateways.begin(), gateways.end(), v);
      CHECK(hits == 1);
    }
    CHECK(r.at("a2")->vertices == Ids{"s", "u1", "g1", "a1", "a2"});
  }

  TEST_CASE("unreachable and duplicate destinations") {
    LayeredPlan plan;
    plan.up = plain_graph({"s", "g"}, {});
    plan.domains["D"] = domain(plain_graph({"g", "d"}, {{"g", "d", 1}}), {"g"}, {"d"});
    CHECK_FALSE(compose_layered_routes(plan, "s").at("d").has_value());
    plan.up_destinations = {"d"};
    CHECK_THROWS_AS(compose_layered_routes(plan, "s"), InvalidInput);
  }
}
