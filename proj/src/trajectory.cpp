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

#include "trajkit/trajectory.hpp"

#include <algorithm>
#include <set>

#include "trajkit/errors.hpp"
#include "trajkit/routing.hpp"

namespace trajkit {
namespace {

std::vector<DesignAlternative> vertex_options(const DesignSpace& space, const Vertex& v) {
  auto synthesized = [&](const std::string& name) {
    auto it = space.structures.find(name);
    if (it == space.structures.end()) {
      throw InvalidInput("vertex '" + v.id + "' refers to unknown structure '" + name + "'");
    }
    auto result = synthesize_hierarchical(it->second);
    if (result.composites.empty()) {
      throw EmptySynthesis(result.failed_node.value_or(name),
                           "synthesis for vertex '" + v.id + "' produced no composite");
    }
    std::vector<DesignAlternative> out;
    for (const auto& c : result.composites) out.push_back({c.id, 1});
    return out;
  };
  return std::visit(
      [&](const auto& kind) -> std::vector<DesignAlternative> {
        using K = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<K, PlainKind>) {
          return {};
        } else if constexpr (std::is_same_v<K, AlternativesKind>) {
          return kind.alternatives;
        } else if constexpr (std::is_same_v<K, HierarchyKind>) {
          return synthesized(kind.structure);
        } else {
          return synthesized(kind.structure);
        }
      },
      v.kind);
}

bool ids_less(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const std::string& x, const std::string& y) { return id_less(x, y); });
}

}  // namespace

ResolvedRoute strategy1_global_route(const DesignSpace& space, std::string_view origin,
                                     std::string_view goal, const Pins& pins) {
  auto route = shortest_path(space, origin, goal);
  if (!route) {
    throw NoFeasibleRoute("no route from '" + std::string(origin) + "' to '" + std::string(goal) + "'");
  }

  struct Slot {
    std::string vertex;
    std::vector<DesignAlternative> options;
  };
  std::vector<Slot> slots;
  for (const auto& id : route->vertices) {
    auto options = vertex_options(space, *space.find_vertex(id));
    if (options.empty()) continue;
    if (auto pin = pins.find(id); pin != pins.end()) {
      std::erase_if(options, [&](const DesignAlternative& a) { return a.id != pin->second; });
      if (options.empty()) {
        throw InvalidInput("pinned alternative '" + pin->second + "' is not offered at '" + id + "'");
      }
    }
    slots.push_back({id, std::move(options)});
  }

  struct State {
    int cost = 0;
    std::vector<std::string> picks;
  };
  const auto& table = space.alternative_compatibility;
  std::vector<std::optional<State>> prev;
  for (std::size_t s = 0; s < slots.size(); ++s) {
    std::vector<std::optional<State>> cur(slots[s].options.size());
    for (std::size_t o = 0; o < slots[s].options.size(); ++o) {
      const auto& alt = slots[s].options[o];
      if (s == 0) {
        cur[o] = State{alt.priority, {alt.id}};
        continue;
      }
      for (std::size_t p = 0; p < prev.size(); ++p) {
        if (!prev[p]) continue;
        if (table && table->get(slots[s - 1].options[p].id, alt.id, 0) == 0) continue;
        State cand{prev[p]->cost + alt.priority, prev[p]->picks};
        cand.picks.push_back(alt.id);
        if (!cur[o] || cand.cost < cur[o]->cost ||
            (cand.cost == cur[o]->cost && ids_less(cand.picks, cur[o]->picks))) {
          cur[o] = std::move(cand);
        }
      }
    }
    prev = std::move(cur);
  }

  ResolvedRoute out{*route, {}};
  if (slots.empty()) return out;
  const State* best = nullptr;
  for (const auto& s : prev) {
    if (!s) continue;
    if (!best || s->cost < best->cost || (s->cost == best->cost && ids_less(s->picks, best->picks))) {
      best = &*s;
    }
  }
  if (best == nullptr) {
    throw IncompatibleResolution("no compatible choice of alternatives along the route from '" +
                                 std::string(origin) + "' to '" + std::string(goal) + "'");
  }
  for (std::size_t s = 0; s < slots.size(); ++s) out.choice[slots[s].vertex] = best->picks[s];
  return out;
}

std::string extended_id(std::string_view vertex, std::size_t alternative) {
  return std::string(vertex) + kAltSeparator + std::to_string(alternative);
}

std::pair<std::string, std::size_t> split_extended_id(std::string_view id) {
  const auto pos = id.rfind(kAltSeparator);
  if (pos == std::string_view::npos) return {std::string(id), 0};
  const auto digits = id.substr(pos + 1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw InvalidInput("malformed extended id '" + std::string(id) + "'");
  }
  return {std::string(id.substr(0, pos)), std::stoul(std::string(digits))};
}

namespace {

const std::vector<DesignAlternative>* alternatives_of(const Vertex& v) {
  if (std::holds_alternative<PlainKind>(v.kind)) return nullptr;
  if (const auto* a = std::get_if<AlternativesKind>(&v.kind)) return &a->alternatives;
  throw InvalidInput("vertex '" + v.id + "' of kind " + std::string(kind_name(v.kind)) +
                     " cannot be extended; only plain and alternatives vertices can");
}

std::vector<std::string> expanded_ids(const Vertex& v) {
  const auto* alts = alternatives_of(v);
  if (alts == nullptr) return {v.id};
  std::vector<std::string> out;
  for (std::size_t j = 1; j <= alts->size(); ++j) out.push_back(extended_id(v.id, j));
  return out;
}

}  // namespace

DesignSpace extend_digraph(const DesignSpace& space, const Surcharge& surcharge) {
  DesignSpace out;
  out.criteria = space.criteria;
  for (const auto& v : space.vertices) {
    for (const auto& id : expanded_ids(v)) {
      out.vertices.push_back({id, PlainKind{}, v.profit, v.duration, v.labels});
    }
  }
  const auto& table = space.alternative_compatibility;
  for (const auto& arc : space.arcs) {
    const Vertex* tail = space.find_vertex(arc.tail);
    const Vertex* head = space.find_vertex(arc.head);
    if (tail == nullptr || head == nullptr) {
      throw InvalidInput("arc " + arc.tail + "->" + arc.head + " has unknown endpoint");
    }
    const auto* tail_alts = alternatives_of(*tail);
    const auto* head_alts = alternatives_of(*head);
    const std::size_t nt = tail_alts ? tail_alts->size() : 1;
    const std::size_t nh = head_alts ? head_alts->size() : 1;
    for (std::size_t i = 0; i < nt; ++i) {
      const DesignAlternative* ta = tail_alts ? &(*tail_alts)[i] : nullptr;
      for (std::size_t j = 0; j < nh; ++j) {
        const DesignAlternative* ha = head_alts ? &(*head_alts)[j] : nullptr;
        if (table && ta && ha && table->get(ta->id, ha->id, 0) == 0) continue;
        Arc e{tail_alts ? extended_id(tail->id, i + 1) : tail->id,
              head_alts ? extended_id(head->id, j + 1) : head->id, arc.weight};
        if (surcharge) {
          const Rational extra = surcharge(arc, ta, ha);
          for (auto& w : e.weight) w += extra;
        }
        out.arcs.push_back(std::move(e));
      }
    }
  }
  auto expand = [&](const std::vector<std::string>& ids) {
    std::vector<std::string> res;
    for (const auto& id : ids) {
      const Vertex* v = space.find_vertex(id);
      if (v == nullptr) throw InvalidInput("unknown vertex '" + id + "'");
      for (auto& x : expanded_ids(*v)) res.push_back(std::move(x));
    }
    return res;
  };
  out.origins = expand(space.origins);
  out.goals = expand(space.goals);
  return out;
}

ResolvedRoute strategy2_solve(const DesignSpace& space, std::span<const std::string> origins,
                              std::span<const std::string> goals, const Surcharge& surcharge) {
  const DesignSpace ext = extend_digraph(space, surcharge);
  auto resolve = [&](std::span<const std::string> ids) {
    std::vector<std::string> out;
    for (const auto& id : ids) {
      if (ext.find_vertex(id) != nullptr) {
        out.push_back(id);
        continue;
      }
      const Vertex* v = space.find_vertex(id);
      if (v == nullptr) throw InvalidInput("unknown vertex '" + id + "'");
      for (auto& x : expanded_ids(*v)) out.push_back(std::move(x));
    }
    return out;
  };
  const auto from = resolve(origins);
  const auto to = resolve(goals);

  std::optional<Route> best;
  for (const auto& o : from) {
    for (auto& [goal, route] : multi_goal_shortest(ext, o, to)) {
      if (route && (!best || route_order_less(*route, *best))) best = std::move(route);
    }
  }
  if (!best) throw NoFeasibleRoute("no origin reaches any goal in the extended digraph");

  ResolvedRoute out;
  std::vector<std::string> base;
  for (const auto& id : best->vertices) {
    auto [vertex, j] = split_extended_id(id);
    if (j > 0) {
      const auto* alts = alternatives_of(*space.find_vertex(vertex));
      out.choice[vertex] = (*alts)[j - 1].id;
    }
    base.push_back(std::move(vertex));
  }
  out.base = make_route(std::move(base), space);
  out.base.cost = best->cost;
  return out;
}

MultistageResult multistage_synthesize(const Scenario& scenario) {
  if (scenario.stages.empty()) throw InvalidInput("scenario has no stages");
  MultistageResult result;
  for (const auto& stage : scenario.stages) {
    result.stages.push_back(synthesize_hierarchical(stage.structure));
    if (result.stages.back().composites.empty()) {
      result.diagnostics.push_back("stage " + stage.id + ": synthesis is empty at node " +
                                   result.stages.back().failed_node.value_or(stage.structure.root.id));
    }
  }
  if (!result.diagnostics.empty()) return result;

  const std::size_t T = scenario.stages.size();
  std::vector<std::vector<DesignAlternative>> options(T);
  for (std::size_t s = 0; s < T; ++s) {
    for (const auto& c : result.stages[s].composites) {
      auto it = scenario.stages[s].priorities.find(c.id);
      options[s].push_back({c.id, it == scenario.stages[s].priorities.end() ? 1 : it->second});
    }
  }
  const auto& table = scenario.compatibility;

  for (std::size_t s = 0; s + 1 < T; ++s) {
    bool open = false;
    for (const auto& a : options[s]) {
      for (const auto& b : options[s + 1]) open = open || table.get(a.id, b.id, 0) > 0;
    }
    if (!open) {
      result.diagnostics.push_back("stages " + scenario.stages[s].id + " -> " + scenario.stages[s + 1].id +
                                   ": every composite pair is incompatible");
    }
  }

  std::vector<StageTrajectory> feasible;
  std::vector<std::size_t> pick(T, 0);
  std::vector<DesignAlternative> chosen(T);
  for (bool more = true; more;) {
    for (std::size_t s = 0; s < T; ++s) chosen[s] = options[s][pick[s]];
    auto lookup = [&](std::string_view a, std::string_view b) {
      std::size_t ia = 0, ib = 0;
      for (std::size_t s = 0; s < T; ++s) {
        if (chosen[s].id == a) ia = s;
        if (chosen[s].id == b) ib = s;
      }
      const bool adjacent = ia + 1 == ib || ib + 1 == ia;
      return adjacent ? table.get(a, b, 0) : table.get(a, b, scenario.l);
    };
    SystemQuality q = system_quality(chosen, lookup, scenario.k, scenario.l);
    if (q.w > 0) {
      StageTrajectory t;
      for (const auto& c : chosen) t.composites.push_back(c.id);
      t.quality = std::move(q);
      feasible.push_back(std::move(t));
    }
    more = false;
    for (std::size_t s = T; s-- > 0;) {
      if (++pick[s] < options[s].size()) {
        more = true;
        break;
      }
      pick[s] = 0;
    }
  }

  for (const auto& t : feasible) {
    const bool dominated = std::any_of(feasible.begin(), feasible.end(), [&](const StageTrajectory& o) {
      return quality_dominates(o.quality, t.quality);
    });
    if (!dominated) result.trajectories.push_back(t);
  }
  if (result.trajectories.empty() && result.diagnostics.empty()) {
    result.diagnostics.push_back("no trajectory is compatible across all stages");
  }
  return result;
}

CoordinationReport coordinate_multidomain(const std::map<std::string, Route>& routes,
                                          std::span<const Checkpoint> checkpoints) {
  CoordinationReport report;
  std::map<std::string, std::size_t> cursor;  // first position still open per domain
  for (const auto& cp : checkpoints) {
    for (const auto& [domain, vertex] : cp.required) {
      auto it = routes.find(domain);
      if (it == routes.end()) {
        report.violated.push_back({domain, cp.id, "no route for domain"});
        continue;
      }
      const auto& seq = it->second.vertices;
      const std::size_t from = cursor[domain];
      auto hit = std::find(seq.begin() + std::min(from, seq.size()), seq.end(), vertex);
      if (hit != seq.end()) {
        const auto pos = static_cast<std::size_t>(hit - seq.begin());
        cursor[domain] = pos + 1;
        report.satisfied.push_back({domain, cp.id, vertex + " at position " + std::to_string(pos)});
      } else if (std::find(seq.begin(), seq.end(), vertex) != seq.end()) {
        report.violated.push_back({domain, cp.id, vertex + " is visited before an earlier checkpoint"});
      } else {
        report.violated.push_back({domain, cp.id, vertex + " is not on the route"});
      }
    }
  }
  return report;
}

namespace {

bool layered_better(const LayeredRoute& a, const LayeredRoute& b) {
  if (a.total != b.total) return a.total < b.total;
  if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
  return ids_less(a.vertices, b.vertices);
}

}  // namespace

std::map<std::string, std::optional<LayeredRoute>, IdLess> compose_layered_routes(
    const LayeredPlan& plan, std::string_view source) {
  std::map<std::string, std::optional<LayeredRoute>, IdLess> out;
  auto claim = [&](const std::string& dest) {
    if (!out.emplace(dest, std::nullopt).second) {
      throw InvalidInput("destination '" + dest + "' is listed more than once");
    }
  };

  for (const auto& dest : plan.up_destinations) {
    claim(dest);
    if (auto r = shortest_path(plan.up, source, dest)) {
      LayeredRoute lr{"", "", *r, std::nullopt, r->vertices, r->cost.at(0)};
      out[dest] = std::move(lr);
    }
  }

  for (const auto& [name, domain] : plan.domains) {
    for (const auto& dest : domain.destinations) claim(dest);
    for (const auto& gw : domain.gateways) {
      if (plan.up.find_vertex(gw) == nullptr || domain.space.find_vertex(gw) == nullptr) {
        throw InvalidInput("gateway '" + gw + "' of domain '" + name + "' is missing from a layer");
      }
    }
    const auto ups = multi_goal_shortest(plan.up, source, domain.gateways);
    for (const auto& gw : domain.gateways) {
      const auto& up = ups.at(gw);
      if (!up) continue;
      const auto downs = multi_goal_shortest(domain.space, gw, domain.destinations);
      for (const auto& dest : domain.destinations) {
        const auto& down = downs.at(dest);
        if (!down) continue;
        LayeredRoute cand{name, gw, *up, *down, up->vertices, up->cost.at(0) + down->cost.at(0)};
        cand.vertices.insert(cand.vertices.end(), down->vertices.begin() + 1, down->vertices.end());
        auto& slot = out[dest];
        if (!slot || layered_better(cand, *slot)) slot = std::move(cand);
      }
    }
  }
  return out;
}

}  // namespace trajkit
