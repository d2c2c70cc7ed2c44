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

#include "trajkit/routing.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "trajkit/errors.hpp"

namespace trajkit {

SpaceIndex::SpaceIndex(const DesignSpace& space) : space_(&space) {
  const int n = static_cast<int>(space.vertices.size());
  ids_.reserve(n);
  vertices_.reserve(n);
  for (const auto& v : space.vertices) {
    if (!lookup_.emplace(v.id, static_cast<int>(ids_.size())).second) {
      throw InvalidInput("duplicate vertex id '" + v.id + "'");
    }
    ids_.push_back(v.id);
    vertices_.push_back(&v);
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [this](int a, int b) { return id_less(ids_[a], ids_[b]); });
  rank_.assign(n, 0);
  for (int r = 0; r < n; ++r) rank_[order[r]] = r;

  out_.assign(n, {});
  for (const auto& a : space.arcs) {
    const int t = index(a.tail);
    const int h = index(a.head);
    if (t < 0 || h < 0) throw InvalidInput("arc " + a.tail + "->" + a.head + " has unknown endpoint");
    out_[t].push_back({h, &a.weight});
  }
  for (auto& edges : out_) {
    std::sort(edges.begin(), edges.end(),
              [this](const Edge& a, const Edge& b) { return rank_[a.head] < rank_[b.head]; });
  }
}

int SpaceIndex::index(std::string_view id) const {
  auto it = lookup_.find(std::string(id));
  return it == lookup_.end() ? -1 : it->second;
}

int SpaceIndex::require(std::string_view id) const {
  const int v = index(id);
  if (v < 0) throw InvalidInput("unknown vertex '" + std::string(id) + "'");
  return v;
}

std::vector<std::string> SpaceIndex::to_ids(std::span<const int> path) const {
  std::vector<std::string> out;
  out.reserve(path.size());
  for (int v : path) out.push_back(ids_[v]);
  return out;
}

bool SpaceIndex::lex_less(std::span<const int> a, std::span<const int> b) const {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [this](int x, int y) { return rank_[x] < rank_[y]; });
}

bool route_order_less(const Route& a, const Route& b) {
  if (a.cost != b.cost) {
    return std::lexicographical_compare(a.cost.begin(), a.cost.end(), b.cost.begin(), b.cost.end());
  }
  if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
  return std::lexicographical_compare(a.vertices.begin(), a.vertices.end(), b.vertices.begin(),
                                      b.vertices.end(), [](const std::string& x, const std::string& y) {
                                        return id_less(x, y);
                                      });
}

namespace {

void require_scalar(const DesignSpace& space) {
  for (const auto& a : space.arcs) {
    if (a.weight.size() != 1) {
      throw InvalidInput("arc " + a.tail + "->" + a.head + " needs a scalar weight");
    }
    if (a.weight[0] < 0) throw InvalidInput("arc " + a.tail + "->" + a.head + " has negative weight");
  }
}

struct PathLabel {
  Rational cost{0};
  std::vector<int> path;
};

bool label_better(const SpaceIndex& g, const PathLabel& a, const PathLabel& b) {
  if (a.cost != b.cost) return a.cost < b.cost;
  if (a.path.size() != b.path.size()) return a.path.size() < b.path.size();
  return g.lex_less(a.path, b.path);
}

struct Restrictions {
  std::vector<char> banned_vertex;
  std::set<std::pair<int, int>> banned_arc;
};

/// Dijkstra keyed on (cost, arcs, lexicographic path). Prefixes of optimal
/// paths are optimal under this order, so the usual settle loop applies.
std::vector<std::optional<PathLabel>> dijkstra(const SpaceIndex& g, int source,
                                               const Restrictions* restrict = nullptr,
                                               int target = -1) {
  const int n = g.size();
  std::vector<std::optional<PathLabel>> best(n);
  std::vector<char> settled(n, 0);
  best[source] = PathLabel{Rational(0), {source}};
  for (;;) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (settled[v] || !best[v]) continue;
      if (pick < 0 || label_better(g, *best[v], *best[pick])) pick = v;
    }
    if (pick < 0) break;
    settled[pick] = 1;
    if (pick == target) break;
    for (const auto& e : g.out(pick)) {
      if (settled[e.head]) continue;
      if (restrict != nullptr) {
        if (restrict->banned_vertex[e.head]) continue;
        if (restrict->banned_arc.count({pick, e.head})) continue;
      }
      PathLabel cand{best[pick]->cost + (*e.weight)[0], best[pick]->path};
      cand.path.push_back(e.head);
      if (!best[e.head] || label_better(g, cand, *best[e.head])) best[e.head] = std::move(cand);
    }
  }
  return best;
}

Rational path_cost(const SpaceIndex& g, std::span<const int> path) {
  Rational total(0);
  for (std::size_t i = 1; i < path.size(); ++i) {
    for (const auto& e : g.out(path[i - 1])) {
      if (e.head == path[i]) {
        total += (*e.weight)[0];
        break;
      }
    }
  }
  return total;
}

}  // namespace

std::optional<Route> shortest_path(const DesignSpace& space, std::string_view origin,
                                   std::string_view goal) {
  require_scalar(space);
  SpaceIndex g(space);
  const int s = g.require(origin);
  const int t = g.require(goal);
  auto labels = dijkstra(g, s, nullptr, t);
  if (!labels[t]) return std::nullopt;
  return make_route(g.to_ids(labels[t]->path), space);
}

std::map<std::string, std::optional<Route>, IdLess> multi_goal_shortest(
    const DesignSpace& space, std::string_view origin, std::span<const std::string> goals) {
  require_scalar(space);
  SpaceIndex g(space);
  const int s = g.require(origin);
  for (const auto& goal : goals) g.require(goal);
  auto labels = dijkstra(g, s);
  std::map<std::string, std::optional<Route>, IdLess> out;
  for (const auto& goal : goals) {
    const auto& label = labels[g.index(goal)];
    out[goal] = label ? std::optional<Route>(make_route(g.to_ids(label->path), space)) : std::nullopt;
  }
  return out;
}

std::vector<Route> k_shortest_paths(const DesignSpace& space, std::string_view origin,
                                    std::string_view goal, std::size_t k) {
  if (k == 0) throw InvalidInput("k_shortest_paths: k must be at least 1");
  require_scalar(space);
  SpaceIndex g(space);
  const int s = g.require(origin);
  const int t = g.require(goal);

  std::vector<PathLabel> found;
  {
    auto first = dijkstra(g, s, nullptr, t);
    if (!first[t]) return {};
    found.push_back(std::move(*first[t]));
  }
  std::vector<PathLabel> pool;
  auto known = [&](const std::vector<int>& path) {
    auto same = [&](const PathLabel& l) { return l.path == path; };
    return std::any_of(found.begin(), found.end(), same) || std::any_of(pool.begin(), pool.end(), same);
  };

  while (found.size() < k) {
    const auto last = found.back().path;
    for (std::size_t i = 0; i + 1 < last.size(); ++i) {
      const int spur = last[i];
      const std::span<const int> root(last.data(), i + 1);
      Restrictions r{std::vector<char>(g.size(), 0), {}};
      for (std::size_t j = 0; j < i; ++j) r.banned_vertex[last[j]] = 1;
      for (const auto& p : found) {
        if (p.path.size() > i + 1 && std::equal(root.begin(), root.end(), p.path.begin())) {
          r.banned_arc.insert({p.path[i], p.path[i + 1]});
        }
      }
      auto labels = dijkstra(g, spur, &r, t);
      if (!labels[t]) continue;
      PathLabel cand;
      cand.path.assign(root.begin(), root.end() - 1);
      cand.path.insert(cand.path.end(), labels[t]->path.begin(), labels[t]->path.end());
      cand.cost = path_cost(g, root) + labels[t]->cost;
      if (!known(cand.path)) pool.push_back(std::move(cand));
    }
    if (pool.empty()) break;
    auto best = std::min_element(pool.begin(), pool.end(), [&](const PathLabel& a, const PathLabel& b) {
      return label_better(g, a, b);
    });
    found.push_back(std::move(*best));
    pool.erase(best);
  }

  std::vector<Route> out;
  out.reserve(found.size());
  for (const auto& l : found) out.push_back(make_route(g.to_ids(l.path), space));
  return out;
}

std::vector<Route> multicriteria_shortest(const DesignSpace& space, std::string_view origin,
                                          std::string_view goal) {
  SpaceIndex g(space);
  const int s = g.require(origin);
  const int t = g.require(goal);
  const std::size_t arity = arc_arity(space);
  for (const auto& a : space.arcs) {
    if (a.weight.size() != arity) throw InvalidInput("arc weights must share one arity");
    for (const auto& w : a.weight) {
      if (w < 0) throw InvalidInput("arc " + a.tail + "->" + a.head + " has a negative weight");
    }
  }
  const Criteria minimize(arity, CriterionSpec{"", Sense::minimize});

  struct Label {
    VectorEstimate cost;
    std::vector<int> path;
    bool alive = true;
  };
  std::vector<Label> labels;
  std::vector<std::vector<std::size_t>> at(g.size());
  std::deque<std::size_t> queue;

  labels.push_back({VectorEstimate(arity, Rational(0)), {s}, true});
  at[s].push_back(0);
  queue.push_back(0);

  auto tie_better = [&](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return g.lex_less(a, b);
  };

  while (!queue.empty()) {
    const std::size_t id = queue.front();
    queue.pop_front();
    if (!labels[id].alive) continue;
    const int v = labels[id].path.back();
    for (const auto& e : g.out(v)) {
      const int u = e.head;
      if (std::find(labels[id].path.begin(), labels[id].path.end(), u) != labels[id].path.end()) {
        continue;
      }
      VectorEstimate cost = labels[id].cost;
      for (std::size_t c = 0; c < arity; ++c) cost[c] += (*e.weight)[c];
      std::vector<int> path = labels[id].path;
      path.push_back(u);

      bool rejected = false;
      for (std::size_t other : at[u]) {
        const Label& l = labels[other];
        if (!l.alive) continue;
        if (l.cost == cost) {
          if (tie_better(path, l.path)) {
            labels[other].alive = false;
          } else {
            rejected = true;
          }
          break;
        }
        if (dominates(l.cost, cost, minimize)) {
          rejected = true;
          break;
        }
      }
      if (rejected) continue;
      for (std::size_t other : at[u]) {
        if (labels[other].alive && dominates(cost, labels[other].cost, minimize)) {
          labels[other].alive = false;
        }
      }
      std::erase_if(at[u], [&](std::size_t x) { return !labels[x].alive; });
      labels.push_back({std::move(cost), std::move(path), true});
      at[u].push_back(labels.size() - 1);
      queue.push_back(labels.size() - 1);
    }
  }

  std::vector<const Label*> goal_labels;
  for (std::size_t id : at[t]) {
    if (labels[id].alive) goal_labels.push_back(&labels[id]);
  }
  std::sort(goal_labels.begin(), goal_labels.end(), [](const Label* a, const Label* b) {
    return std::lexicographical_compare(a->cost.begin(), a->cost.end(), b->cost.begin(), b->cost.end());
  });
  std::vector<Route> out;
  for (const Label* l : goal_labels) out.push_back(make_route(g.to_ids(l->path), space));
  return out;
}

ReplanDecision replan_on_change(const ReplanState& state) {
  if (state.prefix.empty()) throw InvalidInput("replan_on_change: empty committed prefix");
  if (state.incumbent >= state.candidates.size() && !state.candidates.empty()) {
    throw InvalidInput("replan_on_change: incumbent index out of range");
  }
  require_scalar(state.updated);
  SpaceIndex g(state.updated);
  const int current = g.require(state.prefix.back());
  auto from_current = dijkstra(g, current);

  struct Option {
    std::size_t candidate;
    std::vector<int> connector;
    std::vector<int> remainder;
    Rational total;
  };
  auto option_better = [](const Option& a, const Option& b) {
    if (a.total != b.total) return a.total < b.total;
    const auto hops_a = a.connector.size() + a.remainder.size();
    const auto hops_b = b.connector.size() + b.remainder.size();
    return hops_a < hops_b;
  };

  std::vector<std::optional<Option>> per_candidate(state.candidates.size());
  for (std::size_t c = 0; c < state.candidates.size(); ++c) {
    const auto& verts = state.candidates[c].vertices;
    std::vector<int> path;
    for (const auto& id : verts) path.push_back(g.require(id));
    const auto on_route = std::find(path.begin(), path.end(), current);
    const std::size_t first_join = on_route == path.end() ? 0 : on_route - path.begin();

    // Cost of path[j..] under the updated weights, computed back to front.
    std::vector<std::optional<Rational>> suffix(path.size());
    suffix[path.size() - 1] = Rational(0);
    for (std::size_t j = path.size() - 1; j-- > 0;) {
      if (!suffix[j + 1]) continue;
      for (const auto& e : g.out(path[j])) {
        if (e.head == path[j + 1]) {
          suffix[j] = *suffix[j + 1] + (*e.weight)[0];
          break;
        }
      }
    }
    // The join keeps at least one arc of the candidate, otherwise every
    // candidate could reach the goal by the same detour.
    const std::size_t last_join = std::max(first_join, path.size() >= 2 ? path.size() - 2 : 0);
    for (std::size_t j = first_join; j <= last_join && j < path.size(); ++j) {
      if (!suffix[j] || !from_current[path[j]]) continue;
      Option opt{c, from_current[path[j]]->path, {path.begin() + j, path.end()},
                 from_current[path[j]]->cost + *suffix[j]};
      if (!per_candidate[c] || option_better(opt, *per_candidate[c])) per_candidate[c] = std::move(opt);
    }
  }

  std::optional<Option> chosen;
  if (state.incumbent < per_candidate.size()) chosen = per_candidate[state.incumbent];
  for (std::size_t c = 0; c < per_candidate.size(); ++c) {
    if (!per_candidate[c]) continue;
    if (!chosen || per_candidate[c]->total < chosen->total) chosen = per_candidate[c];
  }
  if (!chosen) {
    throw NoFeasibleRoute("no candidate route is reachable from '" + state.prefix.back() + "'");
  }

  ReplanDecision out;
  out.candidate = chosen->candidate;
  out.switched = chosen->candidate != state.incumbent;
  out.total = chosen->total;
  out.connector = make_route(g.to_ids(chosen->connector), state.updated);
  std::vector<int> full = chosen->connector;
  full.insert(full.end(), chosen->remainder.begin() + 1, chosen->remainder.end());
  out.continuation = make_route(g.to_ids(full), state.updated);
  out.continuation.walk = std::set<int>(full.begin(), full.end()).size() != full.size();
  return out;
}

namespace {

void check_instance(const OrienteeringInstance& inst) {
  if (inst.start == inst.end) throw InvalidInput("orienteering: start and end must differ");
  auto non_negative = [](const std::optional<Rational>& cap, const char* name) {
    if (cap && *cap < 0) throw InvalidInput(std::string("orienteering: negative ") + name);
  };
  non_negative(inst.budget, "budget");
  non_negative(inst.arc_cap, "arc cap");
  non_negative(inst.time_cap, "time cap");
  if (inst.budget && inst.arc_cap) {
    throw InvalidInput("orienteering: give either a total budget or a per-arc cap, not both");
  }
  require_scalar(inst.space);
}

Rational profit_of(const Vertex& v, std::size_t index) {
  return index < v.profit.size() ? v.profit[index] : Rational(0);
}

}  // namespace

OrienteeringResult orienteering_exact(const OrienteeringInstance& inst) {
  check_instance(inst);
  if (!inst.budget) throw InvalidInput("orienteering_exact needs a total budget");
  if (inst.space.vertices.size() > inst.max_vertices) {
    throw InvalidInput("orienteering_exact: " + std::to_string(inst.space.vertices.size()) +
                       " vertices exceed the exact-search guard of " +
                       std::to_string(inst.max_vertices));
  }
  SpaceIndex g(inst.space);
  const int s = g.require(inst.start);
  const int t = g.require(inst.end);
  const Rational budget = *inst.budget;

  // Reverse distances to the end vertex give an admissible budget test.
  DesignSpace reversed = inst.space;
  for (auto& a : reversed.arcs) std::swap(a.tail, a.head);
  SpaceIndex rg(reversed);
  auto to_end = dijkstra(rg, rg.require(inst.end));

  std::vector<Rational> profit(g.size());
  Rational optimistic(0);
  for (int v = 0; v < g.size(); ++v) {
    profit[v] = profit_of(g.vertex(v), inst.profit_index);
    if (profit[v] > 0) optimistic += profit[v];
  }

  struct Best {
    Rational score;
    std::vector<int> path;
  };
  std::optional<Best> best;
  std::vector<int> path{s};
  std::vector<char> visited(g.size(), 0);
  visited[s] = 1;

  auto better = [&](const Rational& score, const std::vector<int>& p) {
    if (!best) return true;
    if (score != best->score) return score > best->score;
    if (p.size() != best->path.size()) return p.size() < best->path.size();
    return g.lex_less(p, best->path);
  };

  // `remaining` is the summed positive profit of unvisited vertices.
  auto search = [&](auto&& self, int v, Rational cost, Rational score, Rational remaining) -> void {
    if (v == t) {
      if (better(score, path)) best = Best{score, path};
      return;
    }
    if (best && score + remaining < best->score) return;
    for (const auto& e : g.out(v)) {
      const int u = e.head;
      if (visited[u]) continue;
      const Rational next_cost = cost + (*e.weight)[0];
      if (!to_end[u] || next_cost + to_end[u]->cost > budget) continue;
      visited[u] = 1;
      path.push_back(u);
      self(self, u, next_cost, score + profit[u], remaining - (profit[u] > 0 ? profit[u] : Rational(0)));
      path.pop_back();
      visited[u] = 0;
    }
  };
  if (to_end[s] && to_end[s]->cost <= budget) {
    search(search, s, Rational(0), profit[s], optimistic - (profit[s] > 0 ? profit[s] : Rational(0)));
  }
  if (!best) {
    throw Infeasible("orienteering: no " + inst.start + "->" + inst.end + " path within budget " +
                     to_string(budget));
  }
  return {make_route(g.to_ids(best->path), inst.space), best->score};
}

Criteria route_criteria(const DesignSpace& space) {
  Criteria c = space.criteria;
  c.push_back({"d", Sense::minimize});
  return c;
}

VectorEstimate route_objectives(const Route& route) {
  VectorEstimate v = route.profit;
  v.push_back(route.cost.empty() ? Rational(0) : route.cost[0]);
  return v;
}

std::vector<Route> orienteering_multiobjective(const OrienteeringInstance& inst) {
  check_instance(inst);
  SpaceIndex g(inst.space);
  const int s = g.require(inst.start);
  const int t = g.require(inst.end);

  std::vector<Route> feasible;
  std::vector<int> path{s};
  std::vector<char> visited(g.size(), 0);
  visited[s] = 1;
  auto search = [&](auto&& self, int v, Rational cost, Rational time) -> void {
    if (v == t) {
      feasible.push_back(make_route(g.to_ids(path), inst.space));
      return;
    }
    for (const auto& e : g.out(v)) {
      const int u = e.head;
      const Rational w = (*e.weight)[0];
      if (visited[u]) continue;
      if (inst.arc_cap && w > *inst.arc_cap) continue;
      if (inst.budget && cost + w > *inst.budget) continue;
      const Rational next_time = time + g.vertex(u).duration;
      if (inst.time_cap && next_time > *inst.time_cap) continue;
      visited[u] = 1;
      path.push_back(u);
      self(self, u, cost + w, next_time);
      path.pop_back();
      visited[u] = 0;
    }
  };
  search(search, s, Rational(0), Rational(0));
  return pareto_filter(feasible, route_criteria(inst.space), route_objectives);
}

}  // namespace trajkit
