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

#include "trajkit/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "trajkit/errors.hpp"

namespace trajkit {
namespace {

using InJson = nlohmann::json;

// Field-path aware accessors; every failure names the source and path.
class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& path, const std::string& message) const {
    throw ParseError(source_ + ": " + (path.empty() ? "/" : path) + ": " + message);
  }

  const InJson& object(const InJson& j, const std::string& path) const {
    if (!j.is_object()) fail(path, "expected an object");
    return j;
  }

  const InJson& array(const InJson& j, const std::string& path) const {
    if (!j.is_array()) fail(path, "expected an array");
    return j;
  }

  const InJson& need(const InJson& obj, const std::string& path, const char* key) const {
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, std::string("missing field '") + key + "'");
    return *it;
  }

  const InJson* maybe(const InJson& obj, const char* key) const {
    auto it = obj.find(key);
    return it == obj.end() || it->is_null() ? nullptr : &*it;
  }

  std::string string(const InJson& j, const std::string& path) const {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
  }

  int integer(const InJson& j, const std::string& path) const {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    const auto v = j.get<std::int64_t>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
      fail(path, "integer out of range");
    }
    return static_cast<int>(v);
  }

  Rational rational(const InJson& j, const std::string& path) const {
    try {
      if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
      if (j.is_number_float()) {
        fail(path, "binary floating point is not accepted; write the value as a string such as \"0.5\" or \"1/2\"");
      }
      if (j.is_string()) return parse_rational(j.get<std::string>());
      if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
        const auto den = j[1].get<std::int64_t>();
        if (den == 0) fail(path, "zero denominator");
        return Rational(j[0].get<std::int64_t>(), den);
      }
    } catch (const InvalidInput& e) {
      fail(path, e.what());
    }
    fail(path, "expected a rational (integer, \"p/q\", decimal string or [p, q])");
  }

  std::vector<std::string> strings(const InJson& j, const std::string& path) const {
    array(j, path);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(string(j[i], path + "/" + std::to_string(i)));
    return out;
  }

  VectorEstimate rationals(const InJson& j, const std::string& path) const {
    array(j, path);
    VectorEstimate out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational(j[i], path + "/" + std::to_string(i)));
    return out;
  }

  CompatibilityTable table(const InJson& j, const std::string& path) const {
    array(j, path);
    CompatibilityTable t;
    for (std::size_t i = 0; i < j.size(); ++i) {
      const std::string p = path + "/" + std::to_string(i);
      const auto& e = j[i];
      if (!e.is_array() || e.size() != 3) fail(p, "expected [\"a\", \"b\", value]");
      const auto a = string(e[0], p + "/0");
      const auto b = string(e[1], p + "/1");
      const int v = integer(e[2], p + "/2");
      if (v < 0) fail(p, "negative compatibility");
      if (a == b) fail(p, "an item cannot be paired with itself");
      if (!t.insert(a, b, v)) fail(p, "conflicting estimate for " + a + "/" + b);
    }
    return t;
  }

  std::map<std::string, int> priorities(const InJson& j, const std::string& path) const {
    object(j, path);
    std::map<std::string, int> out;
    for (const auto& [key, value] : j.items()) out[key] = integer(value, path + "/" + key);
    return out;
  }

  std::vector<DesignAlternative> alternatives(const InJson& j, const std::string& path) const {
    array(j, path);
    std::vector<DesignAlternative> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
      const std::string p = path + "/" + std::to_string(i);
      const auto& e = j[i];
      if (e.is_array() && e.size() == 2) {
        out.push_back({string(e[0], p + "/0"), integer(e[1], p + "/1")});
      } else if (e.is_object()) {
        const auto* prio = maybe(e, "priority");
        out.push_back({string(need(e, p, "id"), p + "/id"), prio ? integer(*prio, p + "/priority") : 1});
      } else if (e.is_string()) {
        out.push_back({e.get<std::string>(), 1});
      } else {
        fail(p, "expected an alternative: \"id\", [\"id\", priority] or {\"id\", \"priority\"}");
      }
    }
    return out;
  }

  MorphNode node(const InJson& j, const std::string& path) const {
    object(j, path);
    MorphNode n;
    n.id = string(need(j, path, "id"), path + "/id");
    if (const auto* a = maybe(j, "alternatives")) n.alternatives = alternatives(*a, path + "/alternatives");
    if (const auto* c = maybe(j, "children")) {
      array(*c, path + "/children");
      for (std::size_t i = 0; i < c->size(); ++i) {
        n.children.push_back(node((*c)[i], path + "/children/" + std::to_string(i)));
      }
    }
    if (const auto* t = maybe(j, "compatibility")) n.compatibility = table(*t, path + "/compatibility");
    if (const auto* d = maybe(j, "default_compatibility")) {
      n.default_compatibility = integer(*d, path + "/default_compatibility");
    }
    if (const auto* p = maybe(j, "priorities")) n.priorities = priorities(*p, path + "/priorities");
    if (const auto* p = maybe(j, "composite_prefix")) n.composite_prefix = string(*p, path + "/composite_prefix");
    return n;
  }

  MorphStructure structure(const InJson& j, const std::string& path) const {
    object(j, path);
    MorphStructure s;
    if (const auto* k = maybe(j, "k")) s.k = integer(*k, path + "/k");
    if (const auto* l = maybe(j, "l")) s.l = integer(*l, path + "/l");
    if (const auto* t = maybe(j, "shared")) s.shared = table(*t, path + "/shared");
    s.root = node(need(j, path, "root"), path + "/root");
    return s;
  }

  RuleSet rule_set(const InJson& j, const std::string& path, const char* id_key) const {
    object(j, path);
    RuleSet r;
    r.point = string(need(j, path, id_key), path + "/" + id_key);
    const auto& rules = array(need(j, path, "rules"), path + "/rules");
    for (std::size_t i = 0; i < rules.size(); ++i) {
      const std::string p = path + "/rules/" + std::to_string(i);
      object(rules[i], p);
      r.rules.push_back({string(need(rules[i], p, "outcome"), p + "/outcome"),
                         string(need(rules[i], p, "target"), p + "/target")});
    }
    return r;
  }

 private:
  std::string source_;
};

void check_structure(const MorphStructure& s, const std::string& where, std::vector<std::string>& out) {
  if (s.k < 1) out.push_back(where + ": k must be at least 1");
  if (s.l < 1) out.push_back(where + ": l must be at least 1");
  std::set<std::string> ids;
  auto walk = [&](auto&& self, const MorphNode& n) -> void {
    if (!ids.insert(n.id).second) out.push_back(where + ": duplicate node id '" + n.id + "'");
    if (n.is_leaf()) {
      if (n.alternatives.empty()) out.push_back(where + ": leaf '" + n.id + "' has no alternatives");
    } else if (!n.alternatives.empty()) {
      out.push_back(where + ": internal node '" + n.id + "' lists alternatives");
    }
    std::set<std::string> alt_ids;
    for (const auto& a : n.alternatives) {
      if (!alt_ids.insert(a.id).second) out.push_back(where + ": duplicate alternative '" + a.id + "'");
      if (a.priority < 1 || a.priority > s.k) {
        out.push_back(where + ": alternative '" + a.id + "' has priority " + std::to_string(a.priority) +
                      " outside 1.." + std::to_string(s.k));
      }
    }
    for (const auto& c : n.children) self(self, c);
  };
  walk(walk, s.root);
}

DesignSpace read_space(const Reader& r, const InJson& j) {
  DesignSpace s;
  if (const auto* c = r.maybe(j, "criteria")) {
    r.array(*c, "/criteria");
    for (std::size_t i = 0; i < c->size(); ++i) {
      const std::string p = "/criteria/" + std::to_string(i);
      r.object((*c)[i], p);
      CriterionSpec criterion{r.string(r.need((*c)[i], p, "name"), p + "/name"), Sense::maximize};
      if (const auto* sense = r.maybe((*c)[i], "sense")) {
        const auto text = r.string(*sense, p + "/sense");
        if (text == "minimize") criterion.sense = Sense::minimize;
        else if (text != "maximize") r.fail(p + "/sense", "expected \"maximize\" or \"minimize\"");
      }
      s.criteria.push_back(std::move(criterion));
    }
  }
  if (const auto* st = r.maybe(j, "structures")) {
    r.object(*st, "/structures");
    for (const auto& [name, body] : st->items()) s.structures[name] = r.structure(body, "/structures/" + name);
  }
  if (const auto* rs = r.maybe(j, "rule_sets")) {
    r.object(*rs, "/rule_sets");
    for (const auto& [name, body] : rs->items()) s.rule_sets[name] = r.rule_set(body, "/rule_sets/" + name, "point");
  }
  const auto& vs = r.array(r.need(j, "", "vertices"), "/vertices");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string p = "/vertices/" + std::to_string(i);
    const auto& v = r.object(vs[i], p);
    Vertex out;
    out.id = r.string(r.need(v, p, "id"), p + "/id");
    const std::string kind = r.maybe(v, "kind") ? r.string(v["kind"], p + "/kind") : "plain";
    if (kind == "plain") {
      out.kind = PlainKind{};
    } else if (kind == "alternatives") {
      out.kind = AlternativesKind{r.alternatives(r.need(v, p, "alternatives"), p + "/alternatives")};
    } else if (kind == "hierarchy") {
      out.kind = HierarchyKind{r.string(r.need(v, p, "structure"), p + "/structure")};
    } else if (kind == "two_component") {
      out.kind = TwoComponentKind{r.string(r.need(v, p, "structure"), p + "/structure"),
                                  r.string(r.need(v, p, "rules"), p + "/rules")};
    } else {
      r.fail(p + "/kind", "unknown vertex kind '" + kind + "'");
    }
    out.profit = r.maybe(v, "profit") ? r.rationals(v["profit"], p + "/profit")
                                      : VectorEstimate(s.criteria.size(), Rational(0));
    if (const auto* d = r.maybe(v, "duration")) out.duration = r.rational(*d, p + "/duration");
    if (const auto* l = r.maybe(v, "labels")) {
      for (auto& x : r.strings(*l, p + "/labels")) out.labels.insert(std::move(x));
    }
    s.vertices.push_back(std::move(out));
  }
  const auto& as = r.array(r.need(j, "", "arcs"), "/arcs");
  for (std::size_t i = 0; i < as.size(); ++i) {
    const std::string p = "/arcs/" + std::to_string(i);
    const auto& a = r.object(as[i], p);
    Arc out{r.string(r.need(a, p, "tail"), p + "/tail"), r.string(r.need(a, p, "head"), p + "/head"), {}};
    const auto& w = r.need(a, p, "weight");
    if (w.is_array()) {
      out.weight = r.rationals(w, p + "/weight");
    } else {
      out.weight = {r.rational(w, p + "/weight")};
    }
    s.arcs.push_back(std::move(out));
  }
  s.origins = r.strings(r.need(j, "", "origins"), "/origins");
  s.goals = r.strings(r.need(j, "", "goals"), "/goals");
  if (const auto* t = r.maybe(j, "alternative_compatibility")) {
    s.alternative_compatibility = r.table(*t, "/alternative_compatibility");
  }

  std::vector<std::string> problems;
  for (const auto& v : validate_space(s)) problems.push_back(v.element + ": " + v.message);
  for (const auto& [name, st] : s.structures) check_structure(st, "structure " + name, problems);
  if (!problems.empty()) throw ValidationError(std::move(problems));
  return s;
}

Scenario read_scenario(const Reader& r, const InJson& j) {
  Scenario s;
  if (const auto* k = r.maybe(j, "k")) s.k = r.integer(*k, "/k");
  if (const auto* l = r.maybe(j, "l")) s.l = r.integer(*l, "/l");
  if (const auto* t = r.maybe(j, "compatibility")) s.compatibility = r.table(*t, "/compatibility");
  const auto& stages = r.array(r.need(j, "", "stages"), "/stages");
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const std::string p = "/stages/" + std::to_string(i);
    r.object(stages[i], p);
    Stage st;
    st.id = r.string(r.need(stages[i], p, "id"), p + "/id");
    st.structure = r.structure(r.need(stages[i], p, "structure"), p + "/structure");
    if (const auto* pr = r.maybe(stages[i], "priorities")) st.priorities = r.priorities(*pr, p + "/priorities");
    s.stages.push_back(std::move(st));
  }
  std::vector<std::string> problems;
  if (s.stages.empty()) problems.push_back("scenario: no stages");
  std::set<std::string> ids;
  for (const auto& st : s.stages) {
    if (!ids.insert(st.id).second) problems.push_back("stage " + st.id + ": duplicate stage id");
    check_structure(st.structure, "stage " + st.id, problems);
    for (const auto& [c, prio] : st.priorities) {
      if (prio < 1 || prio > s.k) problems.push_back("stage " + st.id + ": priority of " + c + " outside 1..k");
    }
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));
  return s;
}

TreatmentScheme read_scheme(const Reader& r, const InJson& j) {
  TreatmentScheme s;
  s.initial = r.string(r.need(j, "", "initial"), "/initial");
  if (const auto* t = r.maybe(j, "shared")) s.shared = r.table(*t, "/shared");
  const auto& ds = r.array(r.need(j, "", "design_points"), "/design_points");
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const std::string p = "/design_points/" + std::to_string(i);
    r.object(ds[i], p);
    s.design_points.push_back({r.string(r.need(ds[i], p, "id"), p + "/id"),
                               r.structure(r.need(ds[i], p, "structure"), p + "/structure"),
                               r.string(r.need(ds[i], p, "next"), p + "/next")});
  }
  const auto& as = r.array(r.need(j, "", "analysis_points"), "/analysis_points");
  for (std::size_t i = 0; i < as.size(); ++i) {
    s.analysis_points.push_back(r.rule_set(as[i], "/analysis_points/" + std::to_string(i), "id"));
  }
  std::vector<std::string> problems;
  for (const auto& v : validate_scheme(s)) problems.push_back(v.element + ": " + v.message);
  for (const auto& d : s.design_points) check_structure(d.structure, "design point " + d.id, problems);
  if (!problems.empty()) throw ValidationError(std::move(problems));
  return s;
}

EduReference read_edu_reference(const Reader& r, const InJson& j) {
  EduReference ref;
  ref.start = r.string(r.need(j, "", "start"), "/start");
  ref.end = r.string(r.need(j, "", "end"), "/end");
  if (const auto* c = r.maybe(j, "arc_cap")) ref.arc_cap = r.rational(*c, "/arc_cap");
  if (const auto* c = r.maybe(j, "time_cap")) ref.time_cap = r.rational(*c, "/time_cap");
  const auto& ts = r.array(r.need(j, "", "templates"), "/templates");
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const std::string p = "/templates/" + std::to_string(i);
    r.object(ts[i], p);
    ref.templates.push_back({r.string(r.need(ts[i], p, "id"), p + "/id"),
                             r.strings(r.need(ts[i], p, "classes"), p + "/classes")});
  }
  const auto& ps = r.array(r.need(j, "", "printed"), "/printed");
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const std::string p = "/printed/" + std::to_string(i);
    r.object(ps[i], p);
    ref.printed.push_back({r.string(r.need(ps[i], p, "id"), p + "/id"),
                           r.string(r.need(ps[i], p, "template"), p + "/template"),
                           r.strings(r.need(ps[i], p, "vertices"), p + "/vertices"),
                           r.rationals(r.need(ps[i], p, "theta"), p + "/theta"),
                           r.rational(r.need(ps[i], p, "tau"), p + "/tau"),
                           r.rational(r.need(ps[i], p, "d"), p + "/d")});
  }
  std::vector<std::string> problems;
  std::set<std::string> ids;
  for (const auto& t : ref.templates) {
    if (!ids.insert(t.id).second) problems.push_back("template " + t.id + ": duplicate id");
    if (t.classes.size() < 2) problems.push_back("template " + t.id + ": needs at least two classes");
  }
  for (const auto& p : ref.printed) {
    if (!ids.count(p.template_id)) problems.push_back("printed " + p.id + ": unknown template " + p.template_id);
  }
  if (ref.arc_cap < 0 || ref.time_cap < 0) problems.push_back("caps must be nonnegative");
  if (!problems.empty()) throw ValidationError(std::move(problems));
  return ref;
}

StartupReference read_startup_reference(const Reader& r, const InJson& j) {
  StartupReference ref;
  const auto& stages = r.array(r.need(j, "", "stage_sets"), "/stage_sets");
  for (std::size_t s = 0; s < stages.size(); ++s) {
    const std::string p = "/stage_sets/" + std::to_string(s);
    r.array(stages[s], p);
    std::vector<std::vector<std::string>> set;
    for (std::size_t c = 0; c < stages[s].size(); ++c) {
      set.push_back(r.strings(stages[s][c], p + "/" + std::to_string(c)));
    }
    ref.stage_sets.push_back(std::move(set));
  }
  const auto& traj = r.array(r.need(j, "", "trajectory"), "/trajectory");
  for (std::size_t s = 0; s < traj.size(); ++s) {
    ref.trajectory.push_back(r.strings(traj[s], "/trajectory/" + std::to_string(s)));
  }
  ref.trajectory_ids = r.strings(r.need(j, "", "trajectory_ids"), "/trajectory_ids");
  return ref;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

// ---- writing ----

Json table_json(const CompatibilityTable& t) {
  Json out = Json::array();
  for (const auto& [key, value] : t.entries()) out.push_back(Json::array({key.first, key.second, value}));
  return out;
}

Json alternatives_json(const std::vector<DesignAlternative>& alts) {
  Json out = Json::array();
  for (const auto& a : alts) out.push_back(Json::array({a.id, a.priority}));
  return out;
}

Json node_json(const MorphNode& n) {
  Json out;
  out["id"] = n.id;
  if (!n.composite_prefix.empty()) out["composite_prefix"] = n.composite_prefix;
  if (!n.alternatives.empty()) out["alternatives"] = alternatives_json(n.alternatives);
  if (!n.priorities.empty()) {
    Json p = Json::object();
    for (const auto& [k, v] : n.priorities) p[k] = v;
    out["priorities"] = p;
  }
  if (n.default_compatibility != 0) out["default_compatibility"] = n.default_compatibility;
  if (!n.compatibility.empty()) out["compatibility"] = table_json(n.compatibility);
  if (!n.children.empty()) {
    Json c = Json::array();
    for (const auto& child : n.children) c.push_back(node_json(child));
    out["children"] = c;
  }
  return out;
}

Json structure_json(const MorphStructure& s) {
  Json out;
  out["k"] = s.k;
  out["l"] = s.l;
  if (!s.shared.empty()) out["shared"] = table_json(s.shared);
  out["root"] = node_json(s.root);
  return out;
}

Json rules_json(const std::vector<Rule>& rules) {
  Json out = Json::array();
  for (const auto& r : rules) out.push_back({{"outcome", r.outcome}, {"target", r.target}});
  return out;
}

Json rationals_json(const VectorEstimate& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_json(x));
  return out;
}

Json header(std::string_view kind) {
  Json out;
  out["kind"] = kind;
  out["schema_version"] = kSchemaVersion;
  return out;
}

Json space_json(const DesignSpace& s) {
  Json out = header("design_space");
  Json criteria = Json::array();
  for (const auto& c : s.criteria) {
    criteria.push_back({{"name", c.name}, {"sense", c.sense == Sense::maximize ? "maximize" : "minimize"}});
  }
  out["criteria"] = criteria;
  Json vertices = Json::array();
  for (const auto& v : s.vertices) {
    Json jv;
    jv["id"] = v.id;
    jv["kind"] = kind_name(v.kind);
    if (const auto* a = std::get_if<AlternativesKind>(&v.kind)) jv["alternatives"] = alternatives_json(a->alternatives);
    if (const auto* h = std::get_if<HierarchyKind>(&v.kind)) jv["structure"] = h->structure;
    if (const auto* t = std::get_if<TwoComponentKind>(&v.kind)) {
      jv["structure"] = t->structure;
      jv["rules"] = t->rules;
    }
    jv["profit"] = rationals_json(v.profit);
    jv["duration"] = rational_json(v.duration);
    if (!v.labels.empty()) jv["labels"] = Json(std::vector<std::string>(v.labels.begin(), v.labels.end()));
    vertices.push_back(std::move(jv));
  }
  out["vertices"] = vertices;
  Json arcs = Json::array();
  for (const auto& a : s.arcs) {
    arcs.push_back({{"tail", a.tail},
                    {"head", a.head},
                    {"weight", a.weight.size() == 1 ? rational_json(a.weight[0]) : rationals_json(a.weight)}});
  }
  out["arcs"] = arcs;
  out["origins"] = s.origins;
  out["goals"] = s.goals;
  if (!s.structures.empty()) {
    Json st = Json::object();
    for (const auto& [name, body] : s.structures) st[name] = structure_json(body);
    out["structures"] = st;
  }
  if (!s.rule_sets.empty()) {
    Json rs = Json::object();
    for (const auto& [name, body] : s.rule_sets) rs[name] = {{"point", body.point}, {"rules", rules_json(body.rules)}};
    out["rule_sets"] = rs;
  }
  if (s.alternative_compatibility) out["alternative_compatibility"] = table_json(*s.alternative_compatibility);
  return out;
}

Json scenario_json(const Scenario& s) {
  Json out = header("scenario");
  out["k"] = s.k;
  out["l"] = s.l;
  Json stages = Json::array();
  for (const auto& st : s.stages) {
    Json js;
    js["id"] = st.id;
    if (!st.priorities.empty()) {
      Json p = Json::object();
      for (const auto& [k, v] : st.priorities) p[k] = v;
      js["priorities"] = p;
    }
    js["structure"] = structure_json(st.structure);
    stages.push_back(std::move(js));
  }
  out["stages"] = stages;
  out["compatibility"] = table_json(s.compatibility);
  return out;
}

Json scheme_json(const TreatmentScheme& s) {
  Json out = header("treatment_scheme");
  out["initial"] = s.initial;
  if (!s.shared.empty()) out["shared"] = table_json(s.shared);
  Json ds = Json::array();
  for (const auto& d : s.design_points) {
    ds.push_back({{"id", d.id}, {"next", d.next}, {"structure", structure_json(d.structure)}});
  }
  out["design_points"] = ds;
  Json as = Json::array();
  for (const auto& a : s.analysis_points) as.push_back({{"id", a.point}, {"rules", rules_json(a.rules)}});
  out["analysis_points"] = as;
  return out;
}

Json edu_reference_json(const EduReference& r) {
  Json out = header("edu_reference");
  out["start"] = r.start;
  out["end"] = r.end;
  out["arc_cap"] = rational_json(r.arc_cap);
  out["time_cap"] = rational_json(r.time_cap);
  Json ts = Json::array();
  for (const auto& t : r.templates) ts.push_back({{"id", t.id}, {"classes", t.classes}});
  out["templates"] = ts;
  Json ps = Json::array();
  for (const auto& p : r.printed) {
    ps.push_back({{"id", p.id},
                  {"template", p.template_id},
                  {"vertices", p.vertices},
                  {"theta", rationals_json(p.theta)},
                  {"tau", rational_json(p.tau)},
                  {"d", rational_json(p.d)}});
  }
  out["printed"] = ps;
  return out;
}

Json startup_reference_json(const StartupReference& r) {
  Json out = header("startup_reference");
  out["stage_sets"] = r.stage_sets;
  out["trajectory"] = r.trajectory;
  out["trajectory_ids"] = r.trajectory_ids;
  return out;
}

}  // namespace

std::string_view document_kind(const Document& doc) {
  static constexpr std::string_view names[] = {"design_space",     "morph_structure", "scenario",
                                               "treatment_scheme", "outcome_script",  "edu_reference",
                                               "startup_reference"};
  return names[doc.index()];
}

Document parse_document(std::string_view text, std::string_view source_view) {
  const std::string source(source_view);
  InJson j;
  try {
    j = InJson::parse(text.begin(), text.end());
  } catch (const InJson::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what);
  }
  Reader r(source);
  r.object(j, "");
  const std::string kind = r.string(r.need(j, "", "kind"), "/kind");
  if (const auto* v = r.maybe(j, "schema_version")) {
    if (r.integer(*v, "/schema_version") != kSchemaVersion) {
      r.fail("/schema_version", "unsupported schema version (expected " + std::to_string(kSchemaVersion) + ")");
    }
  }
  if (kind == "design_space") return read_space(r, j);
  if (kind == "morph_structure") {
    auto s = r.structure(j, "");
    std::vector<std::string> problems;
    check_structure(s, "structure", problems);
    if (!problems.empty()) throw ValidationError(std::move(problems));
    return s;
  }
  if (kind == "scenario") return read_scenario(r, j);
  if (kind == "treatment_scheme") return read_scheme(r, j);
  if (kind == "outcome_script") {
    OutcomeScript s;
    s.outcomes = r.strings(r.need(j, "", "outcomes"), "/outcomes");
    if (const auto* sel = r.maybe(j, "selections")) s.selections = r.strings(*sel, "/selections");
    return s;
  }
  if (kind == "edu_reference") return read_edu_reference(r, j);
  if (kind == "startup_reference") return read_startup_reference(r, j);
  r.fail("/kind", "unknown document kind '" + kind + "'");
}

Document parse_space_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str(), path.string());
}

Json to_json(const Document& doc) {
  return std::visit(
      [](const auto& value) -> Json {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, DesignSpace>) {
          return space_json(value);
        } else if constexpr (std::is_same_v<T, MorphStructure>) {
          Json out = header("morph_structure");
          const Json body = structure_json(value);
          for (const auto& [k, v] : body.items()) out[k] = v;
          return out;
        } else if constexpr (std::is_same_v<T, Scenario>) {
          return scenario_json(value);
        } else if constexpr (std::is_same_v<T, TreatmentScheme>) {
          return scheme_json(value);
        } else if constexpr (std::is_same_v<T, OutcomeScript>) {
          Json out = header("outcome_script");
          out["outcomes"] = value.outcomes;
          if (!value.selections.empty()) out["selections"] = value.selections;
          return out;
        } else if constexpr (std::is_same_v<T, EduReference>) {
          return edu_reference_json(value);
        } else {
          return startup_reference_json(value);
        }
      },
      doc);
}

std::string serialize(const Document& doc) { return to_json(doc).dump(2) + "\n"; }

Json rational_json(const Rational& value) {
  if (value.denominator() == 1) return value.numerator();
  return to_string(value);
}

Json route_json(const Route& route) {
  Json out;
  out["vertices"] = route.vertices;
  out["cost"] = rationals_json(route.cost);
  out["profit"] = rationals_json(route.profit);
  out["duration"] = rational_json(route.duration);
  return out;
}

Json quality_json(const SystemQuality& q) { return {{"w", q.w}, {"n", q.n}}; }

Json composite_json(const CompositeDA& c) {
  Json out;
  out["id"] = c.id;
  out["label"] = c.label();
  out["leaves"] = c.leaf_label();
  out["quality"] = quality_json(c.quality);
  return out;
}

std::string fingerprint(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace trajkit
