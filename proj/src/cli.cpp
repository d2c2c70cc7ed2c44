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

#include "trajkit/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "trajkit/dot.hpp"
#include "trajkit/errors.hpp"
#include "trajkit/hmmd.hpp"
#include "trajkit/io.hpp"
#include "trajkit/presets.hpp"
#include "trajkit/routing.hpp"
#include "trajkit/trajectory.hpp"
#include "trajkit/treatment.hpp"

namespace trajkit::cli {
namespace {

constexpr std::string_view kBundledPrefix = "bundled:";

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::string subcommand;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string fingerprint;
  std::string status = "ok";
  std::vector<Table> tables{};
  std::string raw{};  // set for subcommands that emit their own text (DOT)
  int exit_code = kExitOk;
};

struct Options {
  std::string input;
  std::string out;
  std::string format = "json";
  std::string origin;
  std::string goal;
  std::size_t k = 1;
  std::string budget;
  std::string arc_cap;
  std::string time_cap;
  std::size_t profit_index = 0;
  std::string script;
  std::string reference;
  std::size_t max_visits = 3;
  bool audit = false;
  std::vector<std::string> routes;
};

struct Loaded {
  Document doc;
  std::string text;
  std::string name;
};

Loaded load(const std::string& input, const std::string& fallback) {
  const std::string name = input.empty() ? std::string(kBundledPrefix) + fallback : input;
  if (name == kBundledPrefix) throw InvalidInput("no input given (use --input PATH or bundled:NAME)");
  std::string text;
  if (name.rfind(kBundledPrefix, 0) == 0) {
    text = std::string(bundled_text(std::string_view(name).substr(kBundledPrefix.size())));
  } else {
    std::ifstream in(name, std::ios::binary);
    if (!in) throw InvalidInput("cannot open '" + name + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  Document doc = parse_document(text, name);
  return {std::move(doc), std::move(text), name};
}

template <typename T>
T expect(const Loaded& loaded) {
  if (const auto* v = std::get_if<T>(&loaded.doc)) return *v;
  throw InvalidInput(loaded.name + ": document kind '" + std::string(document_kind(loaded.doc)) +
                     "' is not accepted here");
}

std::optional<Rational> cap(const std::string& text, const char* flag) {
  if (text.empty()) return std::nullopt;
  const Rational value = parse_rational(text);
  if (value < 0) throw InvalidInput(std::string(flag) + " must be non-negative");
  return value;
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? std::string(sep) : "") + items[i];
  return out;
}

std::string vec(const VectorEstimate& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(to_string(x));
  return "(" + join(parts, ",") + ")";
}

std::string quality(const SystemQuality& q) {
  std::vector<std::string> parts;
  for (int x : q.n) parts.push_back(std::to_string(x));
  return "(" + std::to_string(q.w) + ";" + join(parts, ",") + ")";
}

std::string scalar_cost(const Route& r) { return r.cost.size() == 1 ? to_string(r.cost[0]) : vec(r.cost); }

Table route_table(std::string name, const std::vector<Route>& routes) {
  Table t{std::move(name), {"rank", "vertices", "cost", "profit", "duration", "arcs"}, {}};
  for (std::size_t i = 0; i < routes.size(); ++i) {
    const auto& r = routes[i];
    t.rows.push_back({std::to_string(i + 1), join(r.vertices, " "), scalar_cost(r), vec(r.profit),
                      to_string(r.duration), std::to_string(r.arcs())});
  }
  return t;
}

void composite_rows(Table& t, const std::string& owner, const std::vector<CompositeDA>& list) {
  for (const auto& c : list) t.rows.push_back({owner, c.id, c.label(), c.leaf_label(), quality(c.quality)});
}

Table composite_table(std::string name) {
  return Table{std::move(name), {"node", "id", "parts", "leaves", "quality"}, {}};
}

std::string pick(const std::string& given, const std::vector<std::string>& defaults, const char* what) {
  if (!given.empty()) return given;
  if (defaults.empty()) throw InvalidInput(std::string("no ") + what + " given and the space declares none");
  return defaults.front();
}

// Subcommand bodies ------------------------------------------------------

Report solve_sp(const Options& o) {
  const Loaded in = load(o.input, "");
  const auto space = expect<DesignSpace>(in);
  const auto origin = pick(o.origin, space.origins, "origin");
  const auto goal = pick(o.goal, space.goals, "goal");
  Report r{"solve-sp", {{"input", in.name}, {"origin", origin}, {"goal", goal}}, fingerprint(in.text)};
  std::vector<Route> routes;
  if (auto best = shortest_path(space, origin, goal)) routes.push_back(*best);
  r.tables.push_back(route_table("routes", routes));
  if (routes.empty()) {
    r.status = "unreachable";
    r.exit_code = kExitEmpty;
  }
  return r;
}

Report solve_ksp(const Options& o) {
  if (o.k == 0) throw InvalidInput("--k must be at least 1");
  const Loaded in = load(o.input, "");
  const auto space = expect<DesignSpace>(in);
  const auto origin = pick(o.origin, space.origins, "origin");
  const auto goal = pick(o.goal, space.goals, "goal");
  Report r{"solve-ksp",
           {{"input", in.name}, {"origin", origin}, {"goal", goal}, {"k", std::to_string(o.k)}},
           fingerprint(in.text)};
  const auto routes = k_shortest_paths(space, origin, goal, o.k);
  r.tables.push_back(route_table("routes", routes));
  if (routes.empty()) {
    r.status = "unreachable";
    r.exit_code = kExitEmpty;
  }
  return r;
}

Report solve_mc_sp(const Options& o) {
  const Loaded in = load(o.input, "");
  const auto space = expect<DesignSpace>(in);
  const auto origin = pick(o.origin, space.origins, "origin");
  const auto goal = pick(o.goal, space.goals, "goal");
  Report r{"solve-mc-sp", {{"input", in.name}, {"origin", origin}, {"goal", goal}}, fingerprint(in.text)};
  const auto routes = multicriteria_shortest(space, origin, goal);
  r.tables.push_back(route_table("pareto_routes", routes));
  if (routes.empty()) {
    r.status = "unreachable";
    r.exit_code = kExitEmpty;
  }
  return r;
}

Report orienteer(const Options& o) {
  const auto budget = cap(o.budget, "--budget");
  const auto arc_cap = cap(o.arc_cap, "--arc-cap");
  const auto time_cap = cap(o.time_cap, "--time-cap");
  if (!budget && !arc_cap && !time_cap) {
    throw InvalidInput("orienteer needs --budget or at least one of --arc-cap/--time-cap");
  }
  const Loaded in = load(o.input, "");
  OrienteeringInstance inst;
  inst.space = expect<DesignSpace>(in);
  inst.start = pick(o.origin, inst.space.origins, "origin");
  inst.end = pick(o.goal, inst.space.goals, "goal");
  inst.profit_index = o.profit_index;
  Report r{"orienteer", {{"input", in.name}, {"start", inst.start}, {"end", inst.end}}, fingerprint(in.text)};
  if (budget) {
    inst.budget = budget;
    r.parameters.emplace_back("budget", to_string(*budget));
    r.parameters.emplace_back("profit_index", std::to_string(o.profit_index));
    const auto result = orienteering_exact(inst);
    Table t = route_table("route", {result.route});
    t.columns.push_back("score");
    t.rows.front().push_back(to_string(result.score));
    r.tables.push_back(std::move(t));
    return r;
  }
  inst.arc_cap = arc_cap;
  inst.time_cap = time_cap;
  if (arc_cap) r.parameters.emplace_back("arc_cap", to_string(*arc_cap));
  if (time_cap) r.parameters.emplace_back("time_cap", to_string(*time_cap));
  const auto routes = orienteering_multiobjective(inst);
  r.tables.push_back(route_table("pareto_routes", routes));
  if (routes.empty()) {
    r.status = "infeasible";
    r.exit_code = kExitEmpty;
  }
  return r;
}

Report synthesize(const Options& o) {
  const Loaded in = load(o.input, "");
  Report r{"synthesize", {{"input", in.name}}, fingerprint(in.text)};
  Table out = composite_table("composites");
  std::vector<std::string> failed;
  auto add = [&](const std::string& owner, const MorphStructure& s) {
    const auto result = synthesize_hierarchical(s);
    for (const auto& [node, list] : result.per_node) composite_rows(out, owner + "/" + node, list);
    if (result.failed_node) failed.push_back(owner + "/" + *result.failed_node);
  };
  if (const auto* s = std::get_if<MorphStructure>(&in.doc)) {
    add(s->root.id, *s);
  } else if (const auto* space = std::get_if<DesignSpace>(&in.doc)) {
    for (const auto& [id, s] : space->structures) add(id, s);
  } else if (const auto* scheme = std::get_if<TreatmentScheme>(&in.doc)) {
    for (const auto& d : scheme->design_points) {
      MorphStructure s = d.structure;
      s.shared.merge_missing(scheme->shared);
      add(d.id, s);
    }
  } else if (const auto* scenario = std::get_if<Scenario>(&in.doc)) {
    for (const auto& stage : scenario->stages) add(stage.id, stage.structure);
  } else {
    throw InvalidInput(in.name + ": document kind '" + std::string(document_kind(in.doc)) +
                       "' has nothing to synthesize");
  }
  r.tables.push_back(std::move(out));
  if (!failed.empty()) {
    Table t{"empty_nodes", {"node"}, {}};
    for (const auto& f : failed) t.rows.push_back({f});
    r.tables.push_back(std::move(t));
    r.status = "empty";
    r.exit_code = kExitEmpty;
  }
  return r;
}

void stage_tables(Report& r, const Scenario& scenario, const MultistageResult& result) {
  Table sets = composite_table("stage_composites");
  for (std::size_t i = 0; i < result.stages.size(); ++i) {
    composite_rows(sets, scenario.stages[i].id, result.stages[i].composites);
  }
  r.tables.push_back(std::move(sets));
  Table traj{"trajectories", {"rank", "composites", "quality"}, {}};
  for (std::size_t i = 0; i < result.trajectories.size(); ++i) {
    const auto& t = result.trajectories[i];
    traj.rows.push_back({std::to_string(i + 1), join(t.composites, " "), quality(t.quality)});
  }
  r.tables.push_back(std::move(traj));
  Table diag{"diagnostics", {"message"}, {}};
  for (const auto& d : result.diagnostics) diag.rows.push_back({d});
  r.tables.push_back(std::move(diag));
  if (result.trajectories.empty()) {
    r.status = "infeasible";
    r.exit_code = kExitEmpty;
  }
}

Report plan_stages(const Options& o) {
  const Loaded in = load(o.input, "");
  const auto scenario = expect<Scenario>(in);
  Report r{"plan-stages", {{"input", in.name}}, fingerprint(in.text)};
  stage_tables(r, scenario, multistage_synthesize(scenario));
  return r;
}

Report startup(const Options& o) {
  const Loaded in = load(o.input, "startup_scenario");
  const Loaded ref_in = load(o.reference, "startup_reference");
  const auto scenario = expect<Scenario>(in);
  const auto reference = expect<StartupReference>(ref_in);
  Report r{"startup", {{"input", in.name}, {"reference", ref_in.name}}, fingerprint(in.text + ref_in.text)};
  const auto result = startup_pipeline(scenario);
  stage_tables(r, scenario, result);

  Table cmp{"reference_check", {"stage", "printed", "reproduced"}, {}};
  for (std::size_t s = 0; s < reference.stage_sets.size(); ++s) {
    for (const auto& leaves : reference.stage_sets[s]) {
      bool found = false;
      if (s < result.stages.size()) {
        for (const auto& c : result.stages[s].composites) {
          std::set<std::string> got;
          for (const auto& [part, leaf] : c.leaves) got.insert(leaf);
          found = found || got == std::set<std::string>(leaves.begin(), leaves.end());
        }
      }
      const std::string stage = s < scenario.stages.size() ? scenario.stages[s].id : std::to_string(s + 1);
      cmp.rows.push_back({stage, join(leaves, "*"), found ? "yes" : "no"});
    }
  }
  r.tables.push_back(std::move(cmp));
  return r;
}

Report plan_treatment(const Options& o) {
  const Loaded in = load(o.input, "medical_scheme");
  const Loaded script_in = load(o.script, "medical_script");
  const auto scheme = expect<TreatmentScheme>(in);
  const auto script = expect<OutcomeScript>(script_in);
  Report r{"plan-treatment",
           {{"input", in.name}, {"script", script_in.name}, {"max_visits", std::to_string(o.max_visits)}},
           fingerprint(in.text + script_in.text)};
  const auto result = medical_pipeline(scheme, script, o.max_visits);
  Table points = composite_table("design_points");
  for (const auto& [point, list] : result.points) composite_rows(points, point, list);
  r.tables.push_back(std::move(points));
  Table walk{"walk", {"step", "point", "composite", "outcome"}, {}};
  for (std::size_t i = 0; i < result.walk.steps.size(); ++i) {
    const auto& s = result.walk.steps[i];
    walk.rows.push_back({std::to_string(i + 1), s.point, s.composite, s.outcome});
  }
  r.tables.push_back(std::move(walk));
  r.status = std::string(status_name(result.walk.status));
  if (result.walk.status != WalkStatus::completed) {
    r.parameters.emplace_back("detail", result.walk.detail);
    r.exit_code = kExitEmpty;
  }
  return r;
}

std::vector<std::string> edu_route_row(const Route& route) {
  return {join(route.vertices, " "), vec(route.profit), to_string(route.duration), to_string(route.cost.at(0))};
}

Report edu(const Options& o) {
  const Loaded in = load(o.input, "edu_space");
  const Loaded ref_in = load(o.reference, "edu_reference");
  const auto space = expect<DesignSpace>(in);
  const auto reference = expect<EduReference>(ref_in);
  Report r{"edu", {{"input", in.name}, {"reference", ref_in.name}}, fingerprint(in.text + ref_in.text)};

  if (o.audit) {
    r.parameters.emplace_back("audit", "true");
    Table t{"discrepancies", {"route", "field", "printed", "recomputed"}, {}};
    for (const auto& d : audit_printed_routes(space, reference)) {
      t.rows.push_back({d.route_id, d.field, to_string(d.printed), to_string(d.recomputed)});
    }
    r.tables.push_back(std::move(t));
    return r;
  }

  const auto result = edu_pipeline(space, reference, cap(o.arc_cap, "--arc-cap"), cap(o.time_cap, "--time-cap"));
  r.parameters.emplace_back("arc_cap", to_string(result.arc_cap));
  r.parameters.emplace_back("time_cap", to_string(result.time_cap));
  Table templates{"templates", {"template", "routes", "min_d", "ties"}, {}};
  Table ties{"ties", {"template", "theta_rank", "vertices", "theta", "tau", "d"}, {}};
  for (const auto& t : result.templates) {
    templates.rows.push_back({t.id, std::to_string(t.route_count), t.min_d ? to_string(*t.min_d) : "-",
                              std::to_string(t.ties.size())});
    for (std::size_t i = 0; i < t.ties.size(); ++i) {
      auto row = edu_route_row(t.ties[i]);
      row.insert(row.begin(), {t.id, std::to_string(t.theta_rank[i])});
      ties.rows.push_back(std::move(row));
    }
  }
  Table final_set{"final_set", {"vertices", "theta", "tau", "d"}, {}};
  for (const auto& route : result.final_set) final_set.rows.push_back(edu_route_row(route));
  r.tables.push_back(std::move(templates));
  r.tables.push_back(std::move(ties));
  r.tables.push_back(std::move(final_set));
  if (result.final_set.empty()) {
    r.status = "infeasible";
    r.exit_code = kExitEmpty;
  }
  return r;
}

std::vector<std::string> split_route(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

Report export_dot_cmd(const Options& o) {
  const Loaded in = load(o.input, "");
  Report r{"export-dot", {{"input", in.name}}, fingerprint(in.text)};
  if (const auto* space = std::get_if<DesignSpace>(&in.doc)) {
    std::vector<Route> routes;
    for (const auto& text : o.routes) routes.push_back(make_route(split_route(text), *space));
    r.raw = export_dot(*space, routes);
  } else if (const auto* scheme = std::get_if<TreatmentScheme>(&in.doc)) {
    if (!o.routes.empty()) throw InvalidInput("--route applies to design spaces only");
    r.raw = export_dot(*scheme);
  } else {
    throw InvalidInput(in.name + ": export-dot accepts design_space or treatment_scheme documents");
  }
  return r;
}

// Rendering --------------------------------------------------------------

std::string render_json(const Report& r) {
  Json doc;
  doc["subcommand"] = r.subcommand;
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  doc["parameters"] = params;
  doc["fingerprint"] = r.fingerprint;
  doc["status"] = r.status;
  Json tables = Json::array();
  for (const auto& t : r.tables) {
    Json rows = Json::array();
    for (const auto& row : t.rows) {
      Json obj = Json::object();
      for (std::size_t c = 0; c < t.columns.size(); ++c) obj[t.columns[c]] = c < row.size() ? row[c] : "";
      rows.push_back(std::move(obj));
    }
    tables.push_back({{"name", t.name}, {"columns", t.columns}, {"rows", std::move(rows)}});
  }
  doc["tables"] = std::move(tables);
  return doc.dump(2) + "\n";
}

std::string render_tsv(const Report& r) {
  std::ostringstream out;
  out << "# subcommand\t" << r.subcommand << "\n";
  for (const auto& [k, v] : r.parameters) out << "# parameter\t" << k << "\t" << v << "\n";
  out << "# fingerprint\t" << r.fingerprint << "\n";
  out << "# status\t" << r.status << "\n";
  for (const auto& t : r.tables) {
    out << "\n[" << t.name << "]\n" << join(t.columns, "\t") << "\n";
    for (const auto& row : t.rows) out << join(row, "\t") << "\n";
  }
  return out.str();
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--input", o.input, "Input document path, or bundled:NAME");
  sub->add_option("--out", o.out, "Write the report to this file");
  sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "tsv"}));
}

void add_endpoints(CLI::App* sub, Options& o) {
  sub->add_option("--origin", o.origin, "Origin vertex (default: first declared origin)");
  sub->add_option("--goal", o.goal, "Goal vertex (default: first declared goal)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Route and trajectory solvers over design spaces", "trajkit"};
  app.require_subcommand(1);
  std::function<Report(const Options&)> handler;
  auto command = [&](const char* name, const char* help, Report (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, o);
    sub->callback([&handler, fn] { handler = fn; });
    return sub;
  };

  auto* sp = command("solve-sp", "Shortest path", solve_sp);
  add_endpoints(sp, o);
  auto* ksp = command("solve-ksp", "k shortest simple paths", solve_ksp);
  add_endpoints(ksp, o);
  ksp->add_option("--k", o.k, "Number of paths")->required();
  auto* mc = command("solve-mc-sp", "Pareto-optimal paths under vector weights", solve_mc_sp);
  add_endpoints(mc, o);
  auto* ori = command("orienteer", "Orienteering (exact with --budget, multiobjective with caps)", orienteer);
  add_endpoints(ori, o);
  auto* budget = ori->add_option("--budget", o.budget, "Total arc-cost budget");
  auto* arc_cap = ori->add_option("--arc-cap", o.arc_cap, "Cap on every single arc cost");
  auto* time_cap = ori->add_option("--time-cap", o.time_cap, "Cap on summed durations");
  budget->excludes(arc_cap)->excludes(time_cap);
  ori->add_option("--profit-index", o.profit_index, "Criterion used as profit");
  command("synthesize", "Hierarchical morphological synthesis", synthesize);
  command("plan-stages", "Multistage trajectory synthesis", plan_stages);
  auto* treat = command("plan-treatment", "Treatment planning walk", plan_treatment);
  treat->add_option("--script", o.script, "Outcome script path, or bundled:NAME");
  treat->add_option("--max-visits", o.max_visits, "Visits per point before truncation");
  auto* edu_cmd = command("edu", "Educational trajectory pipeline", edu);
  edu_cmd->add_option("--reference", o.reference, "Reference document (templates and printed routes)");
  edu_cmd->add_flag("--audit", o.audit, "Only report printed-route discrepancies");
  edu_cmd->add_option("--arc-cap", o.arc_cap, "Cap on every single arc complexity");
  edu_cmd->add_option("--time-cap", o.time_cap, "Cap on total time");
  auto* st = command("startup", "Start-up multistage scenario", startup);
  st->add_option("--reference", o.reference, "Printed stage sets to compare against");
  auto* dot = command("export-dot", "Graphviz export of a space or scheme", export_dot_cmd);
  dot->add_option("--route", o.routes, "Route to highlight, comma separated (repeatable)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  Report report;
  try {
    report = handler(o);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    for (const auto& v : e.violations()) err << "  " << v << "\n";
    return kExitInput;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InvalidRoute& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    // Infeasible, NoFeasibleRoute, EmptySynthesis, UnknownOutcome, ...
    err << "no result: " << e.what() << "\n";
    return kExitEmpty;
  }

  const std::string text = !report.raw.empty() ? report.raw
                           : o.format == "tsv" ? render_tsv(report)
                                               : render_json(report);
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file || !(file << text)) {
      err << "error: cannot write '" << o.out << "'\n";
      return kExitInput;
    }
  }
  return report.exit_code;
}

}  // namespace trajkit::cli
