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

#include "trajkit/hmmd.hpp"

#include <algorithm>
#include <set>

#include "trajkit/errors.hpp"
#include "trajkit/model.hpp"

namespace trajkit {

SystemQuality system_quality(std::span<const DesignAlternative> chosen,
                             const CompatibilityLookup& compatibility, int k, int l) {
  if (k < 1 || l < 1) throw InvalidInput("system_quality: scales must be at least 1");
  SystemQuality q{l, std::vector<int>(k, 0)};
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    const int r = chosen[i].priority;
    if (r < 1 || r > k) {
      throw InvalidInput("priority " + std::to_string(r) + " of '" + chosen[i].id +
                         "' is outside 1.." + std::to_string(k));
    }
    ++q.n[r - 1];
    for (std::size_t j = i + 1; j < chosen.size(); ++j) {
      q.w = std::min(q.w, compatibility(chosen[i].id, chosen[j].id));
    }
  }
  return q;
}

SystemQuality system_quality(std::span<const DesignAlternative> chosen,
                             const CompatibilityTable& table, int k, int l) {
  return system_quality(
      chosen, [&](std::string_view a, std::string_view b) { return table.get(a, b, 0); }, k, l);
}

namespace {

std::vector<PartItems> sorted_parts(std::span<const PartItems> parts) {
  std::vector<PartItems> out(parts.begin(), parts.end());
  std::sort(out.begin(), out.end(),
            [](const PartItems& a, const PartItems& b) { return id_less(a.part, b.part); });
  for (auto& p : out) {
    std::sort(p.items.begin(), p.items.end(),
              [](const DesignAlternative& a, const DesignAlternative& b) { return id_less(a.id, b.id); });
  }
  return out;
}

}  // namespace

std::vector<CompositeDA> synthesize_part(std::span<const PartItems> parts_in,
                                         const CompatibilityLookup& compatibility, int k, int l,
                                         std::string_view prefix) {
  const auto parts = sorted_parts(parts_in);
  if (parts.empty()) return {};
  for (const auto& p : parts) {
    if (p.items.empty()) return {};
  }

  std::vector<CompositeDA> feasible;
  std::vector<std::size_t> pick(parts.size(), 0);
  std::vector<DesignAlternative> chosen(parts.size());
  for (;;) {
    for (std::size_t i = 0; i < parts.size(); ++i) chosen[i] = parts[i].items[pick[i]];
    SystemQuality q = system_quality(chosen, compatibility, k, l);
    if (q.w > 0) {
      CompositeDA c;
      for (std::size_t i = 0; i < parts.size(); ++i) c.parts.emplace_back(parts[i].part, chosen[i].id);
      c.leaves = c.parts;
      c.quality = std::move(q);
      feasible.push_back(std::move(c));
    }
    std::size_t i = parts.size();
    while (i > 0) {
      --i;
      if (++pick[i] < parts[i].items.size()) break;
      pick[i] = 0;
      if (i == 0) goto done;
    }
  }
done:
  // Few distinct qualities exist, so dominance is decided per quality.
  std::vector<SystemQuality> distinct;
  for (const auto& c : feasible) {
    if (std::find(distinct.begin(), distinct.end(), c.quality) == distinct.end()) {
      distinct.push_back(c.quality);
    }
  }
  std::vector<SystemQuality> kept;
  for (const auto& q : distinct) {
    const bool dominated = std::any_of(distinct.begin(), distinct.end(), [&](const SystemQuality& o) {
      return quality_dominates(o, q);
    });
    if (!dominated) kept.push_back(q);
  }

  std::vector<CompositeDA> out;
  for (auto& c : feasible) {
    if (std::find(kept.begin(), kept.end(), c.quality) == kept.end()) continue;
    c.id = std::string(prefix) + std::to_string(out.size() + 1);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CompositeDA> synthesize_part(std::span<const PartItems> parts,
                                         const CompatibilityTable& table, int k, int l,
                                         std::string_view prefix) {
  return synthesize_part(
      parts, [&](std::string_view a, std::string_view b) { return table.get(a, b, 0); }, k, l, prefix);
}

namespace {

struct Synthesizer {
  const MorphStructure& structure;
  SynthesisResult& result;

  // Returns false once some node came out empty.
  bool visit(const MorphNode& node) {
    if (node.is_leaf()) {
      if (node.alternatives.empty()) throw InvalidInput("leaf '" + node.id + "' has no alternatives");
      auto items = node.alternatives;
      std::sort(items.begin(), items.end(),
                [](const DesignAlternative& a, const DesignAlternative& b) { return id_less(a.id, b.id); });
      std::vector<CompositeDA> out;
      for (const auto& da : items) {
        const DesignAlternative one[] = {da};
        CompositeDA c{da.id, {{node.id, da.id}}, {{node.id, da.id}},
                      system_quality(one, CompatibilityTable{}, structure.k, structure.l)};
        out.push_back(std::move(c));
      }
      result.per_node[node.id] = std::move(out);
      return true;
    }

    std::vector<PartItems> parts;
    for (const auto& child : node.children) {
      if (!visit(child)) return false;
      PartItems p{child.id, {}};
      if (child.is_leaf()) {
        p.items = child.alternatives;
      } else {
        for (const auto& c : result.per_node.at(child.id)) {
          auto it = node.priorities.find(c.id);
          p.items.push_back({c.id, it == node.priorities.end() ? 1 : it->second});
        }
      }
      parts.push_back(std::move(p));
    }

    auto lookup = [&](std::string_view a, std::string_view b) {
      if (auto v = node.compatibility.find(a, b)) return *v;
      if (auto v = structure.shared.find(a, b)) return *v;
      return node.default_compatibility;
    };
    auto out = synthesize_part(parts, lookup, structure.k, structure.l, node.prefix());
    for (auto& c : out) {
      c.leaves.clear();
      for (const auto& [part, item] : c.parts) {
        const auto& below = result.per_node.at(part);
        auto it = std::find_if(below.begin(), below.end(),
                               [&](const CompositeDA& x) { return x.id == item; });
        c.leaves.insert(c.leaves.end(), it->leaves.begin(), it->leaves.end());
      }
    }
    const bool ok = !out.empty();
    result.per_node[node.id] = std::move(out);
    if (!ok) result.failed_node = node.id;
    return ok;
  }
};

void check_unique_ids(const MorphNode& node, std::set<std::string>& seen) {
  if (!seen.insert(node.id).second) throw InvalidInput("duplicate morphological node id '" + node.id + "'");
  for (const auto& c : node.children) check_unique_ids(c, seen);
}

}  // namespace

SynthesisResult synthesize_hierarchical(const MorphStructure& structure) {
  std::set<std::string> seen;
  check_unique_ids(structure.root, seen);
  SynthesisResult result;
  Synthesizer s{structure, result};
  if (s.visit(structure.root)) result.composites = result.per_node.at(structure.root.id);
  return result;
}

}  // namespace trajkit
