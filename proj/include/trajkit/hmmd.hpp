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

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trajkit/ids.hpp"
#include "trajkit/morph.hpp"

namespace trajkit {

/// Compatibility between two item ids of different parts.
using CompatibilityLookup = std::function<int(std::string_view, std::string_view)>;

/// N(S) of one pick per part. w is the minimum over all cross pairs (l when
/// there is a single part); n counts picks per priority level 1..k.
/// Throws InvalidInput for priorities outside 1..k.
SystemQuality system_quality(std::span<const DesignAlternative> chosen,
                             const CompatibilityLookup& compatibility, int k, int l);

SystemQuality system_quality(std::span<const DesignAlternative> chosen,
                             const CompatibilityTable& table, int k, int l);

/// The candidate items of one part.
struct PartItems {
  std::string part;
  std::vector<DesignAlternative> items;

  bool operator==(const PartItems&) const = default;
};

/// Cross product of the parts without zero-compatibility picks, reduced to
/// its quality_dominates-Pareto set. Parts and items are enumerated in id
/// order; the survivors are named prefix + 1-based index and their `leaves`
/// equal their `parts`.
std::vector<CompositeDA> synthesize_part(std::span<const PartItems> parts,
                                         const CompatibilityLookup& compatibility, int k, int l,
                                         std::string_view prefix);

std::vector<CompositeDA> synthesize_part(std::span<const PartItems> parts,
                                         const CompatibilityTable& table, int k, int l,
                                         std::string_view prefix);

struct SynthesisResult {
  std::vector<CompositeDA> composites;                         // root output
  std::map<std::string, std::vector<CompositeDA>, IdLess> per_node;  // every node
  std::optional<std::string> failed_node;  // deepest node that produced nothing

  bool operator==(const SynthesisResult&) const = default;
};

/// Bottom-up synthesis. A leaf passes its alternatives through as
/// single-part composites; an internal node combines the outputs of its
/// direct children, re-pricing each child composite with the node's
/// `priorities` entry (1 when absent). Pair estimates come from the node's
/// table, then the structure's shared table, then the node default.
/// Stops at the first node with an empty result.
SynthesisResult synthesize_hierarchical(const MorphStructure& structure);

}  // namespace trajkit
