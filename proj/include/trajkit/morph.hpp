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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace trajkit {

/// One option for a system part. Priority 1 is the best level.
struct DesignAlternative {
  std::string id;
  int priority = 1;

  bool operator==(const DesignAlternative&) const = default;
};

/// Symmetric ordinal compatibility over pairs of alternative ids.
/// Pairs are stored once, keyed by (smaller, larger) id.
class CompatibilityTable {
 public:
  /// Returns false (and leaves the table untouched) when the pair is already
  /// present with a different value.
  bool insert(const std::string& a, const std::string& b, int value);
  std::optional<int> find(std::string_view a, std::string_view b) const;
  int get(std::string_view a, std::string_view b, int fallback) const {
    return find(a, b).value_or(fallback);
  }
  /// Entries of `other` fill pairs this table does not define.
  void merge_missing(const CompatibilityTable& other);

  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::map<std::pair<std::string, std::string>, int>& entries() const noexcept {
    return entries_;
  }

  bool operator==(const CompatibilityTable&) const = default;

 private:
  std::map<std::pair<std::string, std::string>, int> entries_;
};

/// Node of a morphological tree. Leaves carry alternatives, internal nodes
/// compose their children and own the compatibility estimates between the
/// children's items (leaf alternatives or child composites).
struct MorphNode {
  std::string id;
  std::vector<DesignAlternative> alternatives;
  std::vector<MorphNode> children;
  CompatibilityTable compatibility;
  // Value for pairs missing from `compatibility`; 0 forbids them.
  int default_compatibility = 0;
  // Priorities of child composites when they are re-priced at this node.
  std::map<std::string, int> priorities;
  // Composites emitted by this node are named prefix + 1-based index.
  std::string composite_prefix;

  bool is_leaf() const noexcept { return children.empty(); }
  const std::string& prefix() const noexcept {
    return composite_prefix.empty() ? id : composite_prefix;
  }

  bool operator==(const MorphNode&) const = default;
};

struct MorphStructure {
  MorphNode root;
  int k = 3;  // priority levels 1..k
  int l = 3;  // compatibility levels 0..l
  // Estimates shared by every node (looked up after the node's own table).
  CompatibilityTable shared;

  bool operator==(const MorphStructure&) const = default;
};

/// N(S) = (w; n1..nk).
struct SystemQuality {
  int w = 0;
  std::vector<int> n;

  bool operator==(const SystemQuality&) const = default;
};

/// (part id, chosen item id)
using PartChoice = std::pair<std::string, std::string>;

struct CompositeDA {
  std::string id;
  std::vector<PartChoice> parts;   // direct children, sorted by part id
  std::vector<PartChoice> leaves;  // flattened to leaf alternatives
  SystemQuality quality;

  /// "J1*M1" over direct parts.
  std::string label() const;
  /// "J1*M1*P0*H2*G1" over leaves.
  std::string leaf_label() const;

  bool operator==(const CompositeDA&) const = default;
};

}  // namespace trajkit
