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

#include "trajkit/morph.hpp"

#include "trajkit/errors.hpp"

namespace trajkit {
namespace {

std::pair<std::string, std::string> key(std::string_view a, std::string_view b) {
  if (b < a) std::swap(a, b);
  return {std::string(a), std::string(b)};
}

std::string join(const std::vector<PartChoice>& choices) {
  std::string out;
  for (const auto& [part, item] : choices) {
    if (!out.empty()) out += '*';
    out += item;
  }
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : Error([&] {
        std::string msg = "validation failed:";
        for (const auto& v : violations) msg += "\n  " + v;
        return msg;
      }()),
      violations_(std::move(violations)) {}

bool CompatibilityTable::insert(const std::string& a, const std::string& b, int value) {
  auto [it, inserted] = entries_.emplace(key(a, b), value);
  return inserted || it->second == value;
}

std::optional<int> CompatibilityTable::find(std::string_view a, std::string_view b) const {
  auto it = entries_.find(key(a, b));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void CompatibilityTable::merge_missing(const CompatibilityTable& other) {
  for (const auto& [k, v] : other.entries_) entries_.emplace(k, v);
}

std::string CompositeDA::label() const { return join(parts); }

std::string CompositeDA::leaf_label() const { return join(leaves); }

}  // namespace trajkit
