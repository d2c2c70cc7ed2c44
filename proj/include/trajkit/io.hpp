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

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "trajkit/errors.hpp"
#include "trajkit/model.hpp"
#include "trajkit/presets.hpp"
#include "trajkit/trajectory.hpp"
#include "trajkit/treatment.hpp"

namespace trajkit {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

/// A parsed document; the JSON "kind" field selects the alternative.
using Document = std::variant<DesignSpace, MorphStructure, Scenario, TreatmentScheme, OutcomeScript,
                              EduReference, StartupReference>;

std::string_view document_kind(const Document& doc);

/// Throws ParseError (with source, line/column or field path) for malformed
/// text and ValidationError listing every invariant violation.
Document parse_document(std::string_view text, std::string_view source = "<input>");
Document parse_space_file(const std::filesystem::path& path);

/// Parses and requires a particular kind.
template <typename T>
T parse_as(std::string_view text, std::string_view source = "<input>") {
  Document doc = parse_document(text, source);
  if (auto* value = std::get_if<T>(&doc)) return std::move(*value);
  throw ParseError(std::string(source) + ": unexpected document kind '" +
                   std::string(document_kind(doc)) + "'");
}

Json to_json(const Document& doc);
/// Two-space indented JSON with a trailing newline.
std::string serialize(const Document& doc);

Json rational_json(const Rational& value);
Json route_json(const Route& route);
Json composite_json(const CompositeDA& composite);
Json quality_json(const SystemQuality& quality);

/// FNV-1a 64-bit hash as 16 hex digits.
std::string fingerprint(std::string_view bytes);

}  // namespace trajkit
