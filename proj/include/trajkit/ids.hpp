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

#include <string>
#include <string_view>

namespace trajkit {

/// Separator between a base vertex id and its alternative index in
/// extended digraphs ("m2^3" is alternative 3 of vertex "m2").
inline constexpr char kAltSeparator = '^';

/// Natural ordering for identifiers: digit runs compare numerically
/// ("b2" < "b10") and the alternative separator sorts before every other
/// character so that extended ids order like their base ids.
/// This is the order used by every deterministic tie-break.
bool id_less(std::string_view a, std::string_view b);

struct IdLess {
  using is_transparent = void;
  bool operator()(std::string_view a, std::string_view b) const { return id_less(a, b); }
};

}  // namespace trajkit
