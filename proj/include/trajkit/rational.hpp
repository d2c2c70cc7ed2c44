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
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace trajkit {

/// Exact arithmetic for weights, profits and durations. Dominance checks
/// never touch binary floating point.
using Rational = boost::rational<std::int64_t>;

/// Accepts "7", "-3", "3/4" and finite decimals such as "2.25".
/// Throws InvalidInput on anything else.
Rational parse_rational(std::string_view text);

/// "7" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

}  // namespace trajkit
