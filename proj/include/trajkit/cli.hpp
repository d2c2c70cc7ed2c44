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

#include <iosfwd>
#include <string>
#include <vector>

namespace trajkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitEmpty = 1;
inline constexpr int kExitInput = 2;

/// Runs one subcommand. `args` excludes the program name. The report goes to
/// `out` (or the --out file), diagnostics to `err`. Returns 0 on success, 1
/// for an infeasible or empty result and 2 for any input or usage error.
/// `--input bundled:NAME` reads a bundled dataset instead of a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trajkit::cli
