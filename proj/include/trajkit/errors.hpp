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

#include <stdexcept>
#include <string>
#include <vector>

namespace trajkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition failures: mismatched vector lengths, unknown ids, bad caps.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A vertex sequence that is not a path of the space.
class InvalidRoute : public Error {
 public:
  using Error::Error;
};

/// No route satisfies the budget/cap constraints.
class Infeasible : public Error {
 public:
  using Error::Error;
};

class NoFeasibleRoute : public Error {
 public:
  using Error::Error;
};

/// Strategy 1 could not pick mutually compatible alternatives along the route.
class IncompatibleResolution : public Error {
 public:
  using Error::Error;
};

class EmptySynthesis : public Error {
 public:
  EmptySynthesis(std::string node, const std::string& what)
      : Error(what), node_(std::move(node)) {}
  const std::string& node() const noexcept { return node_; }

 private:
  std::string node_;
};

class UnknownOutcome : public Error {
 public:
  UnknownOutcome(std::string point, std::string label)
      : Error("no rule at analysis point '" + point + "' for outcome '" + label + "'"),
        point_(std::move(point)),
        label_(std::move(label)) {}
  const std::string& point() const noexcept { return point_; }
  const std::string& label() const noexcept { return label_; }

 private:
  std::string point_;
  std::string label_;
};

/// Malformed document. The message carries the location.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed document whose content breaks type invariants.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

}  // namespace trajkit
