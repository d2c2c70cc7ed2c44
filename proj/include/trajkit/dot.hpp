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

#include <span>
#include <string>

#include "trajkit/model.hpp"
#include "trajkit/treatment.hpp"

namespace trajkit {

/// Graphviz text. Vertex kinds get distinct shapes, origins and goals are
/// bold, and the arcs of each highlighted route are colored. Output is a
/// pure function of the input.
std::string export_dot(const DesignSpace& space, std::span<const Route> highlight = {});

/// Design points, analysis points (labelled rule arcs) and End.
std::string export_dot(const TreatmentScheme& scheme);

}  // namespace trajkit
