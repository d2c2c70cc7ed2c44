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

#include "trajkit/ids.hpp"

#include <cctype>

namespace trajkit {
namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

int rank(char c) { return c == kAltSeparator ? -1 : static_cast<unsigned char>(c); }

std::string_view strip_zeros(std::string_view s) {
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return s;
}

}  // namespace

bool id_less(std::string_view a, std::string_view b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ie = i;
      while (ie < a.size() && is_digit(a[ie])) ++ie;
      std::size_t je = j;
      while (je < b.size() && is_digit(b[je])) ++je;
      const auto ra = strip_zeros(a.substr(i, ie - i));
      const auto rb = strip_zeros(b.substr(j, je - j));
      if (ra.size() != rb.size()) return ra.size() < rb.size();
      if (ra != rb) return ra < rb;
      i = ie;
      j = je;
      continue;
    }
    if (rank(a[i]) != rank(b[j])) return rank(a[i]) < rank(b[j]);
    ++i;
    ++j;
  }
  const auto rest_a = a.size() - i;
  const auto rest_b = b.size() - j;
  if (rest_a != rest_b) return rest_a < rest_b;
  return a < b;
}

}  // namespace trajkit
