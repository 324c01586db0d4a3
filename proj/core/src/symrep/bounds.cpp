// Copyright 2026 The mgn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mgn/symrep/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace mgn::symrep {

std::string to_string(ModuliSpace s) {
  switch (s) {
    case ModuliSpace::kStable: return "stable";
    case ModuliSpace::kCompactType: return "compact-type";
    case ModuliSpace::kRationalTails: return "rational-tails";
  }
  return "?";
}

ModuliSpace parse_space(const std::string& name) {
  if (name == "stable") return ModuliSpace::kStable;
  if (name == "compact-type") return ModuliSpace::kCompactType;
  if (name == "rational-tails") return ModuliSpace::kRationalTails;
  throw std::invalid_argument("unknown space '" + name + "'");
}

int socle_degree(int g, int n, ModuliSpace s) {
  switch (s) {
    case ModuliSpace::kStable: return 3 * g - 3 + n;
    case ModuliSpace::kCompactType: return 2 * g - 3 + n;
    case ModuliSpace::kRationalTails: return g - 2 + n;
  }
  return 0;
}

int theorem_bounds(int g, int n, int k, ModuliSpace s) {
  if (g < 0 || n < 0 || 2 * g - 2 + n <= 0) throw std::invalid_argument("theorem_bounds: unstable (g, n)");
  if (k < 0 || k > 3 * g - 3 + n) throw std::invalid_argument("theorem_bounds: degree out of range");
  int b = 0;
  switch (s) {
    case ModuliSpace::kStable:
      b = std::min({k + 1, 3 * g - 2 + n - k, (2 * g - 1 + n) / 2});
      break;
    case ModuliSpace::kCompactType:
      b = std::min(k + 1, 2 * g - 2 + n - k);
      break;
    case ModuliSpace::kRationalTails:
      b = std::min(k + 1, g - 1 + n - k);
      break;
  }
  return std::max(b, 0);
}

}  // namespace mgn::symrep
