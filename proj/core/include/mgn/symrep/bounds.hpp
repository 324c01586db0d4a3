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

#ifndef MGN_SYMREP_BOUNDS_HPP_
#define MGN_SYMREP_BOUNDS_HPP_

#include <string>

namespace mgn::symrep {

enum class ModuliSpace { kStable, kCompactType, kRationalTails };

std::string to_string(ModuliSpace s);
// Accepts "stable", "compact-type", "rational-tails".
ModuliSpace parse_space(const std::string& name);

// Degree of the socle of the tautological ring: 3g-3+n, 2g-3+n, g-2+n.
int socle_degree(int g, int n, ModuliSpace s);

// Upper bound on the length of the S_n-representation R^k:
//   stable          min(k+1, 3g-2+n-k, floor((2g-1+n)/2))
//   compact type    min(k+1, 2g-2+n-k)
//   rational tails  min(k+1, g-1+n-k)
// clamped at zero. Throws std::invalid_argument for unstable (g, n), g < 0,
// or k outside [0, 3g-3+n].
int theorem_bounds(int g, int n, int k, ModuliSpace s);

}  // namespace mgn::symrep

#endif  // MGN_SYMREP_BOUNDS_HPP_
