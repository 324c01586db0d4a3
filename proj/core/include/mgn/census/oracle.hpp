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

#ifndef MGN_CENSUS_ORACLE_HPP_
#define MGN_CENSUS_ORACLE_HPP_

#include <cstdint>

#include "mgn/corekit/rational.hpp"

namespace mgn::census {

struct OrbitCount {
  Rational groupoid;          // sum over isomorphism classes of 1 / #Aut
  std::uint64_t classes = 0;  // number of isomorphism classes
};

// Genus-2 curves y^2 = F(X, Z) over F_p up to isomorphism, found by walking
// the orbits of (A, e) : F -> e^2 F(A (X, Z)) on squarefree sextics. The
// automorphism group of a curve is its stabilizer modulo the p - 1 pairs
// (t I, t^3) that act trivially. Exhaustive; requires odd p <= 7.
OrbitCount g2_orbit_count(std::uint32_t p);

}  // namespace mgn::census

#endif  // MGN_CENSUS_ORACLE_HPP_
