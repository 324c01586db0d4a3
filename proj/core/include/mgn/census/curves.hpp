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

#ifndef MGN_CENSUS_CURVES_HPP_
#define MGN_CENSUS_CURVES_HPP_

#include <array>
#include <cstdint>

#include "mgn/corekit/prime_field.hpp"

namespace mgn::census {

// y^2 = x^3 + a x + b over F_p, p >= 5.
struct WeierstrassShort {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
};

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6; valid in every characteristic.
struct WeierstrassLong {
  std::uint32_t a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
};

// F(X, Z) = sum_i c[i] X^i Z^(6-i), defining y^2 = F(x, 1) over odd p.
struct BinarySextic {
  std::array<std::uint32_t, 7> c{};
};

// 4a^3 + 27b^2 != 0. Throws std::invalid_argument for p < 5.
bool is_nonsingular(const WeierstrassShort& e, const PrimeField& f);
// Standard discriminant from b2, b4, b6, b8.
std::uint32_t discriminant(const WeierstrassLong& e, const PrimeField& f);
inline bool is_nonsingular(const WeierstrassLong& e, const PrimeField& f) {
  return discriminant(e, f) != 0;
}

// #E(F_p) including the point at infinity. Throws on a singular curve.
std::uint64_t count_points_g1(const WeierstrassShort& e, const PrimeField& f);
std::uint64_t count_points_g1(const WeierstrassLong& e, const PrimeField& f);

// Squarefree as a binary form: F(x, 1) squarefree and at most a simple root
// at infinity (c6 and c5 not both zero).
bool is_squarefree(const BinarySextic& s, const PrimeField& f);

// sum_x (1 + chi(F(x,1))) plus 1 + chi(c6) if c6 != 0, else 1.
// Throws for p = 2 or a non-squarefree form.
std::uint64_t count_points_g2(const BinarySextic& s, const PrimeField& f);

}  // namespace mgn::census

#endif  // MGN_CENSUS_CURVES_HPP_
