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

#ifndef MGN_TAUTCALC_INTERSECTION_HPP_
#define MGN_TAUTCALC_INTERSECTION_HPP_

#include <vector>

#include "mgn/corekit/rational.hpp"

namespace mgn::tautcalc {

// <tau_{a_1} ... tau_{a_n}>_g = integral of psi_1^{a_1} ... psi_n^{a_n} over
// the moduli space of stable curves of genus g with n markings. Evaluated
// by the Dijkgraaf-Verlinde-Verlinde recursion from <tau_0^3>_0 = 1 and
// <tau_1>_1 = 1/24, memoized process-wide (thread-safe).
// Throws std::invalid_argument if n == 0, some a_i < 0, (g, n) is unstable,
// or sum a_i != 3g - 3 + n.
Rational psi_integral(int g, const std::vector<int>& a);

// Integral of psi^a kappa_{b_1} ... kappa_{b_r} over M_{g,n} bar, n = a.size(),
// by trading kappa classes for extra markings:
//   sum over set partitions P of {1..r} of (-1)^{r-|P|} <tau_a prod_{B in P} tau_{b_B + 1}>_g
// with b_B the sum of b_j over the block. Throws std::invalid_argument on a
// grading violation or negative indices.
Rational kappa_psi_integral(int g, const std::vector<int>& a, const std::vector<int>& b);

// (n-3)! / prod a_i!: the genus-zero closed form. Requires sum a_i = n - 3.
Integer genus0_multinomial(const std::vector<int>& a);

// |B_{2g}|/(2g) * |B_{2g-2}|/(2g-2) * 1/(2g-2)!. Requires g >= 2.
Rational hodge_lambda_cubed(int g);

}  // namespace mgn::tautcalc

#endif  // MGN_TAUTCALC_INTERSECTION_HPP_
