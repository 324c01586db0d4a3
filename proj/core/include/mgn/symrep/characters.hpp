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

#ifndef MGN_SYMREP_CHARACTERS_HPP_
#define MGN_SYMREP_CHARACTERS_HPP_

#include "mgn/corekit/rational.hpp"
#include "mgn/symrep/partition.hpp"
#include "mgn/symrep/representation.hpp"

namespace mgn::symrep {

// chi^lambda at a permutation of cycle type rho, by Murnaghan-Nakayama rim
// hook removal. Zero when the sizes differ.
Integer character(const Partition& lambda, const Partition& rho);

// Ind(V_lambda (x) V_mu) computed from inner products of characters:
// mult(nu) = sum_{rho1, rho2} chi^lambda(rho1) chi^mu(rho2) chi^nu(rho1 u rho2) / (z_rho1 z_rho2).
// Intended for small sizes only.
Decomposition character_induct(const Partition& lambda, const Partition& mu);

struct LengthAdditivityVerdict {
  bool pass = false;
  int pairs_checked = 0;
  int lr_mismatches = 0;     // LR product differs from the character oracle
  int length_failures = 0;   // oracle length differs from l(lambda) + l(mu)
};

// Over all lambda |- n1, mu |- n2. Throws std::invalid_argument unless
// n1, n2 >= 1 and n1 + n2 <= max_total.
LengthAdditivityVerdict verify_length_additivity(int n1, int n2, int max_total = 9);

}  // namespace mgn::symrep

#endif  // MGN_SYMREP_CHARACTERS_HPP_
