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

#ifndef MGN_SYMREP_REPRESENTATION_HPP_
#define MGN_SYMREP_REPRESENTATION_HPP_

#include <map>
#include <string>

#include "mgn/corekit/rational.hpp"
#include "mgn/symrep/partition.hpp"

namespace mgn::symrep {

// Sparse sum of irreducibles V_lambda of a single symmetric group. Zero
// multiplicities are never stored.
class Decomposition {
 public:
  Decomposition() = default;
  static Decomposition irreducible(const Partition& lambda, const Integer& mult = 1);

  const std::map<Partition, Integer>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  // Size n of the symmetric group, -1 when empty.
  int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.size(); }
  Integer multiplicity(const Partition& lambda) const;
  // Throws std::invalid_argument when lambda has a different size.
  void add(const Partition& lambda, const Integer& mult);
  Integer dimension() const;

  Decomposition& operator+=(const Decomposition& other);
  friend Decomposition operator+(Decomposition a, const Decomposition& b) { return a += b; }
  friend bool operator==(const Decomposition& a, const Decomposition& b) = default;

  // "m*[..] + [..]" in canonical order; "0" when empty.
  std::string to_string() const;

 private:
  std::map<Partition, Integer> terms_;
};

// Number of semistandard tableaux of shape mu and content lambda. Throws
// std::invalid_argument when the sizes differ.
Integer kostka(const Partition& mu, const Partition& lambda);

// The permutation module U_lambda = Ind from the Young subgroup of the
// trivial representation, as sum_mu K_{mu lambda} V_mu.
Decomposition young_rule(const Partition& lambda);

// c^nu_{lambda mu} by enumeration of lattice-word fillings of nu / lambda.
Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// Ind from S_|lambda| x S_|mu| of V_lambda (x) V_mu.
Decomposition lr_product(const Partition& lambda, const Partition& mu);

// Bilinear extension of lr_product.
Decomposition induct(const Decomposition& d1, const Decomposition& d2);

// Largest number of parts in the support; zero for the zero decomposition.
int length(const Decomposition& d);

}  // namespace mgn::symrep

#endif  // MGN_SYMREP_REPRESENTATION_HPP_
