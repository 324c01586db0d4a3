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

#ifndef MGN_MODFORMS_EIGENFORM_HPP_
#define MGN_MODFORMS_EIGENFORM_HPP_

#include <cstdint>
#include <vector>

#include "mgn/corekit/rational.hpp"
#include "mgn/modforms/qseries.hpp"

namespace mgn::modforms {

// Normalized Hecke eigenform in a weight with a one-dimensional cusp space.
class EigenformTable {
 public:
  EigenformTable(int weight, std::vector<Integer> coefficients);

  int weight() const { return weight_; }
  // Largest n with a known coefficient.
  int max_index() const { return static_cast<int>(a_.size()); }
  // a(n) for 1 <= n <= max_index(); throws std::out_of_range otherwise.
  const Integer& operator()(int n) const;
  const std::vector<Integer>& coefficients() const { return a_; }

 private:
  int weight_;
  std::vector<Integer> a_;  // a_[n-1] = a(n)
};

// Weights handled by eigenform(): exactly those with s_k = 1.
bool has_unique_eigenform(int k);

// Eigenform of weight k as Delta * E_{k-12} (E_0 = 1) with coefficients
// a(1..order-1). Throws std::invalid_argument unless s_k = 1.
EigenformTable eigenform(int k, int order = kDefaultOrder);

// Ramanujan tau, a(1..order-1).
inline EigenformTable tau_table(int order = kDefaultOrder) { return eigenform(12, order); }

enum class EulerStatus { kValue, kVanishesOddWeight };

struct EulerCharacteristic {
  long value;
  EulerStatus status;
};

// E_c(M_{1,1}, V_a) = -2 s_{a+2} - 1 for a > 0 even; zero for a odd.
// Throws std::invalid_argument for a <= 0.
EulerCharacteristic euler_char_Ec(int a);

// c_18(p) + p^8 + p^9. Requires order > p.
Integer saito_kurokawa(std::uint32_t p, int order = kDefaultOrder);

}  // namespace mgn::modforms

#endif  // MGN_MODFORMS_EIGENFORM_HPP_
