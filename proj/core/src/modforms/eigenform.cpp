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

#include "mgn/modforms/eigenform.hpp"

#include <stdexcept>
#include <string>

#include "mgn/corekit/prime_field.hpp"

namespace mgn::modforms {

EigenformTable::EigenformTable(int weight, std::vector<Integer> coefficients)
    : weight_(weight), a_(std::move(coefficients)) {
  if (!a_.empty() && a_[0] != 1) throw std::invalid_argument("EigenformTable: a(1) must be 1");
}

const Integer& EigenformTable::operator()(int n) const {
  if (n < 1 || n > max_index()) {
    throw std::out_of_range("eigenform coefficient a(" + std::to_string(n) +
                            ") outside truncation for weight " + std::to_string(weight_));
  }
  return a_[n - 1];
}

bool has_unique_eigenform(int k) { return dim_Sk(k) == 1; }

EigenformTable eigenform(int k, int order) {
  if (!has_unique_eigenform(k)) {
    throw std::invalid_argument("eigenform: weight " + std::to_string(k) +
                                " does not have a one-dimensional cusp space");
  }
  QSeries f = delta(order);
  if (k > 12) f = f * eisenstein(k - 12, order);
  std::vector<Integer> a;
  a.reserve(order - 1);
  for (int n = 1; n < f.order(); ++n) {
    if (!is_integer(f[n])) throw std::logic_error("eigenform: non-integral coefficient");
    a.push_back(f[n].get_num());
  }
  return EigenformTable(k, std::move(a));
}

EulerCharacteristic euler_char_Ec(int a) {
  if (a <= 0) throw std::invalid_argument("euler_char_Ec: a must be positive");
  if (a % 2 != 0) return {0, EulerStatus::kVanishesOddWeight};
  return {-2L * dim_Sk(a + 2) - 1, EulerStatus::kValue};
}

Integer saito_kurokawa(std::uint32_t p, int order) {
  if (!is_prime(p)) throw std::invalid_argument("saito_kurokawa: p must be prime");
  if (static_cast<int>(p) >= order) {
    throw std::invalid_argument("saito_kurokawa: truncation order too small for p = " + std::to_string(p));
  }
  EigenformTable c18 = eigenform(18, order);
  return c18(static_cast<int>(p)) + ipow(Integer(p), 8) + ipow(Integer(p), 9);
}

}  // namespace mgn::modforms
