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

#include "mgn/corekit/prime_field.hpp"

#include <stdexcept>
#include <string>

namespace mgn {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> primes_in_range(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (is_prime(n)) out.push_back(static_cast<std::uint32_t>(n));
  }
  return out;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) +
                                " is not prime");
  }
  if (p > kMaxFieldPrime) {
    throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) +
                                " exceeds the supported bound");
  }
  // Squaring every residue marks the squares; O(p) once.
  chi_.assign(p, -1);
  chi_[0] = 0;
  for (std::uint64_t x = 1; x < p; ++x) chi_[x * x % p] = 1;

  inv_.assign(p, 0);
  if (p > 1) inv_[1] = 1;
  for (std::uint64_t a = 2; a < p; ++a) {
    inv_[a] = static_cast<std::uint32_t>(
        (p - (p / a) * static_cast<std::uint64_t>(inv_[p % a]) % p) % p);
  }
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = 1 % p_;
  std::uint32_t base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

}  // namespace mgn
