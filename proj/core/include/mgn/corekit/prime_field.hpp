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

#ifndef MGN_COREKIT_PRIME_FIELD_HPP_
#define MGN_COREKIT_PRIME_FIELD_HPP_

#include <cstdint>
#include <vector>

namespace mgn {

// Largest modulus accepted by PrimeField. Products of two residues must fit
// in 64 bits and the tables are O(p).
inline constexpr std::uint32_t kMaxFieldPrime = 1u << 24;

bool is_prime(std::uint64_t n);

// All primes in [lo, hi], ascending.
std::vector<std::uint32_t> primes_in_range(std::uint32_t lo, std::uint32_t hi);

// F_p with a precomputed quadratic-character table and inverse table.
// Immutable once built; safe to share between threads.
class PrimeField {
 public:
  // Throws std::invalid_argument unless p is prime and p <= kMaxFieldPrime.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  // Quadratic character: 0 at 0, +1 on nonzero squares, -1 otherwise.
  int chi(std::uint32_t a) const { return chi_[a]; }
  const std::vector<std::int8_t>& chi_table() const { return chi_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  // Undefined for a == 0.
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  std::uint32_t reduce(std::int64_t a) const {
    std::int64_t r = a % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

 private:
  std::uint32_t p_;
  std::vector<std::int8_t> chi_;
  std::vector<std::uint32_t> inv_;
};

inline PrimeField build_prime_field(std::uint32_t p) { return PrimeField(p); }

}  // namespace mgn

#endif  // MGN_COREKIT_PRIME_FIELD_HPP_
