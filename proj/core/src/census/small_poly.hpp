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

#ifndef MGN_CENSUS_SMALL_POLY_HPP_
#define MGN_CENSUS_SMALL_POLY_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "mgn/corekit/prime_field.hpp"

namespace mgn::census::detail {

// Multiplication by table lookup for the small moduli the census uses.
class TableField {
 public:
  explicit TableField(const PrimeField& f) : p_(f.p()), field_(&f) {
    if (p_ <= 256) {
      mul_.resize(static_cast<std::size_t>(p_) * p_);
      for (std::uint32_t a = 0; a < p_; ++a)
        for (std::uint32_t b = 0; b < p_; ++b) mul_[a * p_ + b] = static_cast<std::uint16_t>(a * b % p_);
    }
  }
  std::uint32_t p() const { return p_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return mul_.empty() ? field_->mul(a, b) : mul_[a * p_ + b];
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return field_->sub(a, b); }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return field_->add(a, b); }
  std::uint32_t inv(std::uint32_t a) const { return field_->inv(a); }
  int chi(std::uint32_t a) const { return field_->chi(a); }

 private:
  std::uint32_t p_;
  const PrimeField* field_;
  std::vector<std::uint16_t> mul_;
};

inline constexpr int kMaxDeg = 6;
using Coeffs = std::array<std::uint32_t, kMaxDeg + 1>;

inline int degree_of(const Coeffs& a, int d) {
  while (d >= 0 && a[d] == 0) --d;
  return d;
}

// Degree of gcd(a, b) over F_p; a has degree da >= 0, b degree db (may be -1).
template <class Field>
int gcd_degree(Coeffs a, int da, Coeffs b, int db, const Field& f) {
  while (db >= 0) {
    // a <- a mod b
    std::uint32_t lead_inv = f.inv(b[db]);
    while (da >= db) {
      std::uint32_t q = f.mul(a[da], lead_inv);
      int shift = da - db;
      for (int i = 0; i <= db; ++i) a[i + shift] = f.sub(a[i + shift], f.mul(q, b[i]));
      da = degree_of(a, da - 1);
      if (da < 0) break;
    }
    std::swap(a, b);
    std::swap(da, db);
  }
  return da;
}

// True when the polynomial a of degree d >= 1 has no repeated root over the
// algebraic closure.
template <class Field>
bool poly_squarefree(const Coeffs& a, int d, const Field& f) {
  Coeffs der{};
  for (int i = 1; i <= d; ++i) der[i - 1] = f.mul(static_cast<std::uint32_t>(i % f.p()), a[i]);
  int dd = degree_of(der, d - 1);
  return gcd_degree(a, d, der, dd, f) == 0;
}

}  // namespace mgn::census::detail

#endif  // MGN_CENSUS_SMALL_POLY_HPP_
