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

#include "mgn/census/curves.hpp"

#include <stdexcept>

#include "small_poly.hpp"

namespace mgn::census {

bool is_nonsingular(const WeierstrassShort& e, const PrimeField& f) {
  if (f.p() < 5) throw std::invalid_argument("short Weierstrass forms require p >= 5");
  std::uint32_t a3 = f.mul(f.mul(e.a, e.a), e.a);
  std::uint32_t b2 = f.mul(e.b, e.b);
  return f.add(f.mul(4 % f.p(), a3), f.mul(27 % f.p(), b2)) != 0;
}

std::uint32_t discriminant(const WeierstrassLong& e, const PrimeField& f) {
  auto c = [&](std::int64_t v) { return f.reduce(v); };
  auto m = [&](std::uint32_t x, std::uint32_t y) { return f.mul(x, y); };
  std::uint32_t b2 = f.add(m(e.a1, e.a1), m(c(4), e.a2));
  std::uint32_t b4 = f.add(m(c(2), e.a4), m(e.a1, e.a3));
  std::uint32_t b6 = f.add(m(e.a3, e.a3), m(c(4), e.a6));
  std::uint32_t b8 = f.sub(f.add(f.add(m(m(e.a1, e.a1), e.a6), m(c(4), m(e.a2, e.a6))),
                                 m(e.a2, m(e.a3, e.a3))),
                           f.add(m(e.a1, m(e.a3, e.a4)), m(e.a4, e.a4)));
  std::uint32_t neg = f.add(f.add(m(m(b2, b2), b8), m(c(8), m(m(b4, b4), b4))), m(c(27), m(b6, b6)));
  return f.sub(m(c(9), m(m(b2, b4), b6)), neg);
}

std::uint64_t count_points_g1(const WeierstrassShort& e, const PrimeField& f) {
  if (!is_nonsingular(e, f)) throw std::invalid_argument("count_points_g1: singular curve");
  std::int64_t n = static_cast<std::int64_t>(f.p()) + 1;
  for (std::uint32_t x = 0; x < f.p(); ++x) {
    std::uint32_t rhs = f.add(f.mul(f.mul(x, x), x), f.add(f.mul(e.a, x), e.b));
    n += f.chi(rhs);
  }
  return static_cast<std::uint64_t>(n);
}

std::uint64_t count_points_g1(const WeierstrassLong& e, const PrimeField& f) {
  if (!is_nonsingular(e, f)) throw std::invalid_argument("count_points_g1: singular curve");
  std::uint64_t n = 1;
  for (std::uint32_t x = 0; x < f.p(); ++x) {
    std::uint32_t rhs = f.add(f.add(f.mul(f.mul(x, x), x), f.mul(e.a2, f.mul(x, x))),
                              f.add(f.mul(e.a4, x), e.a6));
    for (std::uint32_t y = 0; y < f.p(); ++y) {
      std::uint32_t lhs = f.add(f.mul(y, y), f.add(f.mul(e.a1, f.mul(x, y)), f.mul(e.a3, y)));
      if (lhs == rhs) ++n;
    }
  }
  return n;
}

bool is_squarefree(const BinarySextic& s, const PrimeField& f) {
  detail::Coeffs a{};
  for (int i = 0; i <= 6; ++i) a[i] = s.c[i] % f.p();
  if (a[6] == 0 && a[5] == 0) return false;
  int d = detail::degree_of(a, 6);
  return detail::poly_squarefree(a, d, f);
}

std::uint64_t count_points_g2(const BinarySextic& s, const PrimeField& f) {
  if (f.p() == 2) throw std::invalid_argument("count_points_g2: characteristic 2 is not supported");
  if (!is_squarefree(s, f)) throw std::invalid_argument("count_points_g2: form is not squarefree");
  std::int64_t n = 0;
  for (std::uint32_t x = 0; x < f.p(); ++x) {
    std::uint32_t v = 0;
    for (int i = 6; i >= 0; --i) v = f.add(f.mul(v, x), s.c[i] % f.p());
    n += 1 + f.chi(v);
  }
  std::uint32_t c6 = s.c[6] % f.p();
  n += c6 != 0 ? 1 + f.chi(c6) : 1;
  return static_cast<std::uint64_t>(n);
}

}  // namespace mgn::census
