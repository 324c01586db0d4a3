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

#include "mgn/census/oracle.hpp"

#include <array>
#include <stdexcept>
#include <vector>

#include "mgn/census/curves.hpp"
#include "mgn/corekit/prime_field.hpp"

namespace mgn::census {

namespace {

using Matrix7 = std::array<std::array<std::uint32_t, 7>, 7>;

// Column i holds the coefficients of (aX + bZ)^i (cX + dZ)^(6-i).
Matrix7 substitution_matrix(const PrimeField& f, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                            std::uint32_t d) {
  Matrix7 m{};
  for (int i = 0; i <= 6; ++i) {
    std::array<std::uint32_t, 7> poly{};
    poly[0] = 1;  // coefficient of X^0 Z^deg
    int deg = 0;
    auto multiply = [&](std::uint32_t x_coef, std::uint32_t z_coef) {
      std::array<std::uint32_t, 7> next{};
      for (int j = 0; j <= deg; ++j) {
        next[j] = f.add(next[j], f.mul(poly[j], z_coef));
        next[j + 1] = f.add(next[j + 1], f.mul(poly[j], x_coef));
      }
      poly = next;
      ++deg;
    };
    for (int r = 0; r < i; ++r) multiply(a, b);
    for (int r = i; r < 6; ++r) multiply(c, d);
    for (int j = 0; j <= 6; ++j) m[j][i] = poly[j];
  }
  return m;
}

std::uint64_t encode(const std::array<std::uint32_t, 7>& c, std::uint32_t p) {
  std::uint64_t x = 0;
  for (int i = 6; i >= 0; --i) x = x * p + c[i];
  return x;
}

}  // namespace

OrbitCount g2_orbit_count(std::uint32_t p) {
  if (p < 3 || p > 7 || !is_prime(p)) throw std::invalid_argument("g2_orbit_count: odd p <= 7 required");
  PrimeField f(p);
  std::vector<Matrix7> mats;
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      for (std::uint32_t c = 0; c < p; ++c)
        for (std::uint32_t d = 0; d < p; ++d) {
          if (f.sub(f.mul(a, d), f.mul(b, c)) == 0) continue;
          mats.push_back(substitution_matrix(f, a, b, c, d));
        }
  std::uint64_t total = 1;
  for (int i = 0; i < 7; ++i) total *= p;
  std::vector<bool> seen(total, false);
  OrbitCount out;
  out.groupoid = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    if (seen[code]) continue;
    BinarySextic s;
    std::uint64_t x = code;
    for (int i = 0; i < 7; ++i) {
      s.c[i] = static_cast<std::uint32_t>(x % p);
      x /= p;
    }
    if (!is_squarefree(s, f)) continue;
    std::uint64_t stabilizer = 0;
    for (const auto& m : mats) {
      std::array<std::uint32_t, 7> img{};
      for (int j = 0; j <= 6; ++j) {
        std::uint32_t acc = 0;
        for (int i = 0; i <= 6; ++i) acc = f.add(acc, f.mul(m[j][i], s.c[i]));
        img[j] = acc;
      }
      for (std::uint32_t e = 1; e < p; ++e) {
        std::uint32_t e2 = f.mul(e, e);
        std::array<std::uint32_t, 7> scaled{};
        for (int j = 0; j <= 6; ++j) scaled[j] = f.mul(e2, img[j]);
        std::uint64_t t = encode(scaled, p);
        if (t == code) ++stabilizer;
        seen[t] = true;
      }
    }
    ++out.classes;
    out.groupoid += make_rational(p - 1, stabilizer);
  }
  return out;
}

}  // namespace mgn::census
