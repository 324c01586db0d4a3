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

#include "mgn/tautcalc/intersection.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "mgn/corekit/bernoulli.hpp"

namespace mgn::tautcalc {

namespace {

Integer double_factorial(long n) {
  Integer r = 1;
  for (long k = n; k > 1; k -= 2) r *= k;
  return r;
}

using Key = std::pair<int, std::vector<int>>;

std::mutex g_mutex;
std::map<Key, Rational>& memo() {
  static std::map<Key, Rational> m;
  return m;
}

Rational correlator(int g, std::vector<int> a);

// Products over ways to split rest between the two factors.
Rational split_sum(int g, int r, int s, const std::vector<int>& rest) {
  Rational total = 0;
  const std::size_t m = rest.size();
  for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
    std::vector<int> left{r}, right{s};
    for (std::size_t i = 0; i < m; ++i) ((mask >> i) & 1UL ? left : right).push_back(rest[i]);
    for (int g1 = 0; g1 <= g; ++g1) {
      Rational x = correlator(g1, left);
      if (x == 0) continue;
      total += x * correlator(g - g1, right);
    }
  }
  return total;
}

Rational correlator(int g, std::vector<int> a) {
  const int n = static_cast<int>(a.size());
  if (g < 0 || n == 0 || 2 * g - 2 + n <= 0) return 0;
  for (int x : a) {
    if (x < 0) return 0;
  }
  if (std::accumulate(a.begin(), a.end(), 0) != 3 * g - 3 + n) return 0;
  std::sort(a.begin(), a.end());
  if (g == 0 && n == 3) return 1;
  if (g == 1 && n == 1) return Rational(1, 24);
  Key key{g, a};
  {
    std::lock_guard<std::mutex> lock(g_mutex);
    auto it = memo().find(key);
    if (it != memo().end()) return it->second;
  }
  const int d = a.back();
  std::vector<int> rest(a.begin(), a.end() - 1);
  Rational total = 0;
  for (std::size_t j = 0; j < rest.size(); ++j) {
    std::vector<int> b = rest;
    b[j] = rest[j] + d - 1;
    Rational coeff = make_rational(double_factorial(2L * rest[j] + 2L * d - 1), double_factorial(2L * rest[j] - 1));
    total += coeff * correlator(g, b);
  }
  Rational half = 0;
  for (int r = 0; r <= d - 2; ++r) {
    int s = d - 2 - r;
    Rational coeff(double_factorial(2L * r + 1) * double_factorial(2L * s + 1));
    std::vector<int> b = rest;
    b.push_back(r);
    b.push_back(s);
    half += coeff * (correlator(g - 1, b) + split_sum(g, r, s, rest));
  }
  total += half / 2;
  total /= Rational(double_factorial(2L * d + 1));
  std::lock_guard<std::mutex> lock(g_mutex);
  memo().emplace(std::move(key), total);
  return total;
}

void set_partitions(int r, const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  std::vector<std::vector<int>> blocks;
  std::function<void(int)> rec = [&](int i) {
    if (i == r) {
      emit(blocks);
      return;
    }
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      blocks[k].push_back(i);
      rec(i + 1);
      blocks[k].pop_back();
    }
    blocks.push_back({i});
    rec(i + 1);
    blocks.pop_back();
  };
  rec(0);
}

}  // namespace

Rational psi_integral(int g, const std::vector<int>& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) throw std::invalid_argument("psi_integral: at least one marking required");
  if (g < 0 || 2 * g - 2 + n <= 0) throw std::invalid_argument("psi_integral: unstable (g, n)");
  for (int x : a) {
    if (x < 0) throw std::invalid_argument("psi_integral: negative exponent");
  }
  int sum = std::accumulate(a.begin(), a.end(), 0);
  if (sum != 3 * g - 3 + n) {
    throw std::invalid_argument("psi_integral: exponents sum to " + std::to_string(sum) + ", expected " +
                                std::to_string(3 * g - 3 + n));
  }
  return correlator(g, a);
}

Rational kappa_psi_integral(int g, const std::vector<int>& a, const std::vector<int>& b) {
  const int n = static_cast<int>(a.size());
  if (g < 0 || 2 * g - 2 + n <= 0) throw std::invalid_argument("kappa_psi_integral: unstable (g, n)");
  for (int x : a) {
    if (x < 0) throw std::invalid_argument("kappa_psi_integral: negative psi exponent");
  }
  for (int x : b) {
    if (x < 0) throw std::invalid_argument("kappa_psi_integral: negative kappa index");
  }
  int sum = std::accumulate(a.begin(), a.end(), 0) + std::accumulate(b.begin(), b.end(), 0);
  if (sum != 3 * g - 3 + n) {
    throw std::invalid_argument("kappa_psi_integral: degree " + std::to_string(sum) + ", expected " +
                                std::to_string(3 * g - 3 + n));
  }
  const int r = static_cast<int>(b.size());
  Rational total = 0;
  set_partitions(r, [&](const std::vector<std::vector<int>>& blocks) {
    std::vector<int> exps = a;
    for (const auto& block : blocks) {
      int e = 1;
      for (int j : block) e += b[static_cast<std::size_t>(j)];
      exps.push_back(e);
    }
    Rational v = correlator(g, exps);
    if ((r - static_cast<int>(blocks.size())) % 2) v = -v;
    total += v;
  });
  return total;
}

Integer genus0_multinomial(const std::vector<int>& a) {
  const int n = static_cast<int>(a.size());
  int sum = std::accumulate(a.begin(), a.end(), 0);
  if (n < 3 || sum != n - 3) throw std::invalid_argument("genus0_multinomial: need sum a_i = n - 3");
  Integer r = factorial(static_cast<unsigned long>(n - 3));
  for (int x : a) r /= factorial(static_cast<unsigned long>(x));
  return r;
}

Rational hodge_lambda_cubed(int g) {
  if (g < 2) throw std::invalid_argument("hodge_lambda_cubed: g >= 2 required");
  Rational b1 = abs(bernoulli(static_cast<unsigned>(2 * g)));
  Rational b2 = abs(bernoulli(static_cast<unsigned>(2 * g - 2)));
  return b1 / (2 * g) * b2 / (2 * g - 2) / Rational(factorial(static_cast<unsigned long>(2 * g - 2)));
}

}  // namespace mgn::tautcalc
