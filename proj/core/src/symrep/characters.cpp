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

#include "mgn/symrep/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace mgn::symrep {

namespace {

std::vector<int> beta_set(const Partition& lambda) {
  const int l = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) beta[static_cast<std::size_t>(i)] = lambda[i] + (l - 1 - i);
  return beta;
}

Partition from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int l = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < l; ++i) parts.push_back(beta[static_cast<std::size_t>(i)] - (l - 1 - i));
  return Partition::from_unsorted(std::move(parts));
}

std::mutex g_mutex;
std::map<std::pair<std::string, std::string>, Integer> g_cache;

Integer mn(const Partition& lambda, const std::vector<int>& rho, std::size_t from) {
  if (from == rho.size()) return lambda.size() == 0 ? Integer(1) : Integer(0);
  std::string rho_key;
  for (std::size_t i = from; i < rho.size(); ++i) rho_key += std::to_string(rho[i]) + ",";
  auto key = std::make_pair(lambda.key(), rho_key);
  {
    std::lock_guard<std::mutex> lock(g_mutex);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
  }
  const int k = rho[from];
  std::vector<int> beta = beta_set(lambda);
  std::set<int> beads(beta.begin(), beta.end());
  Integer total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int b = beta[i];
    if (b - k < 0 || beads.count(b - k)) continue;
    int between = 0;
    for (int x : beta) between += (x > b - k && x < b) ? 1 : 0;
    std::vector<int> moved = beta;
    moved[i] = b - k;
    Integer sub = mn(from_beta(moved), rho, from + 1);
    total += (between % 2 == 0) ? sub : Integer(-sub);
  }
  std::lock_guard<std::mutex> lock(g_mutex);
  g_cache.emplace(key, total);
  return total;
}

}  // namespace

Integer character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size()) return 0;
  return mn(lambda, rho.parts(), 0);
}

Decomposition character_induct(const Partition& lambda, const Partition& mu) {
  const int n1 = lambda.size(), n2 = mu.size();
  const auto classes1 = partitions_of(n1);
  const auto classes2 = partitions_of(n2);
  std::map<Partition, Rational> acc;
  const auto targets = partitions_of(n1 + n2);
  for (const auto& r1 : classes1) {
    Integer c1 = character(lambda, r1);
    if (c1 == 0) continue;
    for (const auto& r2 : classes2) {
      Integer c2 = character(mu, r2);
      if (c2 == 0) continue;
      std::vector<int> joined = r1.parts();
      joined.insert(joined.end(), r2.parts().begin(), r2.parts().end());
      Partition rho = Partition::from_unsorted(joined);
      Rational w = Rational(c1 * c2) / Rational(centralizer_order(r1) * centralizer_order(r2));
      for (const auto& nu : targets) acc[nu] += w * Rational(character(nu, rho));
    }
  }
  Decomposition d;
  for (const auto& [nu, m] : acc) {
    if (!is_integer(m)) throw std::logic_error("character_induct: non-integral multiplicity");
    d.add(nu, m.get_num());
  }
  return d;
}

LengthAdditivityVerdict verify_length_additivity(int n1, int n2, int max_total) {
  if (n1 < 1 || n2 < 1 || n1 + n2 > max_total) {
    throw std::invalid_argument("verify_length_additivity: need n1, n2 >= 1 and n1 + n2 <= " +
                                std::to_string(max_total));
  }
  LengthAdditivityVerdict v;
  for (const auto& a : partitions_of(n1)) {
    for (const auto& b : partitions_of(n2)) {
      ++v.pairs_checked;
      Decomposition oracle = character_induct(a, b);
      if (!(lr_product(a, b) == oracle)) ++v.lr_mismatches;
      if (length(oracle) != a.length() + b.length()) ++v.length_failures;
    }
  }
  v.pass = v.lr_mismatches == 0 && v.length_failures == 0;
  return v;
}

}  // namespace mgn::symrep
