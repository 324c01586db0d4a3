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

#include "mgn/symrep/numerology.hpp"

#include <sstream>
#include <stdexcept>

namespace mgn::symrep {

namespace {
#include "hodge_list.inc"

Partition repeated(std::initializer_list<std::pair<int, int>> blocks) {
  std::vector<int> parts;
  for (auto [part, mult] : blocks) parts.insert(parts.end(), static_cast<std::size_t>(mult), part);
  return Partition(std::move(parts));
}

}  // namespace

Decomposition induced_tilde_V() {
  Partition sgn10 = repeated({{1, 10}});
  Decomposition pair = lr_product(sgn10, sgn10);
  return induct(pair, Decomposition::irreducible(Partition({1})));
}

Decomposition expected_tilde_V() {
  Decomposition d;
  d.add(repeated({{1, 21}}), 1);
  for (int i = 0; i <= 9; ++i) d.add(repeated({{3, 1}, {2, i}, {1, 18 - 2 * i}}), 1);
  for (int j = 1; j <= 10; ++j) d.add(repeated({{2, j}, {1, 21 - 2 * j}}), 2);
  return d;
}

const std::string& hodge_list_text() {
  static const std::string text(kHodgeListText);
  return text;
}

std::vector<Partition> hodge_list() {
  std::vector<Partition> out;
  std::istringstream is(hodge_list_text());
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_partition(line));
  }
  return out;
}

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

HodgeAudit hodge_class_audit(int long_threshold) {
  HodgeAudit a;
  a.checksum_ok = fnv1a64(hodge_list_text()) == kHodgeListChecksum;
  if (!a.checksum_ok) throw std::logic_error("hodge list checksum mismatch");
  a.total = 0;
  a.long_part = 0;
  for (const auto& lambda : hodge_list()) {
    Integer d = dim_irrep(lambda);
    a.total += d;
    if (lambda.length() >= long_threshold) a.long_part += d;
  }
  return a;
}

ContainmentReport hodge_list_contained_in(const Decomposition& target) {
  Decomposition listed;
  for (const auto& lambda : hodge_list()) listed.add(lambda, 1);
  ContainmentReport r;
  for (const auto& [lambda, m] : listed.terms()) {
    if (target.multiplicity(lambda) < m) r.missing.push_back(lambda);
  }
  r.contained = r.missing.empty();
  return r;
}

}  // namespace mgn::symrep
