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

#include <gtest/gtest.h>

#include <functional>

#include "mgn/symrep/bounds.hpp"
#include "mgn/symrep/characters.hpp"
#include "mgn/symrep/numerology.hpp"
#include "mgn/symrep/partition.hpp"
#include "mgn/symrep/representation.hpp"

namespace mgn::symrep {
namespace {

Partition P(const char* s) { return parse_partition(s); }

// Fillings of the skew shape outer/inner with the given content, rows weakly
// increasing and columns strictly increasing. With lattice = true only those
// whose right-to-left, top-to-bottom reading word is a lattice word count.
long count_tableaux(const Partition& outer, const Partition& inner, const std::vector<int>& content, bool lattice) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < outer.length(); ++r)
    for (int c = inner[r]; c < outer[r]; ++c) cells.push_back({r, c});
  std::vector<std::vector<int>> t(static_cast<std::size_t>(outer.length()),
                                  std::vector<int>(static_cast<std::size_t>(outer[0]), 0));
  std::vector<int> left = content;
  long count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == cells.size()) {
      if (lattice) {
        std::vector<int> seen(content.size() + 1, 0);
        for (int r = 0; r < outer.length(); ++r)
          for (int c = outer[r] - 1; c >= inner[r]; --c) {
            int v = t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            ++seen[static_cast<std::size_t>(v)];
            if (v > 1 && seen[static_cast<std::size_t>(v)] > seen[static_cast<std::size_t>(v - 1)]) return;
          }
      }
      ++count;
      return;
    }
    auto [r, c] = cells[i];
    for (int v = 1; v <= static_cast<int>(content.size()); ++v) {
      if (!left[static_cast<std::size_t>(v - 1)]) continue;
      if (c > inner[r] && t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] > v) continue;
      if (r > 0 && c >= inner[r - 1] && c < outer[r - 1] &&
          t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] >= v)
        continue;
      t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      --left[static_cast<std::size_t>(v - 1)];
      rec(i + 1);
      ++left[static_cast<std::size_t>(v - 1)];
    }
    t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
  };
  rec(0);
  return count;
}

TEST(Partition, ParsingAndPrinting) {
  auto p = P("[3 2^2 1^14]");
  EXPECT_EQ(p.size(), 21);
  EXPECT_EQ(p.length(), 17);
  EXPECT_EQ(p.to_string(), "[3 2^2 1^14]");
  EXPECT_EQ(P("[2,1,1]"), Partition({2, 1, 1}));
  EXPECT_EQ(P("[3 1]").conjugate(), P("[2 1 1]"));
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(parse_partition("[a]"), std::invalid_argument);
}

TEST(Partition, Counts) {
  std::vector<std::size_t> want{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(partitions_of(n).size(), want[static_cast<std::size_t>(n)]);
  EXPECT_EQ(partitions_of(3).front(), P("[3]"));
}

TEST(Dimension, Examples) {
  EXPECT_EQ(dim_irrep(P("[2^7]")), 429);
  EXPECT_EQ(dim_irrep(P("[2 1^12]")), 13);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(dim_irrep(Partition({n})), 1);
}

TEST(Characters, DimensionAndOrthogonality) {
  for (int n = 1; n <= 7; ++n) {
    auto ps = partitions_of(n);
    Partition identity(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (const auto& l : ps) EXPECT_EQ(character(l, identity), dim_irrep(l));
    for (const auto& rho : ps) {
      Integer s = 0;
      for (const auto& l : ps) s += character(l, rho) * character(l, rho);
      EXPECT_EQ(s, centralizer_order(rho)) << rho.to_string();
    }
  }
}

TEST(Kostka, Examples) {
  EXPECT_EQ(kostka(P("[2 1]"), P("[2 1]")), 1);
  EXPECT_EQ(kostka(P("[2 1]"), P("[1 1 1]")), 2);
  EXPECT_EQ(kostka(P("[1 1 1]"), P("[2 1]")), 0);
}

TEST(Kostka, MatchesTableauEnumeration) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& mu : partitions_of(n))
      for (const auto& lambda : partitions_of(n)) {
        long brute = count_tableaux(mu, Partition(), lambda.parts(), false);
        EXPECT_EQ(kostka(mu, lambda), brute) << mu.to_string() << " " << lambda.to_string();
        EXPECT_EQ(brute > 0, dominates(mu, lambda));
      }
}

TEST(LittlewoodRichardson, MatchesTableauEnumeration) {
  for (int n1 = 1; n1 <= 4; ++n1)
    for (int n2 = 1; n1 + n2 <= 7; ++n2)
      for (const auto& l : partitions_of(n1))
        for (const auto& m : partitions_of(n2))
          for (const auto& nu : partitions_of(n1 + n2)) {
            bool fits = l.length() <= nu.length();
            for (int i = 0; fits && i < l.length(); ++i) fits = l[i] <= nu[i];
            long brute = fits ? count_tableaux(nu, l, m.parts(), true) : 0;
            EXPECT_EQ(lr_coefficient(l, m, nu), brute)
                << nu.to_string() << " / " << l.to_string() << " . " << m.to_string();
          }
}

TEST(Representations, Examples) {
  Decomposition r11;
  r11.add(P("[2]"), 1);
  r11.add(P("[1 1]"), 1);
  EXPECT_EQ(young_rule(P("[1 1]")), r11);
  EXPECT_EQ(young_rule(Partition({4})), Decomposition::irreducible(Partition({4})));
  Decomposition r21;
  r21.add(P("[3]"), 1);
  r21.add(P("[2 1]"), 1);
  EXPECT_EQ(young_rule(P("[2 1]")), r21);
  EXPECT_EQ(length(young_rule(P("[2 1]"))), 2);
  EXPECT_EQ(lr_product(P("[1]"), P("[1]")), r11);
  Decomposition want;
  want.add(P("[2 2]"), 1);
  want.add(P("[2 1 1]"), 1);
  want.add(P("[1^4]"), 1);
  EXPECT_EQ(lr_product(P("[1 1]"), P("[1 1]")), want);
  EXPECT_EQ(character_induct(P("[1 1]"), P("[1 1]")), want);
  EXPECT_EQ(length(Decomposition::irreducible(Partition({5}))), 1);
  EXPECT_EQ(length(Decomposition::irreducible(P("[1^5]"))), 5);
  Decomposition mixed;
  mixed.add(P("[2]"), 1);
  EXPECT_THROW(mixed.add(P("[3]"), 1), std::invalid_argument);
}

TEST(LengthAdditivity, SmallCases) {
  auto v22 = verify_length_additivity(2, 2);
  EXPECT_TRUE(v22.pass);
  EXPECT_EQ(v22.pairs_checked, 4);
  EXPECT_TRUE(verify_length_additivity(1, 1).pass);
  auto v44 = verify_length_additivity(4, 4);
  EXPECT_TRUE(v44.pass);
  EXPECT_EQ(v44.pairs_checked, 25);
  EXPECT_THROW(verify_length_additivity(0, 3), std::invalid_argument);
  EXPECT_THROW(verify_length_additivity(5, 5), std::invalid_argument);
}

TEST(Bounds, Examples) {
  EXPECT_EQ(theorem_bounds(2, 21, 12, ModuliSpace::kStable), 12);
  EXPECT_EQ(theorem_bounds(0, 5, 1, ModuliSpace::kStable), 2);
  EXPECT_EQ(theorem_bounds(1, 1, 0, ModuliSpace::kRationalTails), 1);
  EXPECT_EQ(parse_space("compact-type"), ModuliSpace::kCompactType);
  EXPECT_THROW(theorem_bounds(0, 2, 0, ModuliSpace::kStable), std::invalid_argument);
  EXPECT_THROW(theorem_bounds(0, 5, 3, ModuliSpace::kStable), std::invalid_argument);
  for (int n = 3; n <= 12; ++n)
    for (int k = 0; k <= n - 3; ++k) EXPECT_EQ(theorem_bounds(0, n, k, ModuliSpace::kStable), std::min(k + 1, n - k - 2));
}

TEST(Numerology, InducedTildeV) {
  auto d = induced_tilde_V();
  EXPECT_EQ(d.dimension(), 3879876);
  EXPECT_EQ(d.multiplicity(P("[1^21]")), 1);
  EXPECT_EQ(d.multiplicity(P("[2^5 1^11]")), 2);
  EXPECT_EQ(d, expected_tilde_V());
  EXPECT_TRUE(hodge_list_contained_in(d).contained);
}

TEST(Numerology, HodgeAudit) {
  for (const auto& p : hodge_list()) EXPECT_EQ(p.size(), 21);
  EXPECT_EQ(hodge_list().size(), 15u);
  EXPECT_EQ(fnv1a64(hodge_list_text()), kHodgeListChecksum);
  auto a = hodge_class_audit();
  EXPECT_TRUE(a.checksum_ok);
  EXPECT_EQ(a.total, 1939938);
  EXPECT_EQ(a.long_part, 1058148);
  Integer sum = 0;
  for (const auto& p : hodge_list()) sum += dim_irrep(p);
  EXPECT_EQ(sum, a.total);
}

}  // namespace
}  // namespace mgn::symrep
