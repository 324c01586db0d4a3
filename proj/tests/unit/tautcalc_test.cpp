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

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "mgn/corekit/bernoulli.hpp"
#include "mgn/symrep/bounds.hpp"
#include "mgn/tautcalc/generator.hpp"
#include "mgn/tautcalc/hyperelliptic.hpp"
#include "mgn/tautcalc/intersection.hpp"
#include "mgn/tautcalc/length.hpp"
#include "mgn/tautcalc/stable_graph.hpp"

namespace mgn::tautcalc {
namespace {

using Encoding = std::tuple<std::vector<int>, std::vector<int>, std::vector<std::pair<int, int>>>;

// Minimum over all vertex relabelings: an isomorphism invariant that is
// complete for graphs with numbered legs.
Encoding naive_canonical(const StableGraph& g) {
  int v = g.vertex_count();
  std::vector<int> perm(static_cast<std::size_t>(v));
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<Encoding> best;
  do {
    std::vector<int> genus(static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i) genus[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = g.genus[static_cast<std::size_t>(i)];
    std::vector<int> legs;
    for (int l : g.legs) legs.push_back(perm[static_cast<std::size_t>(l)]);
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges) {
      int x = perm[static_cast<std::size_t>(a)], y = perm[static_cast<std::size_t>(b)];
      edges.push_back({std::min(x, y), std::max(x, y)});
    }
    std::sort(edges.begin(), edges.end());
    Encoding e{genus, legs, edges};
    if (!best || e < *best) best = e;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

// Every connected stable graph of type (g, n), built from scratch and
// deduplicated by naive_canonical.
std::set<Encoding> brute_force_graphs(int g, int n) {
  std::set<Encoding> out;
  int max_edges = 3 * g - 3 + n;
  for (int v = 1; v <= 2 * g - 2 + n; ++v) {
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < v; ++a)
      for (int b = a; b < v; ++b) slots.push_back({a, b});
    for (int e = v - 1; e <= max_edges; ++e) {
      int h1 = e - v + 1;
      if (h1 > g) break;
      // Multisets of e slots.
      std::vector<int> pick(static_cast<std::size_t>(e), 0);
      std::function<void(int, int)> edges_rec = [&](int i, int from) {
        if (i == e) {
          StableGraph base;
          for (int k : pick) base.edges.push_back(slots[static_cast<std::size_t>(k)]);
          base.genus.assign(static_cast<std::size_t>(v), 0);
          std::function<void(int, int)> genus_rec = [&](int u, int left) {
            if (u == v - 1) {
              base.genus[static_cast<std::size_t>(u)] = left;
              base.legs.assign(static_cast<std::size_t>(n), 0);
              std::function<void(int)> legs_rec = [&](int l) {
                if (l == n) {
                  if (base.is_connected() && base.is_stable()) out.insert(naive_canonical(base));
                  return;
                }
                for (int x = 0; x < v; ++x) {
                  base.legs[static_cast<std::size_t>(l)] = x;
                  legs_rec(l + 1);
                }
              };
              legs_rec(0);
              return;
            }
            for (int x = 0; x <= left; ++x) {
              base.genus[static_cast<std::size_t>(u)] = x;
              genus_rec(u + 1, left - x);
            }
          };
          genus_rec(0, g - h1);
          return;
        }
        for (int k = from; k < static_cast<int>(slots.size()); ++k) {
          pick[static_cast<std::size_t>(i)] = k;
          edges_rec(i + 1, k);
        }
      };
      edges_rec(0, 0);
    }
  }
  return out;
}

// Rooted trees with m labeled leaves and every internal vertex of degree
// >= 3 counted from T = x + e^T - 1 - T.
std::vector<Rational> schroeder_egf(int order) {
  std::vector<Rational> t(static_cast<std::size_t>(order + 1), 0);
  for (int it = 0; it <= order; ++it) {
    // exp(T) truncated
    std::vector<Rational> e(static_cast<std::size_t>(order + 1), 0), pw(static_cast<std::size_t>(order + 1), 0);
    pw[0] = 1;
    for (int k = 0; k <= order; ++k) {
      for (int i = 0; i <= order; ++i) e[static_cast<std::size_t>(i)] += pw[static_cast<std::size_t>(i)] / Rational(factorial(static_cast<unsigned long>(k)));
      std::vector<Rational> next(static_cast<std::size_t>(order + 1), 0);
      for (int i = 0; i <= order; ++i)
        for (int j = 0; i + j <= order; ++j) next[static_cast<std::size_t>(i + j)] += pw[static_cast<std::size_t>(i)] * t[static_cast<std::size_t>(j)];
      pw = next;
    }
    std::vector<Rational> nt(static_cast<std::size_t>(order + 1), 0);
    nt[1] = 1;
    for (int i = 2; i <= order; ++i) nt[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)] - t[static_cast<std::size_t>(i)];
    t = nt;
  }
  for (int i = 0; i <= order; ++i) t[static_cast<std::size_t>(i)] *= Rational(factorial(static_cast<unsigned long>(i)));
  return t;
}

TEST(StableGraphs, Examples) {
  EXPECT_EQ(enumerate_stable_graphs(0, 3).size(), 1u);
  EXPECT_EQ(enumerate_stable_graphs(1, 1).size(), 2u);
  EXPECT_EQ(enumerate_stable_graphs(0, 4).size(), 4u);
  EXPECT_THROW(enumerate_stable_graphs(0, 2), std::invalid_argument);
}

TEST(StableGraphs, MatchBruteForce) {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {0, 4}, {0, 5}, {1, 1}, {1, 2}, {1, 3}, {2, 0}, {2, 1}}) {
    auto graphs = enumerate_stable_graphs(g, n);
    std::set<Encoding> ours;
    for (const auto& gr : graphs) {
      EXPECT_TRUE(gr.is_connected());
      EXPECT_TRUE(gr.is_stable());
      EXPECT_EQ(gr.total_genus(), g);
      EXPECT_EQ(gr.leg_count(), n);
      ours.insert(naive_canonical(gr));
    }
    EXPECT_EQ(ours.size(), graphs.size()) << "duplicates in (" << g << "," << n << ")";
    EXPECT_EQ(ours, brute_force_graphs(g, n)) << "(" << g << "," << n << ")";
  }
}

TEST(StableGraphs, GenusZeroMatchesTreeCount) {
  auto t = schroeder_egf(6);
  for (int n = 3; n <= 7; ++n) {
    EXPECT_EQ(Rational(static_cast<unsigned long>(enumerate_stable_graphs(0, n).size())), t[static_cast<std::size_t>(n - 1)]) << n;
  }
}

TEST(Generators, Counts) {
  EXPECT_EQ(count_generators(0, 3, 0), 1u);
  EXPECT_EQ(count_generators(1, 1, 1), 3u);
  for (int k = 0; k <= 4; ++k) {
    for (const auto& gen : enumerate_generators(1, 3, k)) {
      EXPECT_TRUE(gen.is_valid());
      EXPECT_EQ(gen.codimension(), k);
    }
  }
}

TEST(Generators, CanonicalCodeIgnoresVertexOrder) {
  DecoratedGenerator a;
  a.graph.genus = {0, 1};
  a.graph.legs = {0, 1, 0};
  a.graph.edges = {{0, 1}};
  a.leg_psi = {0, 1, 0};
  a.edge_psi = {{0, 0}};
  a.kappa = {{}, {1}};
  DecoratedGenerator b;
  b.graph.genus = {1, 0};
  b.graph.legs = {1, 0, 1};
  b.graph.edges = {{0, 1}};
  b.leg_psi = {0, 1, 0};
  b.edge_psi = {{0, 0}};
  b.kappa = {{1}, {}};
  ASSERT_TRUE(a.is_valid());
  ASSERT_TRUE(b.is_valid());
  EXPECT_EQ(canonical_code(a), canonical_code(b));
  DecoratedGenerator c = b;
  c.graph.legs = {0, 1, 1};
  c.leg_psi = {1, 0, 0};
  EXPECT_NE(canonical_code(a), canonical_code(c));
  EXPECT_EQ(canonical_code(a, unnumbered_legs(3)), canonical_code(c, unnumbered_legs(3)));
}

TEST(PsiIntegrals, Examples) {
  EXPECT_EQ(psi_integral(1, {1}), make_rational(1, 24));
  EXPECT_EQ(psi_integral(0, {0, 0, 0}), 1);
  EXPECT_EQ(psi_integral(2, {4}), make_rational(1, 1152));
  EXPECT_EQ(psi_integral(2, {0, 5}), psi_integral(2, {4}));
  EXPECT_EQ(psi_integral(2, {2, 3}), make_rational(29, 5760));
  EXPECT_EQ(psi_integral(2, {2, 2, 2}), make_rational(7, 240));
  EXPECT_THROW(psi_integral(1, {}), std::invalid_argument);
  EXPECT_THROW(psi_integral(1, {2}), std::invalid_argument);
  EXPECT_THROW(psi_integral(0, {0, 0}), std::invalid_argument);
  EXPECT_THROW(psi_integral(0, {-1, 1, 0, 0}), std::invalid_argument);
}

TEST(PsiIntegrals, GenusZeroMultinomial) {
  for (int n = 3; n <= 8; ++n) {
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == n - 1) {
        a[static_cast<std::size_t>(i)] = left;
        Integer denom = 1;
        for (int x : a) denom *= factorial(static_cast<unsigned long>(x));
        EXPECT_EQ(psi_integral(0, a), make_rational(factorial(static_cast<unsigned long>(n - 3)), denom));
        return;
      }
      for (int x = 0; x <= left; ++x) {
        a[static_cast<std::size_t>(i)] = x;
        rec(i + 1, left - x);
      }
    };
    rec(0, n - 3);
  }
}

TEST(PsiIntegrals, ClosedFormsStringDilaton) {
  for (int g = 1; g <= 6; ++g) {
    Integer d = factorial(static_cast<unsigned long>(g));
    for (int i = 0; i < g; ++i) d *= 24;
    EXPECT_EQ(psi_integral(g, {3 * g - 2}), make_rational(1, d)) << g;
  }
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(psi_integral(1, std::vector<int>(static_cast<std::size_t>(n), 1)),
              make_rational(factorial(static_cast<unsigned long>(n - 1)), 24));
  }
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int g = static_cast<int>(rng() % 4), n = 1 + static_cast<int>(rng() % 4);
    if (2 * g - 2 + n <= 0) continue;
    int dim = 3 * g - 3 + n;
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < dim; ++k) ++a[rng() % static_cast<unsigned>(n)];
    Rational base = psi_integral(g, a);
    // string: b has one more unit of degree than a, so tau_0 b is graded
    std::vector<int> b = a;
    ++b[rng() % static_cast<unsigned>(n)];
    std::vector<int> with0 = b;
    with0.push_back(0);
    Rational s = 0;
    for (int i = 0; i < n; ++i) {
      if (b[static_cast<std::size_t>(i)] == 0) continue;
      std::vector<int> c = b;
      --c[static_cast<std::size_t>(i)];
      s += psi_integral(g, c);
    }
    EXPECT_EQ(psi_integral(g, with0), s);
    // dilaton
    std::vector<int> with1 = a;
    with1.push_back(1);
    EXPECT_EQ(psi_integral(g, with1), Rational(2 * g - 2 + n) * base);
    // symmetry
    std::vector<int> shuffled = a;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(psi_integral(g, shuffled), base);
  }
}

TEST(KappaIntegrals, Examples) {
  EXPECT_EQ(kappa_psi_integral(1, {0}, {1}), make_rational(1, 24));
  EXPECT_EQ(kappa_psi_integral(1, {0}, {1}), psi_integral(1, {0, 2}));
  EXPECT_EQ(kappa_psi_integral(0, {0, 0, 0}, {}), 1);
  EXPECT_EQ(kappa_psi_integral(2, {2, 3}, {}), psi_integral(2, {2, 3}));
  EXPECT_EQ(kappa_psi_integral(0, {0, 0, 0, 0}, {1}), 1);
  EXPECT_EQ(kappa_psi_integral(2, {}, {3}), make_rational(1, 1152));
  EXPECT_EQ(kappa_psi_integral(2, {}, {1, 2}), make_rational(1, 240));
  EXPECT_EQ(kappa_psi_integral(2, {}, {1, 1, 1}), make_rational(43, 2880));
  EXPECT_THROW(kappa_psi_integral(1, {0}, {2}), std::invalid_argument);
}

// pi_* (psi_{n+1}^{b_1+1} ... psi_{n+r}^{b_r+1}) = sum over permutations of
// the product over cycles of kappa_{sum of b on the cycle}.
TEST(KappaIntegrals, PushforwardOverPermutations) {
  struct Case {
    int g;
    std::vector<int> a, b;
  };
  std::vector<Case> cases{{2, {}, {1, 1, 1}}, {2, {}, {1, 2}}, {1, {0, 0}, {1, 1}}, {2, {1}, {1, 1, 1}},
                          {0, {0, 0, 0, 0, 0}, {1, 1}}, {3, {}, {2, 2, 2}}, {1, {0, 0}, {2}}, {0, {0, 0, 0, 0, 0, 0}, {1, 1, 1}}};
  for (const auto& c : cases) {
    int r = static_cast<int>(c.b.size());
    std::vector<int> perm(static_cast<std::size_t>(r));
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    do {
      std::vector<bool> seen(static_cast<std::size_t>(r), false);
      std::vector<int> kappas;
      for (int i = 0; i < r; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int s = 0;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = perm[static_cast<std::size_t>(j)]) {
          seen[static_cast<std::size_t>(j)] = true;
          s += c.b[static_cast<std::size_t>(j)];
        }
        kappas.push_back(s);
      }
      std::sort(kappas.begin(), kappas.end());
      total += kappa_psi_integral(c.g, c.a, kappas);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<int> lifted = c.a;
    for (int x : c.b) lifted.push_back(x + 1);
    EXPECT_EQ(total, psi_integral(c.g, lifted)) << c.g;
  }
}

TEST(HodgeIntegrals, LambdaCubed) {
  EXPECT_EQ(hodge_lambda_cubed(2), make_rational(1, 2880));
  EXPECT_EQ(hodge_lambda_cubed(3), make_rational(1, 252) * make_rational(1, 120) * make_rational(1, 24));
  for (int g = 2; g <= 20; ++g) {
    Rational want = abs(bernoulli(static_cast<unsigned>(2 * g))) / (2 * g) * abs(bernoulli(static_cast<unsigned>(2 * g - 2))) /
                    (2 * g - 2) / Rational(factorial(static_cast<unsigned long>(2 * g - 2)));
    EXPECT_EQ(hodge_lambda_cubed(g), want);
    EXPECT_GT(hodge_lambda_cubed(g), 0);
  }
  EXPECT_THROW(hodge_lambda_cubed(1), std::invalid_argument);
}

TEST(Hyperelliptic, Delta) {
  ClassPolynomial d2{{psi_power(1), 3}, {lambda_class(1), -1}};
  EXPECT_EQ(hyperelliptic_delta(2), d2);
  ClassPolynomial d3{{psi_power(2), 7}, {lambda_class(1) * psi_power(1), -3}, {lambda_class(2), 1}};
  EXPECT_EQ(hyperelliptic_delta(3), d3);
  for (int g = 2; g <= 8; ++g) {
    EXPECT_EQ(hyperelliptic_delta(g).coefficient(psi_power(g - 1)), (1 << g) - 1);
    EXPECT_TRUE(hyperelliptic_delta(g).is_homogeneous());
  }
}

TEST(Hyperelliptic, Locus) {
  EXPECT_EQ(hyperelliptic_locus(2).to_string(), "1");
  ClassPolynomial h3{{kappa_class(1), make_rational(7, 8)}, {lambda_class(1), make_rational(-12, 8)}};
  EXPECT_EQ(hyperelliptic_locus(3), h3);
  for (int g = 2; g <= 7; ++g) {
    EXPECT_EQ(hyperelliptic_locus(g).degree(), g - 2);
    EXPECT_TRUE(hyperelliptic_locus(g).is_homogeneous());
  }
  EXPECT_THROW(hyperelliptic_locus(1), std::invalid_argument);
}

DecoratedGenerator smooth_with_psi(int g, std::vector<int> psi) {
  auto gen = DecoratedGenerator::undecorated(StableGraph::smooth(g, static_cast<int>(psi.size())));
  gen.leg_psi = std::move(psi);
  return gen;
}

TEST(Length, SmoothGenerators) {
  EXPECT_EQ(generator_length(smooth_with_psi(2, {0, 0, 0})).length, 1);
  EXPECT_EQ(generator_length(smooth_with_psi(1, {0, 0})).length, 1);
  EXPECT_EQ(generator_length(smooth_with_psi(2, {1, 0, 0})).length, 2);
  EXPECT_EQ(generator_length(smooth_with_psi(3, {1, 1, 0, 0})).length, 2);
  EXPECT_EQ(generator_length(smooth_with_psi(3, {2, 0, 0})).length, 2);
  EXPECT_EQ(generator_length(smooth_with_psi(3, {1, 1})).length, 1);
  EXPECT_EQ(young_bound(smooth_with_psi(3, {2, 1, 0, 0})), 3);
}

TEST(Length, GenusZeroBound) {
  for (int n = 3; n <= 8; ++n) {
    for (int k = 0; k <= n - 3; ++k) {
      int bound = std::min(k + 1, n - k - 2);
      for_each_generator(0, k, unnumbered_legs(n), [&](const DecoratedGenerator& gen) {
        auto r = generator_length(gen);
        EXPECT_TRUE(r.pass);
        EXPECT_LE(r.length, bound) << gen.to_string();
        EXPECT_EQ(r.theorem_bound, bound);
      });
    }
  }
}

TEST(Length, CutAndGlue) {
  auto g = enumerate_stable_graphs(1, 1);
  auto loop = std::find_if(g.begin(), g.end(), [](const StableGraph& x) { return x.edge_count() == 1; });
  ASSERT_NE(loop, g.end());
  auto gen = DecoratedGenerator::undecorated(*loop);
  auto cut = cut_edge(gen, 0);
  EXPECT_EQ(cut.legs(), 3);
  EXPECT_EQ(cut.genus(), 0);
  EXPECT_EQ(cut.graph.edge_count(), 0);
  EXPECT_EQ(generator_length(gen).length, 1);
}

}  // namespace
}  // namespace mgn::tautcalc
