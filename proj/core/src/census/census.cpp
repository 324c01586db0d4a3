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

#include "mgn/census/census.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "mgn/census/curves.hpp"
#include "mgn/corekit/prime_field.hpp"
#include "small_poly.hpp"

namespace mgn::census {

namespace {

using Histogram = std::vector<std::uint64_t>;
using RangeWorker = std::function<void(std::uint64_t, std::uint64_t, Histogram&)>;

// Splits [0, count) into contiguous chunks, one per worker, and sums the
// per-worker histograms. The sum is exact, so the result does not depend on
// the number of workers.
Histogram run_partitioned(std::uint64_t count, std::size_t bins, unsigned threads,
                          const RangeWorker& work) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::uint64_t>(count, 1))));
  std::vector<Histogram> partial(threads, Histogram(bins, 0));
  std::vector<std::thread> pool;
  std::uint64_t chunk = count / threads, extra = count % threads, begin = 0;
  for (unsigned t = 0; t < threads; ++t) {
    std::uint64_t end = begin + chunk + (t < extra ? 1 : 0);
    if (threads == 1) {
      work(begin, end, partial[t]);
    } else {
      pool.emplace_back([&, t, begin, end] { work(begin, end, partial[t]); });
    }
    begin = end;
  }
  for (auto& th : pool) th.join();
  Histogram total(bins, 0);
  for (const auto& h : partial)
    for (std::size_t i = 0; i < bins; ++i) total[i] += h[i];
  return total;
}

PointHistogram g1_short(const PrimeField& f, unsigned threads) {
  const std::uint32_t p = f.p();
  std::vector<std::uint32_t> cube(p);
  for (std::uint32_t x = 0; x < p; ++x) cube[x] = f.mul(f.mul(x, x), x);
  auto work = [&](std::uint64_t begin, std::uint64_t end, Histogram& h) {
    std::vector<std::uint32_t> base(p);
    for (std::uint64_t a = begin; a < end; ++a) {
      for (std::uint32_t x = 0; x < p; ++x) base[x] = f.add(cube[x], f.mul(static_cast<std::uint32_t>(a), x));
      for (std::uint32_t b = 0; b < p; ++b) {
        if (!is_nonsingular(WeierstrassShort{static_cast<std::uint32_t>(a), b}, f)) continue;
        std::int64_t n = static_cast<std::int64_t>(p) + 1;
        for (std::uint32_t x = 0; x < p; ++x) n += f.chi(f.add(base[x], b));
        ++h[static_cast<std::size_t>(n)];
      }
    }
  };
  PointHistogram out;
  out.models_with_points = run_partitioned(p, 2 * p + 3, threads, work);
  out.group_order = Integer(p - 1);
  out.method = kMethodG1Short;
  return out;
}

PointHistogram g1_long(const PrimeField& f, unsigned threads) {
  const std::uint32_t p = f.p();
  const std::uint64_t p4 = static_cast<std::uint64_t>(p) * p * p * p;
  auto work = [&](std::uint64_t begin, std::uint64_t end, Histogram& h) {
    for (std::uint64_t a1 = begin; a1 < end; ++a1) {
      for (std::uint64_t rest = 0; rest < p4; ++rest) {
        std::uint64_t r = rest;
        WeierstrassLong e;
        e.a1 = static_cast<std::uint32_t>(a1);
        e.a2 = static_cast<std::uint32_t>(r % p); r /= p;
        e.a3 = static_cast<std::uint32_t>(r % p); r /= p;
        e.a4 = static_cast<std::uint32_t>(r % p); r /= p;
        e.a6 = static_cast<std::uint32_t>(r % p);
        if (!is_nonsingular(e, f)) continue;
        ++h[count_points_g1(e, f)];
      }
    }
  };
  PointHistogram out;
  out.models_with_points = run_partitioned(p, 2 * p + 3, threads, work);
  out.group_order = Integer(p - 1) * ipow(Integer(p), 3);
  out.method = kMethodG1Long;
  return out;
}

// Monic polynomials x^deg + ... with c_{deg-1} = 0 when depressed. Each
// representative stands for `weight` monic forms (its translates) and for
// (p-1)/2 square and (p-1)/2 non-square leading scalars; the latter are the
// quadratic twists with 2p + 2 - N points.
void accumulate_monic(const PrimeField& field, int deg, bool depressed, std::uint64_t weight,
                      unsigned threads, Histogram& hist) {
  const std::uint32_t p = field.p();
  detail::TableField f(field);
  std::vector<int> free_idx;
  for (int i = 1; i < deg; ++i) {
    if (depressed && i == deg - 1) continue;
    free_idx.push_back(i);
  }
  std::uint64_t outer = 1;
  for (std::size_t i = 0; i < free_idx.size(); ++i) outer *= p;

  std::vector<std::vector<std::uint32_t>> pw(deg + 1, std::vector<std::uint32_t>(p));
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint32_t v = 1 % p;
    for (int i = 0; i <= deg; ++i) {
      pw[i][x] = v;
      v = f.mul(v, x);
    }
  }
  const std::uint64_t half = (p - 1) / 2;
  const std::uint32_t at_infinity = deg == 6 ? 2 : 1;
  const std::int8_t* chi = field.chi_table().data();

  auto work = [&](std::uint64_t begin, std::uint64_t end, Histogram& h) {
    std::vector<std::uint32_t> base(p);
    detail::Coeffs a{};
    for (std::uint64_t t = begin; t < end; ++t) {
      a.fill(0);
      a[deg] = 1;
      std::uint64_t r = t;
      for (int i : free_idx) {
        a[i] = static_cast<std::uint32_t>(r % p);
        r /= p;
      }
      for (std::uint32_t x = 0; x < p; ++x) {
        std::uint32_t v = pw[deg][x];
        for (int i : free_idx) v = f.add(v, f.mul(a[i], pw[i][x]));
        base[x] = v;
      }
      for (std::uint32_t c0 = 0; c0 < p; ++c0) {
        a[0] = c0;
        if (!detail::poly_squarefree(a, deg, f)) continue;
        std::int64_t n = static_cast<std::int64_t>(p) + at_infinity;
        for (std::uint32_t x = 0; x < p; ++x) {
          std::uint32_t v = base[x] + c0;
          n += chi[v >= p ? v - p : v];
        }
        h[static_cast<std::size_t>(n)] += weight * half;
        h[static_cast<std::size_t>(2 * p + 2 - n)] += weight * half;
      }
    }
  };
  Histogram part = run_partitioned(outer, hist.size(), threads, work);
  for (std::size_t i = 0; i < hist.size(); ++i) hist[i] += part[i];
}

PointHistogram g2_full(const PrimeField& field, unsigned threads) {
  const std::uint32_t p = field.p();
  detail::TableField f(field);
  const std::uint64_t p5 = static_cast<std::uint64_t>(p) * p * p * p * p;
  auto work = [&](std::uint64_t begin, std::uint64_t end, Histogram& h) {
    BinarySextic s;
    for (std::uint64_t top = begin; top < end; ++top) {
      s.c[6] = static_cast<std::uint32_t>(top / p);
      s.c[5] = static_cast<std::uint32_t>(top % p);
      if (s.c[6] == 0 && s.c[5] == 0) continue;
      for (std::uint64_t rest = 0; rest < p5; ++rest) {
        std::uint64_t r = rest;
        for (int i = 0; i < 5; ++i) {
          s.c[i] = static_cast<std::uint32_t>(r % p);
          r /= p;
        }
        if (!is_squarefree(s, field)) continue;
        ++h[count_points_g2(s, field)];
      }
    }
  };
  PointHistogram out;
  out.models_with_points = run_partitioned(static_cast<std::uint64_t>(p) * p, 2 * p + 3, threads, work);
  return out;
}

}  // namespace

std::uint64_t PointHistogram::total_models() const {
  return std::accumulate(models_with_points.begin(), models_with_points.end(), std::uint64_t{0});
}

PointHistogram g1_histogram(std::uint32_t p, G1Model model, unsigned threads) {
  PrimeField f(p);
  if (model == G1Model::kAuto) model = p >= 5 ? G1Model::kShort : G1Model::kLong;
  if (model == G1Model::kShort) {
    if (p < 5) throw std::invalid_argument("g1_histogram: short forms need p >= 5");
    return g1_short(f, threads);
  }
  return g1_long(f, threads);
}

PointHistogram g2_histogram(std::uint32_t p, G2Enumeration mode, unsigned threads) {
  if (p == 2) throw std::invalid_argument("genus-2 census is not defined for p = 2");
  PrimeField f(p);
  PointHistogram out;
  if (mode == G2Enumeration::kFull) {
    out = g2_full(f, threads);
  } else {
    out.models_with_points.assign(2 * p + 3, 0);
    // x -> x + t shifts c5 by 6t (sextic) or c4 by 5t (quintic).
    bool depress6 = p % 3 != 0;
    bool depress5 = p != 5;
    accumulate_monic(f, 6, depress6, depress6 ? p : 1, threads, out.models_with_points);
    accumulate_monic(f, 5, depress5, depress5 ? p : 1, threads, out.models_with_points);
  }
  Integer q(p);
  out.group_order = (q * q - 1) * (q * q - q);
  out.method = kMethodG2Sextic;
  return out;
}

Rational g1_count_from_histogram(const PointHistogram& h, int n) {
  if (n < 1) throw std::invalid_argument("genus-1 census needs n >= 1");
  Integer total = 0;
  for (std::size_t N = 0; N < h.models_with_points.size(); ++N) {
    if (h.models_with_points[N] == 0) continue;
    total += Integer(static_cast<unsigned long>(h.models_with_points[N])) *
             falling_factorial(static_cast<long>(N) - 1, n - 1);
  }
  return make_rational(total, h.group_order);
}

Rational g2_count_from_histogram(const PointHistogram& h, int n) {
  if (n < 0) throw std::invalid_argument("genus-2 census needs n >= 0");
  Integer total = 0;
  for (std::size_t N = 0; N < h.models_with_points.size(); ++N) {
    if (h.models_with_points[N] == 0) continue;
    total += Integer(static_cast<unsigned long>(h.models_with_points[N])) *
             falling_factorial(static_cast<long>(N), n);
  }
  return make_rational(total, h.group_order);
}

std::vector<CensusRecord> census_g1(std::uint32_t p, int n_max, unsigned threads, G1Model model) {
  if (n_max < 1) throw std::invalid_argument("census_g1: n_max must be >= 1");
  PointHistogram h = g1_histogram(p, model, threads);
  std::vector<CensusRecord> out;
  for (int n = 1; n <= n_max; ++n) out.push_back({1, n, p, g1_count_from_histogram(h, n), h.method, kCensusVersion});
  return out;
}

std::vector<CensusRecord> census_g2(std::uint32_t p, int n_max, unsigned threads, G2Enumeration mode) {
  if (n_max < 0) throw std::invalid_argument("census_g2: n_max must be >= 0");
  PointHistogram h = g2_histogram(p, mode, threads);
  std::vector<CensusRecord> out;
  for (int n = 0; n <= n_max; ++n) out.push_back({2, n, p, g2_count_from_histogram(h, n), h.method, kCensusVersion});
  return out;
}

}  // namespace mgn::census
