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

#ifndef MGN_MODFORMS_QSERIES_HPP_
#define MGN_MODFORMS_QSERIES_HPP_

#include <cstdint>
#include <vector>

#include "mgn/corekit/rational.hpp"

namespace mgn::modforms {

inline constexpr int kDefaultOrder = 200;

// Truncated q-expansion sum_{n < order} a_n q^n of a level-one form of a
// given weight. Sums require equal weights; products add weights. The order
// of any combination is the minimum of the operands' orders.
class QSeries {
 public:
  QSeries(int weight, std::vector<Rational> coefficients);
  static QSeries zero(int weight, int order);
  static QSeries one(int order);

  int weight() const { return weight_; }
  int order() const { return static_cast<int>(coeffs_.size()); }
  const Rational& operator[](int n) const { return coeffs_.at(n); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool has_integer_coefficients() const;

  QSeries truncated(int order) const;

  QSeries& operator+=(const QSeries& other);
  QSeries& operator-=(const QSeries& other);
  QSeries& operator*=(const Rational& c);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.weight_ == b.weight_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void require_same_weight(const QSeries& other) const;
  int weight_;
  std::vector<Rational> coeffs_;
};

// sigma_m(n) = sum of d^m over positive divisors d of n.
Integer divisor_sigma(unsigned m, std::uint64_t n);

// E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^n. Requires k even, k >= 4.
QSeries eisenstein(int k, int order = kDefaultOrder);

// Delta = q prod (1 - q^n)^24, built from the product. Requires order >= 2.
QSeries delta(int order = kDefaultOrder);
// Delta = (E_4^3 - E_6^2) / 1728; the independent construction.
QSeries delta_from_eisenstein(int order = kDefaultOrder);

// m_k = #{(a, b) >= 0 : 4a + 6b = k}; zero for odd or negative k.
int dim_Mk(int k);
// s_k = m_k - 1 for even k >= 4, zero otherwise.
int dim_Sk(int k);

// (T_p f)(n) = a(np) + p^{k-1} a(n/p), the second term only when p | n.
// The result has floor(order / p) terms. Requires weight >= 4, p prime and
// at least one output term.
QSeries hecke_Tp(const QSeries& f, std::uint32_t p);

}  // namespace mgn::modforms

#endif  // MGN_MODFORMS_QSERIES_HPP_
