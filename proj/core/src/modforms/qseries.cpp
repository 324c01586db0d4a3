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

#include "mgn/modforms/qseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mgn/corekit/bernoulli.hpp"
#include "mgn/corekit/prime_field.hpp"

namespace mgn::modforms {

QSeries::QSeries(int weight, std::vector<Rational> coefficients)
    : weight_(weight), coeffs_(std::move(coefficients)) {
  if (weight < 0 || weight % 2 != 0) {
    throw std::invalid_argument("QSeries: weight must be even and nonnegative");
  }
  for (auto& c : coeffs_) c.canonicalize();
}

QSeries QSeries::zero(int weight, int order) {
  return QSeries(weight, std::vector<Rational>(std::max(order, 0), Rational(0)));
}

QSeries QSeries::one(int order) {
  QSeries s = zero(0, order);
  if (order > 0) s.coeffs_[0] = 1;
  return s;
}

bool QSeries::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
}

QSeries QSeries::truncated(int order) const {
  if (order > this->order()) throw std::invalid_argument("QSeries: cannot extend truncation");
  return QSeries(weight_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order));
}

void QSeries::require_same_weight(const QSeries& other) const {
  if (weight_ != other.weight_) {
    throw std::invalid_argument("QSeries: weight mismatch " + std::to_string(weight_) + " vs " +
                                std::to_string(other.weight_));
  }
}

QSeries& QSeries::operator+=(const QSeries& other) {
  require_same_weight(other);
  coeffs_.resize(std::min(order(), other.order()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) {
  require_same_weight(other);
  coeffs_.resize(std::min(order(), other.order()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

QSeries& QSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  int n = std::min(a.order(), b.order());
  std::vector<Rational> out(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; i + j < n; ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QSeries(a.weight_ + b.weight_, std::move(out));
}

Integer divisor_sigma(unsigned m, std::uint64_t n) {
  Integer acc = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    acc += ipow(Integer(static_cast<unsigned long>(d)), m);
    std::uint64_t e = n / d;
    if (e != d) acc += ipow(Integer(static_cast<unsigned long>(e)), m);
  }
  return acc;
}

QSeries eisenstein(int k, int order) {
  if (k < 4 || k % 2 != 0) {
    throw std::invalid_argument("eisenstein: weight must be even and >= 4, got " + std::to_string(k));
  }
  std::vector<Rational> c(std::max(order, 0), Rational(0));
  if (order > 0) c[0] = 1;
  Rational factor = Rational(-2 * k) / bernoulli(static_cast<unsigned>(k));
  for (int n = 1; n < order; ++n) c[n] = factor * Rational(divisor_sigma(k - 1, n));
  return QSeries(k, std::move(c));
}

QSeries delta(int order) {
  if (order < 2) throw std::invalid_argument("delta: order must be >= 2");
  // prod_{n >= 1} (1 - q^n)^24 truncated at q^{order-1}, then shift by q.
  std::vector<Integer> prod(order, Integer(0));
  prod[0] = 1;
  for (int n = 1; n < order; ++n) {
    for (int rep = 0; rep < 24; ++rep) {
      for (int i = order - 1; i >= n; --i) prod[i] -= prod[i - n];
    }
  }
  std::vector<Rational> c(order, Rational(0));
  for (int i = 1; i < order; ++i) c[i] = Rational(prod[i - 1]);
  return QSeries(12, std::move(c));
}

QSeries delta_from_eisenstein(int order) {
  QSeries e4 = eisenstein(4, order);
  QSeries e6 = eisenstein(6, order);
  QSeries d = e4 * e4 * e4 - e6 * e6;
  return d * Rational(1, 1728);
}

int dim_Mk(int k) {
  if (k < 0 || k % 2 != 0) return 0;
  int count = 0;
  for (int a = 0; 4 * a <= k; ++a) {
    if ((k - 4 * a) % 6 == 0) ++count;
  }
  return count;
}

int dim_Sk(int k) {
  if (k < 4 || k % 2 != 0) return 0;
  return dim_Mk(k) - 1;
}

QSeries hecke_Tp(const QSeries& f, std::uint32_t p) {
  if (f.weight() < 4) throw std::invalid_argument("hecke_Tp: weight must be >= 4");
  if (!is_prime(p)) throw std::invalid_argument("hecke_Tp: " + std::to_string(p) + " is not prime");
  int out_order = f.order() / static_cast<int>(p);
  if (out_order < 1) {
    throw std::invalid_argument("hecke_Tp: truncation order " + std::to_string(f.order()) +
                                " too small for p = " + std::to_string(p));
  }
  Rational pk = Rational(ipow(Integer(p), f.weight() - 1));
  std::vector<Rational> c(out_order, Rational(0));
  for (int n = 0; n < out_order; ++n) {
    c[n] = f[n * static_cast<int>(p)];
    if (n % static_cast<int>(p) == 0) c[n] += pk * f[n / static_cast<int>(p)];
  }
  return QSeries(f.weight(), std::move(c));
}

}  // namespace mgn::modforms
