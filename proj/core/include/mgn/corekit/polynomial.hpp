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

#ifndef MGN_COREKIT_POLYNOMIAL_HPP_
#define MGN_COREKIT_POLYNOMIAL_HPP_

#include <string>
#include <vector>

#include "mgn/corekit/rational.hpp"

namespace mgn {

// Univariate polynomial with exact rational coefficients, lowest degree
// first. The leading coefficient is nonzero unless the polynomial is zero.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  static RationalPolynomial monomial(unsigned degree, const Rational& c = 1);
  static RationalPolynomial constant(const Rational& c);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  // Coefficient of x^i, zero past the degree.
  Rational coefficient(std::size_t i) const;

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
  bool has_integer_coefficients() const;

  Rational operator()(const Integer& x) const;
  Rational operator()(const Rational& x) const;

  RationalPolynomial& operator+=(const RationalPolynomial& other);
  RationalPolynomial& operator-=(const RationalPolynomial& other);
  RationalPolynomial& operator*=(const RationalPolynomial& other);
  RationalPolynomial& operator*=(const Rational& c);

  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) {
    return a += b;
  }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) {
    return a -= b;
  }
  friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) {
    return a *= b;
  }
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Human-readable form, e.g. "x^2 - 3/2*x + 1".
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

inline Rational poly_eval(const RationalPolynomial& f, const Integer& x) { return f(x); }

}  // namespace mgn

#endif  // MGN_COREKIT_POLYNOMIAL_HPP_
