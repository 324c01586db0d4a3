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

#ifndef MGN_TAUTCALC_HYPERELLIPTIC_HPP_
#define MGN_TAUTCALC_HYPERELLIPTIC_HPP_

#include <map>
#include <string>
#include <vector>

#include "mgn/corekit/rational.hpp"

namespace mgn::tautcalc {

// psi^a * lambda_1^{l_1} ... * kappa_{k_1} ... with kappa indices >= 1.
struct ClassMonomial {
  int psi = 0;
  std::vector<int> lambda;  // lambda[i-1] = exponent of lambda_i, no trailing zeros
  std::vector<int> kappa;   // sorted ascending

  int degree() const;
  friend auto operator<=>(const ClassMonomial&, const ClassMonomial&) = default;
  friend bool operator==(const ClassMonomial&, const ClassMonomial&) = default;
};

ClassMonomial psi_power(int a);
ClassMonomial lambda_class(int i);
ClassMonomial kappa_class(int j);
ClassMonomial operator*(const ClassMonomial& a, const ClassMonomial& b);

// Q-linear combination of monomials; zero coefficients are dropped.
class ClassPolynomial {
 public:
  ClassPolynomial() = default;
  ClassPolynomial(std::initializer_list<std::pair<ClassMonomial, Rational>> terms);

  void add(const ClassMonomial& m, const Rational& c);
  const std::map<ClassMonomial, Rational>& terms() const { return terms_; }
  Rational coefficient(const ClassMonomial& m) const;
  ClassPolynomial& operator*=(const Rational& c);
  friend bool operator==(const ClassPolynomial&, const ClassPolynomial&) = default;

  // Highest total degree, -1 for zero; true when every term has that degree.
  int degree() const;
  bool is_homogeneous() const;
  // e.g. "7/8*kappa1 - 3/2*lambda1"; "0" when empty.
  std::string to_string() const;

 private:
  std::map<ClassMonomial, Rational> terms_;
};

// Degree g-1 part of (1 - lambda_1 + ... + (-1)^g lambda_g) / ((1 - psi)(1 - 2 psi)).
// Requires g >= 2.
ClassPolynomial hyperelliptic_delta(int g);

// (1/(2g+2)) pi_* hyperelliptic_delta(g), with pi_*(psi^j lambda) = kappa_{j-1}
// lambda, kappa_0 = 2g - 2, and pi_* of psi-free terms zero. Requires g >= 2.
ClassPolynomial hyperelliptic_locus(int g);

}  // namespace mgn::tautcalc

#endif  // MGN_TAUTCALC_HYPERELLIPTIC_HPP_
