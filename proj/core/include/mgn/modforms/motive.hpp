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

#ifndef MGN_MODFORMS_MOTIVE_HPP_
#define MGN_MODFORMS_MOTIVE_HPP_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "mgn/corekit/rational.hpp"

namespace mgn::modforms {

// L^e: Frobenius trace p^e.
struct LPower {
  int exponent;
  friend bool operator==(const LPower&, const LPower&) = default;
};
// S[k]: trace is the sum of the a_p of a weight-k eigenbasis. S[2] = -L - 1.
struct CuspMotive {
  int weight;
  friend bool operator==(const CuspMotive&, const CuspMotive&) = default;
};
// The unit motive (trace 1).
struct UnitMotive {
  friend bool operator==(const UnitMotive&, const UnitMotive&) = default;
};

using MotiveToken = std::variant<LPower, CuspMotive, UnitMotive>;

struct MotiveTerm {
  Rational coefficient;
  MotiveToken token;
};

// Formal Q-linear combination of tokens.
class MotiveExpr {
 public:
  MotiveExpr() = default;
  MotiveExpr(std::initializer_list<MotiveTerm> terms) : terms_(terms) {}

  static MotiveExpr L(int exponent, const Rational& c = 1);
  static MotiveExpr S(int weight, const Rational& c = 1);
  static MotiveExpr unit(const Rational& c = 1);

  const std::vector<MotiveTerm>& terms() const { return terms_; }

  MotiveExpr& operator+=(const MotiveExpr& other);
  MotiveExpr& operator*=(const Rational& c);
  friend MotiveExpr operator+(MotiveExpr a, const MotiveExpr& b) { return a += b; }
  friend MotiveExpr operator-(MotiveExpr a, MotiveExpr b) { return a += (b *= Rational(-1)); }
  friend MotiveExpr operator*(const Rational& c, MotiveExpr a) { return a *= c; }

  std::string to_string() const;

 private:
  std::vector<MotiveTerm> terms_;
};

// SK[0, m+1] = S[2m] + s_{2m} (L^{m-1} + L^m). Constructor only.
MotiveExpr saito_kurokawa_motive(int m);

// -S[a+2] - 1, the compactly supported Euler characteristic of V_a on M_{1,1}.
MotiveExpr euler_char_ec_motive(int a);

// Trace of Frobenius at p. Throws std::invalid_argument when a token S[k]
// has s_k > 1 or p is outside the eigenform truncation.
Rational motive_trace(const MotiveExpr& expr, std::uint32_t p);

}  // namespace mgn::modforms

#endif  // MGN_MODFORMS_MOTIVE_HPP_
