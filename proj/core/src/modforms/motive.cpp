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

#include "mgn/modforms/motive.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "mgn/corekit/prime_field.hpp"
#include "mgn/modforms/eigenform.hpp"

namespace mgn::modforms {

MotiveExpr MotiveExpr::L(int exponent, const Rational& c) { return MotiveExpr{{c, LPower{exponent}}}; }
MotiveExpr MotiveExpr::S(int weight, const Rational& c) { return MotiveExpr{{c, CuspMotive{weight}}}; }
MotiveExpr MotiveExpr::unit(const Rational& c) { return MotiveExpr{{c, UnitMotive{}}}; }

MotiveExpr& MotiveExpr::operator+=(const MotiveExpr& other) {
  for (const auto& t : other.terms_) {
    auto it = std::find_if(terms_.begin(), terms_.end(),
                           [&](const MotiveTerm& u) { return u.token == t.token; });
    if (it == terms_.end()) {
      terms_.push_back(t);
    } else {
      it->coefficient += t.coefficient;
    }
  }
  std::erase_if(terms_, [](const MotiveTerm& t) { return t.coefficient == 0; });
  return *this;
}

MotiveExpr& MotiveExpr::operator*=(const Rational& c) {
  for (auto& t : terms_) t.coefficient *= c;
  std::erase_if(terms_, [](const MotiveTerm& t) { return t.coefficient == 0; });
  return *this;
}

std::string MotiveExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string name = std::visit(
        [](const auto& tok) -> std::string {
          using T = std::decay_t<decltype(tok)>;
          if constexpr (std::is_same_v<T, LPower>) return "L^" + std::to_string(tok.exponent);
          if constexpr (std::is_same_v<T, CuspMotive>) return "S[" + std::to_string(tok.weight) + "]";
          return "1";
        },
        t.token);
    Rational mag = abs(t.coefficient);
    if (!out.empty()) out += t.coefficient < 0 ? " - " : " + ";
    else if (t.coefficient < 0) out += "-";
    if (mag != 1 || name == "1") out += (name == "1" ? mag.get_str() : mag.get_str() + "*");
    if (name != "1") out += name;
  }
  return out;
}

MotiveExpr saito_kurokawa_motive(int m) {
  MotiveExpr e = MotiveExpr::S(2 * m);
  int s = dim_Sk(2 * m);
  if (s != 0) e += MotiveExpr::L(m - 1, s) + MotiveExpr::L(m, s);
  return e;
}

MotiveExpr euler_char_ec_motive(int a) {
  return MotiveExpr::S(a + 2, -1) + MotiveExpr::unit(-1);
}

namespace {

const EigenformTable& cached_eigenform(int k) {
  static std::mutex mu;
  static std::map<int, EigenformTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, eigenform(k, kDefaultOrder)).first;
  return it->second;
}

Rational cusp_trace(int k, std::uint32_t p) {
  if (k == 2) return -Rational(p) - 1;
  int s = dim_Sk(k);
  if (s == 0) return 0;
  if (s > 1) {
    throw std::invalid_argument("motive_trace: S[" + std::to_string(k) +
                                "] has a cusp space of dimension > 1; not supported");
  }
  const EigenformTable& f = cached_eigenform(k);
  if (static_cast<int>(p) > f.max_index()) {
    throw std::invalid_argument("motive_trace: p = " + std::to_string(p) +
                                " lies outside the eigenform truncation");
  }
  return Rational(f(static_cast<int>(p)));
}

}  // namespace

Rational motive_trace(const MotiveExpr& expr, std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("motive_trace: p must be prime");
  Rational total = 0;
  for (const auto& t : expr.terms()) {
    Rational tr = std::visit(
        [&](const auto& tok) -> Rational {
          using T = std::decay_t<decltype(tok)>;
          if constexpr (std::is_same_v<T, LPower>) {
            if (tok.exponent >= 0) return Rational(ipow(Integer(p), tok.exponent));
            return Rational(1) / Rational(ipow(Integer(p), -tok.exponent));
          } else if constexpr (std::is_same_v<T, CuspMotive>) {
            return cusp_trace(tok.weight, p);
          } else {
            return Rational(1);
          }
        },
        t.token);
    total += t.coefficient * tr;
  }
  return total;
}

}  // namespace mgn::modforms
