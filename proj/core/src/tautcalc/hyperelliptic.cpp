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

#include "mgn/tautcalc/hyperelliptic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mgn::tautcalc {

int ClassMonomial::degree() const {
  int d = psi;
  for (std::size_t i = 0; i < lambda.size(); ++i) d += static_cast<int>(i + 1) * lambda[i];
  for (int j : kappa) d += j;
  return d;
}

ClassMonomial psi_power(int a) {
  ClassMonomial m;
  m.psi = a;
  return m;
}

ClassMonomial lambda_class(int i) {
  ClassMonomial m;
  if (i > 0) {
    m.lambda.assign(static_cast<std::size_t>(i), 0);
    m.lambda.back() = 1;
  }
  return m;
}

ClassMonomial kappa_class(int j) {
  if (j < 1) throw std::invalid_argument("kappa_class: index >= 1 required");
  ClassMonomial m;
  m.kappa = {j};
  return m;
}

ClassMonomial operator*(const ClassMonomial& a, const ClassMonomial& b) {
  ClassMonomial m;
  m.psi = a.psi + b.psi;
  m.lambda.assign(std::max(a.lambda.size(), b.lambda.size()), 0);
  for (std::size_t i = 0; i < a.lambda.size(); ++i) m.lambda[i] += a.lambda[i];
  for (std::size_t i = 0; i < b.lambda.size(); ++i) m.lambda[i] += b.lambda[i];
  while (!m.lambda.empty() && m.lambda.back() == 0) m.lambda.pop_back();
  m.kappa = a.kappa;
  m.kappa.insert(m.kappa.end(), b.kappa.begin(), b.kappa.end());
  std::sort(m.kappa.begin(), m.kappa.end());
  return m;
}

ClassPolynomial::ClassPolynomial(std::initializer_list<std::pair<ClassMonomial, Rational>> terms) {
  for (const auto& [m, c] : terms) add(m, c);
}

void ClassPolynomial::add(const ClassMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational ClassPolynomial::coefficient(const ClassMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

ClassPolynomial& ClassPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

int ClassPolynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool ClassPolynomial::is_homogeneous() const {
  int d = degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

std::string ClassPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::vector<std::string> factors;
    if (m.psi == 1) factors.push_back("psi");
    if (m.psi > 1) factors.push_back("psi^" + std::to_string(m.psi));
    for (std::size_t i = 0; i < m.lambda.size(); ++i) {
      if (m.lambda[i] == 0) continue;
      std::string f = "lambda" + std::to_string(i + 1);
      if (m.lambda[i] > 1) f += "^" + std::to_string(m.lambda[i]);
      factors.push_back(f);
    }
    for (int j : m.kappa) factors.push_back("kappa" + std::to_string(j));
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool show_coeff = mag != 1 || factors.empty();
    if (show_coeff) os << mag.get_str();
    for (std::size_t i = 0; i < factors.size(); ++i) os << ((i || show_coeff) ? "*" : "") << factors[i];
  }
  return os.str();
}

ClassPolynomial hyperelliptic_delta(int g) {
  if (g < 2) throw std::invalid_argument("hyperelliptic_delta: g >= 2 required");
  ClassPolynomial d;
  for (int i = 0; i <= g - 1; ++i) {
    int j = g - 1 - i;
    Rational c(ipow(2, static_cast<unsigned long>(j + 1)) - 1);
    if (i % 2) c = -c;
    d.add(lambda_class(i) * psi_power(j), c);
  }
  return d;
}

ClassPolynomial hyperelliptic_locus(int g) {
  ClassPolynomial delta = hyperelliptic_delta(g);
  ClassPolynomial out;
  for (const auto& [m, c] : delta.terms()) {
    if (m.psi == 0) continue;
    ClassMonomial rest = m;
    rest.psi = 0;
    if (m.psi == 1) {
      out.add(rest, c * (2 * g - 2));
    } else {
      out.add(rest * kappa_class(m.psi - 1), c);
    }
  }
  out *= Rational(1, 2 * g + 2);
  return out;
}

}  // namespace mgn::tautcalc
