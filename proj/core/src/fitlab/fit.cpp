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

#include "mgn/fitlab/fit.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace mgn::fitlab {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

struct SolveOutcome {
  bool consistent = false;
  int rank = 0;
  std::vector<Rational> x;
};

// Row reduction of the augmented matrix [A | b].
SolveOutcome solve(Matrix m, int cols) {
  SolveOutcome out;
  const int rows = static_cast<int>(m.size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    Rational inv = 1 / m[r][c];
    for (int j = c; j <= cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (int j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  out.rank = r;
  out.consistent = true;
  for (int i = r; i < rows; ++i) {
    if (m[i][cols] != 0) out.consistent = false;
  }
  out.x.assign(cols, Rational(0));
  for (int i = 0; i < r; ++i) out.x[pivot_col[i]] = m[i][cols];
  return out;
}

std::vector<Rational> equation_row(const DataPoint& pt, const FitModel& model, const CorrectionTables& tables) {
  std::vector<Rational> row;
  Integer p = pt.p;
  Integer pw = 1;
  for (int i = 0; i <= model.poly_degree; ++i, pw *= p) row.emplace_back(pw);
  for (const auto& corr : model.corrections) {
    const Integer& a = tables.value(corr.id, pt.p);
    Integer q = 1;
    for (int j = 0; j <= corr.multiplier_degree; ++j, q *= p) row.emplace_back(q * a);
  }
  row.push_back(pt.value);
  return row;
}

Matrix build(const std::vector<DataPoint>& pts, const FitModel& model, const CorrectionTables& tables) {
  Matrix m;
  m.reserve(pts.size());
  for (const auto& pt : pts) m.push_back(equation_row(pt, model, tables));
  return m;
}

bool consistent(const std::vector<DataPoint>& pts, const FitModel& model, const CorrectionTables& tables) {
  return solve(build(pts, model, tables), model.unknowns()).consistent;
}

}  // namespace

std::string to_string(Correction c) {
  switch (c) {
    case Correction::kTau: return "tau";
    case Correction::kC16: return "c16";
    case Correction::kC18: return "c18";
  }
  return "?";
}

Correction parse_correction(const std::string& name) {
  if (name == "tau") return Correction::kTau;
  if (name == "c16") return Correction::kC16;
  if (name == "c18") return Correction::kC18;
  throw std::invalid_argument("unknown correction '" + name + "'");
}

int correction_weight(Correction c) {
  switch (c) {
    case Correction::kTau: return 12;
    case Correction::kC16: return 16;
    case Correction::kC18: return 18;
  }
  return 0;
}

int FitModel::unknowns() const {
  int u = poly_degree + 1;
  for (const auto& c : corrections) u += c.multiplier_degree + 1;
  return u;
}

std::string FitModel::to_string() const {
  std::ostringstream os;
  os << "f_" << poly_degree << "(p)";
  for (const auto& c : corrections) {
    os << " + m_" << c.multiplier_degree << "(p)*" << fitlab::to_string(c.id) << "(p)";
  }
  return os.str();
}

std::vector<DataPoint> to_points(const std::vector<census::CensusRecord>& records) {
  std::vector<DataPoint> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back({r.p, r.count});
  return out;
}

CorrectionTables::CorrectionTables(int order)
    : tau_(modforms::eigenform(12, order)), c16_(modforms::eigenform(16, order)), c18_(modforms::eigenform(18, order)) {}

const Integer& CorrectionTables::value(Correction c, std::uint32_t p) const {
  const modforms::EigenformTable& t = c == Correction::kTau ? tau_ : c == Correction::kC16 ? c16_ : c18_;
  if (p < 1 || static_cast<int>(p) > t.max_index()) {
    throw std::invalid_argument("correction table " + to_string(c) + " does not cover p=" + std::to_string(p));
  }
  return t(static_cast<int>(p));
}

Rational FitResult::evaluate(std::uint32_t p, const CorrectionTables& tables) const {
  if (!solution) throw std::logic_error("evaluate on a failed fit");
  Rational v = solution->polynomial(Integer(p));
  for (std::size_t i = 0; i < model.corrections.size(); ++i) {
    v += solution->multipliers[i](Integer(p)) * Rational(tables.value(model.corrections[i].id, p));
  }
  return v;
}

RationalPolynomial interpolate(const std::vector<std::pair<Integer, Rational>>& points) {
  std::set<Integer> seen;
  for (const auto& [x, y] : points) {
    if (!seen.insert(x).second) throw std::invalid_argument("interpolate: duplicate x");
  }
  // Newton divided differences.
  const std::size_t n = points.size();
  std::vector<Rational> dd;
  for (const auto& pt : points) dd.push_back(pt.second);
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(points[i].first - points[i - level].first);
    }
  }
  RationalPolynomial result;
  RationalPolynomial basis = RationalPolynomial::constant(1);
  for (std::size_t i = 0; i < n; ++i) {
    RationalPolynomial term = basis;
    term *= dd[i];
    result += term;
    basis *= RationalPolynomial({Rational(-points[i].first), Rational(1)});
  }
  return result;
}

FitResult fit(const std::vector<DataPoint>& points, const FitModel& model, const CorrectionTables& tables) {
  std::set<std::uint32_t> seen;
  for (const auto& pt : points) {
    if (!seen.insert(pt.p).second) throw std::invalid_argument("fit: duplicate prime " + std::to_string(pt.p));
  }
  const int u = model.unknowns();
  if (model.poly_degree < 0) throw std::invalid_argument("fit: negative degree");
  if (static_cast<int>(points.size()) < u) {
    throw std::invalid_argument("fit: underdetermined, " + std::to_string(points.size()) + " points for " +
                                std::to_string(u) + " unknowns");
  }
  FitResult result;
  result.model = model;
  SolveOutcome s = solve(build(points, model, tables), u);
  if (s.rank < u) throw std::invalid_argument("fit: equations do not determine the model");
  if (!s.consistent) {
    std::vector<DataPoint> subset = points;
    for (std::size_t i = 0; i < subset.size();) {
      std::vector<DataPoint> rest = subset;
      rest.erase(rest.begin() + static_cast<long>(i));
      if (!consistent(rest, model, tables)) {
        subset = std::move(rest);
      } else {
        ++i;
      }
    }
    result.certificate = InconsistencyCertificate{std::move(subset)};
    return result;
  }
  FitSolution sol;
  std::size_t idx = 0;
  sol.polynomial = RationalPolynomial(std::vector<Rational>(s.x.begin(), s.x.begin() + model.poly_degree + 1));
  idx = static_cast<std::size_t>(model.poly_degree) + 1;
  for (const auto& c : model.corrections) {
    auto first = s.x.begin() + static_cast<long>(idx);
    sol.multipliers.emplace_back(std::vector<Rational>(first, first + c.multiplier_degree + 1));
    idx += static_cast<std::size_t>(c.multiplier_degree) + 1;
  }
  sol.monic = sol.polynomial.degree() == model.poly_degree && sol.polynomial.is_monic();
  sol.integral = sol.polynomial.has_integer_coefficients();
  for (const auto& m : sol.multipliers) sol.integral = sol.integral && m.has_integer_coefficients();
  result.solution = std::move(sol);
  return result;
}

HoldoutVerdict holdout_validate(const FitResult& result, const std::vector<DataPoint>& holdout,
                                const CorrectionTables& tables) {
  HoldoutVerdict v;
  if (!result.ok()) {
    for (const auto& pt : holdout) v.failing_primes.push_back(pt.p);
    return v;
  }
  for (const auto& pt : holdout) {
    if (result.evaluate(pt.p, tables) != pt.value) v.failing_primes.push_back(pt.p);
  }
  v.pass = v.failing_primes.empty();
  return v;
}

RationalPolynomial genus0_count_polynomial(int n) {
  if (n < 3) throw std::invalid_argument("genus0_count_polynomial: n >= 3 required");
  RationalPolynomial f = RationalPolynomial::constant(1);
  for (int j = 2; j <= n - 2; ++j) f *= RationalPolynomial({Rational(-j), Rational(1)});
  return f;
}

}  // namespace mgn::fitlab
