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

#ifndef MGN_FITLAB_FIT_HPP_
#define MGN_FITLAB_FIT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mgn/census/census.hpp"
#include "mgn/corekit/polynomial.hpp"
#include "mgn/corekit/rational.hpp"
#include "mgn/modforms/eigenform.hpp"

namespace mgn::fitlab {

// Eigenform Fourier coefficient used as a correction: tau = a_12, c16, c18.
enum class Correction { kTau, kC16, kC18 };

std::string to_string(Correction c);
// Accepts "tau", "c16", "c18". Throws std::invalid_argument.
Correction parse_correction(const std::string& name);
int correction_weight(Correction c);

struct CorrectionTerm {
  Correction id;
  int multiplier_degree;
};

// count(p) = f(p) + sum_i m_i(p) a_i(p), deg f = poly_degree, deg m_i =
// multiplier_degree.
struct FitModel {
  int poly_degree = 0;
  std::vector<CorrectionTerm> corrections;

  int unknowns() const;
  std::string to_string() const;
};

struct DataPoint {
  std::uint32_t p;
  Rational value;
};

std::vector<DataPoint> to_points(const std::vector<census::CensusRecord>& records);

// a_k(p) for the three correction forms, read from eigenform tables.
class CorrectionTables {
 public:
  explicit CorrectionTables(int order = modforms::kDefaultOrder);
  // Throws std::invalid_argument when p is beyond the table.
  const Integer& value(Correction c, std::uint32_t p) const;

 private:
  modforms::EigenformTable tau_, c16_, c18_;
};

struct FitSolution {
  RationalPolynomial polynomial;
  std::vector<RationalPolynomial> multipliers;  // one per model correction
  bool monic = false;
  bool integral = false;
};

// Points whose equations have no common solution; every proper subset is
// solvable.
struct InconsistencyCertificate {
  std::vector<DataPoint> points;
};

struct FitResult {
  FitModel model;
  std::optional<FitSolution> solution;
  std::optional<InconsistencyCertificate> certificate;

  bool ok() const { return solution.has_value(); }
  // Model value at p. Requires ok().
  Rational evaluate(std::uint32_t p, const CorrectionTables& tables) const;
};

// Unique polynomial of degree < points.size() through the points. Throws
// std::invalid_argument on duplicate x.
RationalPolynomial interpolate(const std::vector<std::pair<Integer, Rational>>& points);

// Exact solve. Throws std::invalid_argument on duplicate primes or when the
// equations do not determine every unknown.
FitResult fit(const std::vector<DataPoint>& points, const FitModel& model,
              const CorrectionTables& tables);

struct HoldoutVerdict {
  bool pass = false;
  std::vector<std::uint32_t> failing_primes;
};

HoldoutVerdict holdout_validate(const FitResult& result, const std::vector<DataPoint>& holdout,
                                const CorrectionTables& tables);

// #M_{0,n}(F_p) = (p-2)(p-3)...(p-n+2) for n >= 3.
RationalPolynomial genus0_count_polynomial(int n);

}  // namespace mgn::fitlab

#endif  // MGN_FITLAB_FIT_HPP_
