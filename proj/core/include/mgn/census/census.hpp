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

#ifndef MGN_CENSUS_CENSUS_HPP_
#define MGN_CENSUS_CENSUS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "mgn/corekit/rational.hpp"

namespace mgn::census {

inline constexpr const char* kCensusVersion = "1";
inline constexpr const char* kMethodG1Short = "g1-short-weierstrass";
inline constexpr const char* kMethodG1Long = "g1-long-weierstrass";
inline constexpr const char* kMethodG2Sextic = "g2-binary-sextic";

// Groupoid cardinality #M_{g,n}(F_p) of the open moduli space.
struct CensusRecord {
  int g = 0;
  int n = 0;
  std::uint32_t p = 0;
  Rational count;
  std::string method;
  std::string version = kCensusVersion;

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

// Number of curve models with exactly N rational points, indexed by N,
// together with the order of the group whose orbits are isomorphism classes.
struct PointHistogram {
  std::vector<std::uint64_t> models_with_points;
  Integer group_order;
  std::string method;

  std::uint64_t total_models() const;
};

enum class G1Model { kAuto, kShort, kLong };
enum class G2Enumeration { kReduced, kFull };

// Short forms with u-scaling (order p - 1) for p >= 5, long forms with the
// (p - 1) p^3 substitution group otherwise. kShort requires p >= 5.
PointHistogram g1_histogram(std::uint32_t p, G1Model model = G1Model::kAuto, unsigned threads = 1);

// Squarefree binary sextics over odd p, group GL_2(F_p). kReduced enumerates
// monic (and, where 6 resp. 5 is invertible, depressed) representatives and
// weights the two leading-scalar classes by the quadratic twist; kFull walks
// all p^7 coefficient vectors.
PointHistogram g2_histogram(std::uint32_t p, G2Enumeration mode = G2Enumeration::kReduced,
                            unsigned threads = 1);

// sum_N h[N] (N-1)(N-2)...(N-n+1) / |G|: first marking at the origin.
Rational g1_count_from_histogram(const PointHistogram& h, int n);
// sum_N h[N] N(N-1)...(N-n+1) / |G|.
Rational g2_count_from_histogram(const PointHistogram& h, int n);

// Records for n = 1..n_max.
std::vector<CensusRecord> census_g1(std::uint32_t p, int n_max, unsigned threads = 1,
                                    G1Model model = G1Model::kAuto);
// Records for n = 0..n_max. Throws std::invalid_argument for p = 2.
std::vector<CensusRecord> census_g2(std::uint32_t p, int n_max, unsigned threads = 1,
                                    G2Enumeration mode = G2Enumeration::kReduced);

}  // namespace mgn::census

#endif  // MGN_CENSUS_CENSUS_HPP_
