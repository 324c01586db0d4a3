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

#ifndef MGN_SYMREP_NUMEROLOGY_HPP_
#define MGN_SYMREP_NUMEROLOGY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "mgn/corekit/rational.hpp"
#include "mgn/symrep/partition.hpp"
#include "mgn/symrep/representation.hpp"

namespace mgn::symrep {

// Ind from S_10 x S_10 x S_1 to S_21 of sgn (x) sgn (x) 1.
Decomposition induced_tilde_V();

// [1^21] + sum_{i=0}^{9} [3 2^i 1^{18-2i}] + 2 sum_{j=1}^{10} [2^j 1^{21-2j}].
Decomposition expected_tilde_V();

// The S_21 constituents of the L wedge^2 S[12] coefficient of the
// compactly supported Euler characteristic of M_{2,21}, as embedded at
// build time from data/hodge_l_wedge2_s12.txt.
const std::string& hodge_list_text();
std::vector<Partition> hodge_list();

// 64-bit FNV-1a of the embedded list text, and the value it must have.
std::uint64_t fnv1a64(const std::string& text);
inline constexpr std::uint64_t kHodgeListChecksum = 0x7add946c3c17c3c8ULL;

struct HodgeAudit {
  Integer total;
  Integer long_part;  // constituents of length >= 13
  bool checksum_ok = false;
};

// Throws std::logic_error when the embedded list fails its checksum.
HodgeAudit hodge_class_audit(int long_threshold = 13);

struct ContainmentReport {
  bool contained = false;
  std::vector<Partition> missing;  // listed with larger multiplicity than in the target
};

// Multiplicity-wise containment of the Hodge list inside a decomposition.
ContainmentReport hodge_list_contained_in(const Decomposition& target);

}  // namespace mgn::symrep

#endif  // MGN_SYMREP_NUMEROLOGY_HPP_
