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

#ifndef MGN_SYMREP_PARTITION_HPP_
#define MGN_SYMREP_PARTITION_HPP_

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "mgn/corekit/rational.hpp"

namespace mgn::symrep {

class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument unless parts are positive and weakly
  // decreasing.
  explicit Partition(std::vector<int> parts);
  // Sorts and drops zeros.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  // Part i (0-based), zero past the length.
  int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
  Partition conjugate() const;

  // Canonical key: parts descending, comma-joined; "" for the empty partition.
  std::string key() const;
  // Exponent notation, e.g. "[3 2^2 1^14]".
  std::string to_string() const;

  // Reverse lexicographic: larger first parts sort earlier.
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ > b.parts_; }
  friend bool operator==(const Partition& a, const Partition& b) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Accepts "[3 2^2 1^14]", "3 2^2 1^14" or "3,2,2,1".
Partition parse_partition(std::string_view text);

// All partitions of n in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

// mu dominates lambda: equal sizes and every partial sum of mu is >= the
// corresponding partial sum of lambda.
bool dominates(const Partition& mu, const Partition& lambda);

// Hook-length formula.
Integer dim_irrep(const Partition& lambda);

// Order of the centralizer of a permutation of cycle type rho.
Integer centralizer_order(const Partition& rho);

}  // namespace mgn::symrep

#endif  // MGN_SYMREP_PARTITION_HPP_
