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

#include "mgn/symrep/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace mgn::symrep {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (parts_.empty()) return Partition();
  for (int j = 0; j < parts_[0]; ++j) {
    int count = 0;
    for (int p : parts_) count += p > j ? 1 : 0;
    c.push_back(count);
  }
  return Partition(std::move(c));
}

std::string Partition::key() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  return os.str();
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (!first) os << ' ';
    first = false;
    os << parts_[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  os << ']';
  return os.str();
}

Partition parse_partition(std::string_view text) {
  std::string s(text);
  for (char& c : s) {
    if (c == '[' || c == ']' || c == ',') c = ' ';
  }
  std::istringstream is(s);
  std::string tok;
  std::vector<int> parts;
  while (is >> tok) {
    auto caret = tok.find('^');
    try {
      int part = std::stoi(tok.substr(0, caret));
      int mult = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
      if (mult < 0) throw std::invalid_argument("negative multiplicity");
      parts.insert(parts.end(), static_cast<std::size_t>(mult), part);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad partition text '" + std::string(text) + "'");
    }
  }
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

bool dominates(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) return false;
  int a = 0, b = 0;
  int len = std::max(mu.length(), lambda.length());
  for (int i = 0; i < len; ++i) {
    a += mu[i];
    b += lambda[i];
    if (a < b) return false;
  }
  return true;
}

Integer dim_irrep(const Partition& lambda) {
  Partition conj = lambda.conjugate();
  Integer hooks = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) hooks *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
  }
  return factorial(static_cast<unsigned long>(lambda.size())) / hooks;
}

Integer centralizer_order(const Partition& rho) {
  std::map<int, unsigned long> mult;
  for (int p : rho.parts()) ++mult[p];
  Integer z = 1;
  for (const auto& [part, m] : mult) z *= ipow(part, m) * factorial(m);
  return z;
}

}  // namespace mgn::symrep
