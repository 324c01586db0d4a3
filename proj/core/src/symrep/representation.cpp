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

#include "mgn/symrep/representation.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace mgn::symrep {

Decomposition Decomposition::irreducible(const Partition& lambda, const Integer& mult) {
  Decomposition d;
  d.add(lambda, mult);
  return d;
}

Integer Decomposition::multiplicity(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Decomposition::add(const Partition& lambda, const Integer& mult) {
  if (mult == 0) return;
  if (!terms_.empty() && lambda.size() != degree()) throw std::invalid_argument("decomposition: mixed sizes");
  auto [it, inserted] = terms_.emplace(lambda, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer Decomposition::dimension() const {
  Integer d = 0;
  for (const auto& [lambda, m] : terms_) d += m * dim_irrep(lambda);
  return d;
}

Decomposition& Decomposition::operator+=(const Decomposition& other) {
  for (const auto& [lambda, m] : other.terms_) add(lambda, m);
  return *this;
}

std::string Decomposition::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lambda, m] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (m != 1) os << m.get_str() << '*';
    os << lambda.to_string();
  }
  return os.str();
}

namespace {

// Ways to remove a horizontal strip of the given size from shape.
void remove_horizontal_strips(const std::vector<int>& shape, int size, std::size_t row, std::vector<int>& cur,
                              const std::function<void(const std::vector<int>&)>& emit) {
  if (row == shape.size()) {
    if (size == 0) emit(cur);
    return;
  }
  int below = row + 1 < shape.size() ? shape[row + 1] : 0;
  int max_take = std::min(size, shape[row] - below);
  for (int t = 0; t <= max_take; ++t) {
    cur[row] = shape[row] - t;
    remove_horizontal_strips(shape, size - t, row + 1, cur, emit);
  }
  cur[row] = shape[row];
}

Integer kostka_rec(std::vector<int> shape, const std::vector<int>& content, std::size_t k,
                   std::map<std::pair<std::vector<int>, std::size_t>, Integer>& memo) {
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (k == 0) return shape.empty() ? Integer(1) : Integer(0);
  auto key = std::make_pair(shape, k);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Integer total = 0;
  std::vector<int> cur = shape;
  remove_horizontal_strips(shape, content[k - 1], 0, cur, [&](const std::vector<int>& smaller) {
    total += kostka_rec(smaller, content, k - 1, memo);
  });
  memo.emplace(key, total);
  return total;
}

// Fills nu / lambda row by row, each row right to left, with a lattice word.
class LrFiller {
 public:
  LrFiller(const Partition& lambda, const Partition& mu, const Partition& nu)
      : lambda_(lambda), mu_(mu), nu_(nu), counts_(static_cast<std::size_t>(mu.length()) + 1, 0) {
    grid_.resize(static_cast<std::size_t>(nu.length()));
    for (int r = 0; r < nu.length(); ++r) grid_[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(nu[r]), 0);
  }

  Integer count() {
    total_ = 0;
    fill(0, nu_[0] - 1);
    return total_;
  }

 private:
  void fill(int r, int c) {
    if (r == nu_.length()) {
      ++total_;
      return;
    }
    if (c < lambda_[r]) {
      fill(r + 1, r + 1 < nu_.length() ? nu_[r + 1] - 1 : 0);
      return;
    }
    // Weakly increasing along rows: the entry right of (r, c) bounds it.
    int hi = c + 1 < nu_[r] ? grid_[r][c + 1] : mu_.length();
    int lo = 1;
    if (r > 0 && c < nu_[r - 1]) lo = std::max(lo, c >= lambda_[r - 1] ? grid_[r - 1][c] + 1 : 1);
    for (int v = lo; v <= hi; ++v) {
      if (counts_[v] >= mu_[v - 1]) continue;
      if (v > 1 && counts_[v] + 1 > counts_[v - 1]) continue;
      ++counts_[v];
      grid_[r][c] = v;
      if (c > lambda_[r]) {
        fill(r, c - 1);
      } else {
        fill(r + 1, r + 1 < nu_.length() ? nu_[r + 1] - 1 : 0);
      }
      grid_[r][c] = 0;
      --counts_[v];
    }
  }

  const Partition& lambda_;
  const Partition& mu_;
  const Partition& nu_;
  std::vector<int> counts_;
  std::vector<std::vector<int>> grid_;
  Integer total_;
};

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i) {
    if (inner[i] > outer[i]) return false;
  }
  return true;
}

}  // namespace

Integer kostka(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) throw std::invalid_argument("kostka: sizes differ");
  std::map<std::pair<std::vector<int>, std::size_t>, Integer> memo;
  return kostka_rec(mu.parts(), lambda.parts(), lambda.parts().size(), memo);
}

Decomposition young_rule(const Partition& lambda) {
  Decomposition d;
  for (const auto& mu : partitions_of(lambda.size())) {
    if (!dominates(mu, lambda)) continue;
    d.add(mu, kostka(mu, lambda));
  }
  return d;
}

Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (nu.size() != lambda.size() + mu.size() || !contains(nu, lambda) || !contains(nu, mu)) return 0;
  if (mu.size() == 0) return 1;
  return LrFiller(lambda, mu, nu).count();
}

Decomposition lr_product(const Partition& lambda, const Partition& mu) {
  Decomposition d;
  for (const auto& nu : partitions_of(lambda.size() + mu.size())) {
    if (nu.length() > lambda.length() + mu.length()) continue;
    d.add(nu, lr_coefficient(lambda, mu, nu));
  }
  return d;
}

Decomposition induct(const Decomposition& d1, const Decomposition& d2) {
  Decomposition out;
  for (const auto& [a, ma] : d1.terms()) {
    for (const auto& [b, mb] : d2.terms()) {
      Decomposition prod = lr_product(a, b);
      for (const auto& [nu, c] : prod.terms()) out.add(nu, ma * mb * c);
    }
  }
  return out;
}

int length(const Decomposition& d) {
  int len = 0;
  for (const auto& [lambda, m] : d.terms()) len = std::max(len, lambda.length());
  return len;
}

}  // namespace mgn::symrep
