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

#include "mgn/corekit/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace mgn {

Rational bernoulli(unsigned k) {
  static std::mutex mu;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1.
  while (cache.size() <= k) {
    unsigned m = static_cast<unsigned>(cache.size());
    Rational acc = 0;
    for (unsigned j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * cache[j];
    Rational next = -acc / Rational(m + 1);
    next.canonicalize();
    cache.push_back(next);
  }
  return cache[k];
}

}  // namespace mgn
