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

#ifndef MGN_TAUTCALC_LENGTH_HPP_
#define MGN_TAUTCALC_LENGTH_HPP_

#include "mgn/tautcalc/generator.hpp"

namespace mgn::tautcalc {

struct GeneratorLength {
  // Tree and vertex bookkeeping: sum over positive-genus vertices of the
  // number of distinct psi powers on their legs plus, per rational tree,
  // min(k_i + 1, m_i - k_i - 2). For graphs with cycles this is the Young
  // bound instead.
  int accounting = 0;
  // A proven upper bound on the length of the S_n-representation generated
  // by the class. Refined only as far as needed to reach theorem_bound.
  int length = 0;
  int theorem_bound = 0;  // stable bound for (g, n, codimension)
  bool pass = false;
};

// Number of distinct (vertex, psi power) blocks among the legs: the length
// of the permutation module the class's orbit span is a quotient of.
int young_bound(const DecoratedGenerator& gen);

// The bookkeeping bound for compact-type graphs. Requires h1 = 0.
int compact_type_accounting(const DecoratedGenerator& gen);

GeneratorLength generator_length(const DecoratedGenerator& gen);

// Releases the bound memo tables.
void clear_length_cache();

// Removes nonseparating edge e, adding legs n and n+1 at its endpoints
// carrying the half-edge psi powers.
DecoratedGenerator cut_edge(const DecoratedGenerator& gen, int e);

// Replaces vertex v by a generator on M_{g(v), n(v)} bar whose legs are
// matched with the incidences of v in order.
DecoratedGenerator glue_at_vertex(const DecoratedGenerator& gen, int v, const DecoratedGenerator& local);

}  // namespace mgn::tautcalc

#endif  // MGN_TAUTCALC_LENGTH_HPP_
