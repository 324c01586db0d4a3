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

#ifndef MGN_TAUTCALC_GENERATOR_HPP_
#define MGN_TAUTCALC_GENERATOR_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mgn/tautcalc/stable_graph.hpp"

namespace mgn::tautcalc {

// Pushforward of a product of psi and kappa classes from the vertex moduli
// spaces of a stable graph.
struct DecoratedGenerator {
  StableGraph graph;
  std::vector<int> leg_psi;                  // per leg
  std::vector<std::array<int, 2>> edge_psi;  // per edge, at first and second endpoint
  std::vector<std::vector<int>> kappa;       // per vertex, indices >= 1, ascending

  static DecoratedGenerator undecorated(const StableGraph& g);

  int genus() const { return graph.total_genus(); }
  int legs() const { return graph.leg_count(); }
  // Edges plus decoration degrees.
  int codimension() const;
  // Degree of the decoration at v.
  int vertex_degree(int v) const;
  int psi_at(int v, const Incidence& inc) const;
  // Decoration degree at each vertex at most 3 g(v) - 3 + n(v).
  bool is_valid() const;
  std::string to_string() const;
};

// colour[i] for leg i; legs of equal colour may be permuted by an
// isomorphism. Distinct colours 0..n-1 give the usual numbered legs.
using LegColouring = std::vector<int>;
LegColouring numbered_legs(int n);
LegColouring unnumbered_legs(int n);

// Isomorphism invariant: equal codes iff the generators are related by a
// relabeling of vertices and edges and a colour-preserving permutation of
// the legs. The one-argument form numbers the legs.
std::string canonical_code(const DecoratedGenerator& gen);
std::string canonical_code(const DecoratedGenerator& gen, const LegColouring& colours);
std::string canonical_code(const StableGraph& g);
// The representative with vertices ordered as in the canonical code.
DecoratedGenerator canonical_form(const DecoratedGenerator& gen);

struct Canonical {
  std::string code;
  DecoratedGenerator form;
};
Canonical canonicalize(const DecoratedGenerator& gen, const LegColouring& colours);
inline Canonical canonicalize(const DecoratedGenerator& gen) {
  return canonicalize(gen, numbered_legs(gen.legs()));
}

// Calls visit once per isomorphism class of codimension-k generators of
// genus g with legs coloured as given. Graphs come in canonical order and
// decorations of one graph in canonical-code order; nothing is retained.
void for_each_generator(int g, int k, const LegColouring& colours,
                        const std::function<void(const DecoratedGenerator&)>& visit);

// Decorated generators of codimension k on M_{g,n} bar up to isomorphism,
// sorted by graph then canonical code. Results are cached process-wide.
const std::vector<DecoratedGenerator>& enumerate_generators(int g, int n, int k);
const std::vector<DecoratedGenerator>& enumerate_generators(int g, int k, const LegColouring& colours);
std::size_t count_generators(int g, int n, int k);

}  // namespace mgn::tautcalc

#endif  // MGN_TAUTCALC_GENERATOR_HPP_
