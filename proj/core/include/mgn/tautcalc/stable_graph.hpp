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

#ifndef MGN_TAUTCALC_STABLE_GRAPH_HPP_
#define MGN_TAUTCALC_STABLE_GRAPH_HPP_

#include <string>
#include <utility>
#include <vector>

namespace mgn::tautcalc {

// A half-edge or leg incident to a vertex.
struct Incidence {
  enum class Kind { kLeg, kHalfEdge } kind;
  int index;  // leg number (0-based) or edge number
  int side;   // 0 for the first endpoint of an edge, 1 for the second; 0 for legs
  friend bool operator==(const Incidence&, const Incidence&) = default;
};

// Dual graph of a stable curve. Legs are numbered 0..n-1 (marking i+1 is
// leg i). Edges join edges[e].first <= edges[e].second; equal endpoints
// form a self-loop.
struct StableGraph {
  std::vector<int> genus;
  std::vector<int> legs;
  std::vector<std::pair<int, int>> edges;

  int vertex_count() const { return static_cast<int>(genus.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int leg_count() const { return static_cast<int>(legs.size()); }
  // First Betti number E - V + 1.
  int h1() const { return edge_count() - vertex_count() + 1; }
  // Sum of vertex genera plus h1.
  int total_genus() const;
  // Legs plus half-edges at v.
  int valence(int v) const;
  // Legs at v in order, then half-edges at v in (edge, side) order.
  std::vector<Incidence> incidences(int v) const;

  bool is_connected() const;
  // Connected and 2 g(v) - 2 + n(v) > 0 at every vertex.
  bool is_stable() const;
  // Tree: no loops and no cycles.
  bool is_compact_type() const { return h1() == 0; }
  // Removing edge e leaves the graph connected.
  bool is_nonseparating(int e) const;

  static StableGraph smooth(int g, int n);
};

// Representatives of the isomorphism classes of stable graphs of genus g
// with n legs, ordered by edge count then canonical code. Throws
// std::invalid_argument when 2g - 2 + n <= 0 or g < 0.
std::vector<StableGraph> enumerate_stable_graphs(int g, int n);
// Classes up to permutations of legs of equal colour.
std::vector<StableGraph> enumerate_stable_graphs(int g, const std::vector<int>& colours);

}  // namespace mgn::tautcalc

#endif  // MGN_TAUTCALC_STABLE_GRAPH_HPP_
