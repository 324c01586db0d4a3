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

#include "mgn/tautcalc/stable_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "mgn/tautcalc/generator.hpp"

namespace mgn::tautcalc {

namespace {

bool connected_without(const StableGraph& g, int skip_edge) {
  const int v = g.vertex_count();
  if (v == 0) return true;
  std::vector<int> parent(static_cast<std::size_t>(v));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = v;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (e == skip_edge) continue;
    int a = find(g.edges[e].first), b = find(g.edges[e].second);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  return components == 1;
}

std::vector<StableGraph> degenerations(const StableGraph& g) {
  std::vector<StableGraph> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.genus[v] >= 1) {
      StableGraph h = g;
      --h.genus[v];
      h.edges.emplace_back(v, v);
      out.push_back(std::move(h));
    }
    std::vector<Incidence> inc = g.incidences(v);
    const std::size_t m = inc.size();
    const int w = g.vertex_count();
    for (int g1 = 0; g1 <= g.genus[v]; ++g1) {
      int g2 = g.genus[v] - g1;
      for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
        int n2 = __builtin_popcountl(mask);
        int n1 = static_cast<int>(m) - n2;
        if (2 * g1 - 2 + n1 + 1 <= 0 || 2 * g2 - 2 + n2 + 1 <= 0) continue;
        StableGraph h = g;
        h.genus[v] = g1;
        h.genus.push_back(g2);
        for (std::size_t i = 0; i < m; ++i) {
          if (!((mask >> i) & 1UL)) continue;
          const Incidence& x = inc[i];
          if (x.kind == Incidence::Kind::kLeg) {
            h.legs[x.index] = w;
          } else if (x.side == 0) {
            h.edges[x.index].first = w;
          } else {
            h.edges[x.index].second = w;
          }
        }
        for (auto& e : h.edges) {
          if (e.first > e.second) std::swap(e.first, e.second);
        }
        h.edges.emplace_back(v, w);
        out.push_back(std::move(h));
      }
    }
  }
  return out;
}

}  // namespace

int StableGraph::total_genus() const { return std::accumulate(genus.begin(), genus.end(), 0) + h1(); }

int StableGraph::valence(int v) const {
  int n = 0;
  for (int l : legs) n += l == v ? 1 : 0;
  for (const auto& [a, b] : edges) n += (a == v ? 1 : 0) + (b == v ? 1 : 0);
  return n;
}

std::vector<Incidence> StableGraph::incidences(int v) const {
  std::vector<Incidence> out;
  for (int i = 0; i < leg_count(); ++i) {
    if (legs[i] == v) out.push_back({Incidence::Kind::kLeg, i, 0});
  }
  for (int e = 0; e < edge_count(); ++e) {
    if (edges[e].first == v) out.push_back({Incidence::Kind::kHalfEdge, e, 0});
    if (edges[e].second == v) out.push_back({Incidence::Kind::kHalfEdge, e, 1});
  }
  return out;
}

bool StableGraph::is_connected() const { return connected_without(*this, -1); }

bool StableGraph::is_stable() const {
  if (!is_connected()) return false;
  for (int v = 0; v < vertex_count(); ++v) {
    if (genus[v] < 0 || 2 * genus[v] - 2 + valence(v) <= 0) return false;
  }
  return true;
}

bool StableGraph::is_nonseparating(int e) const { return connected_without(*this, e); }

StableGraph StableGraph::smooth(int g, int n) {
  StableGraph s;
  s.genus = {g};
  s.legs.assign(static_cast<std::size_t>(n), 0);
  return s;
}

std::vector<StableGraph> enumerate_stable_graphs(int g, int n) {
  if (n < 0) throw std::invalid_argument("enumerate_stable_graphs: unstable (g, n)");
  return enumerate_stable_graphs(g, numbered_legs(n));
}

std::vector<StableGraph> enumerate_stable_graphs(int g, const std::vector<int>& colours) {
  const int n = static_cast<int>(colours.size());
  if (g < 0 || 2 * g - 2 + n <= 0) throw std::invalid_argument("enumerate_stable_graphs: unstable (g, n)");
  std::vector<StableGraph> all;
  std::map<std::string, StableGraph> level;
  StableGraph s = StableGraph::smooth(g, n);
  Canonical c0 = canonicalize(DecoratedGenerator::undecorated(s), colours);
  level.emplace(c0.code, c0.form.graph);
  while (!level.empty()) {
    std::map<std::string, StableGraph> next;
    for (const auto& [code, graph] : level) {
      all.push_back(graph);
      for (const auto& h : degenerations(graph)) {
        Canonical c = canonicalize(DecoratedGenerator::undecorated(h), colours);
        next.emplace(std::move(c.code), std::move(c.form.graph));
      }
    }
    level = std::move(next);
  }
  return all;
}

}  // namespace mgn::tautcalc
