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

#include "mgn/tautcalc/length.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "mgn/symrep/bounds.hpp"

namespace mgn::tautcalc {

namespace {

std::mutex g_mutex;
// Keyed by canonical codes with unnumbered legs: every bound used here is
// invariant under relabeling the markings.
std::unordered_map<std::string, int>& memo() {
  static std::unordered_map<std::string, int> m;
  return m;
}
std::unordered_map<std::string, int>& context_memo() {
  static std::unordered_map<std::string, int> m;
  return m;
}

std::optional<int> lookup(std::unordered_map<std::string, int>& table, const std::string& key) {
  std::lock_guard<std::mutex> lock(g_mutex);
  auto it = table.find(key);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

void store(std::unordered_map<std::string, int>& table, std::string key, int value) {
  std::lock_guard<std::mutex> lock(g_mutex);
  table.emplace(std::move(key), value);
}

int stable_bound(const DecoratedGenerator& gen) {
  return symrep::theorem_bounds(gen.genus(), gen.legs(), gen.codimension(), symrep::ModuliSpace::kStable);
}

int refined_bound(const DecoratedGenerator& gen);

// Largest bound among the generators obtained by replacing the decoration
// at v with boundary generators of M_{g(v), n(v)} bar of the same degree.
// Depends only on the rest of the generator, so it is memoized on that.
int violation_bound(const DecoratedGenerator& gen, int v, int target) {
  const int gv = gen.graph.genus[v];
  const int dv = gen.vertex_degree(v);
  const std::vector<Incidence> inc = gen.graph.incidences(v);
  DecoratedGenerator context = gen;
  for (const auto& x : inc) {
    if (x.kind == Incidence::Kind::kLeg) {
      context.leg_psi[x.index] = 0;
    } else {
      context.edge_psi[x.index][x.side] = 0;
    }
  }
  context.kappa[v].clear();
  context.graph.genus[v] = 100 + 40 * gv + dv;
  std::string key = canonical_code(context, unnumbered_legs(gen.legs()));
  if (auto hit = lookup(context_memo(), key)) return *hit;
  LegColouring local_colours;
  int next_colour = 1;
  for (const auto& x : inc) local_colours.push_back(x.kind == Incidence::Kind::kLeg ? 0 : next_colour++);
  int worst = 0;
  for (const auto& local : enumerate_generators(gv, dv, local_colours)) {
    if (local.graph.edge_count() == 0) continue;
    worst = std::max(worst, refined_bound(glue_at_vertex(gen, v, local)));
    if (worst > target) break;
  }
  store(context_memo(), std::move(key), worst);
  return worst;
}

int refined_bound(const DecoratedGenerator& gen) {
  Canonical c = canonicalize(gen, unnumbered_legs(gen.legs()));
  if (auto hit = lookup(memo(), c.code)) return *hit;
  const DecoratedGenerator& g = c.form;
  const int target = stable_bound(g);
  int b = young_bound(g);
  const bool compact = g.graph.is_compact_type();
  if (compact) b = std::min(b, compact_type_accounting(g));
  if (!compact) {
    for (int e = 0; e < g.graph.edge_count() && b > target; ++e) {
      if (!g.graph.is_nonseparating(e)) continue;
      b = std::min(b, refined_bound(cut_edge(g, e)));
    }
  } else {
    for (int v = 0; v < g.graph.vertex_count() && b > target; ++v) {
      if (g.graph.genus[v] < 1 || g.vertex_degree(v) < g.graph.genus[v]) continue;
      b = std::min(b, violation_bound(g, v, target));
    }
  }
  store(memo(), std::move(c.code), b);
  return b;
}

}  // namespace

int young_bound(const DecoratedGenerator& gen) {
  std::set<std::pair<int, int>> blocks;
  for (int i = 0; i < gen.graph.leg_count(); ++i) blocks.emplace(gen.graph.legs[i], gen.leg_psi[i]);
  return static_cast<int>(blocks.size());
}

int compact_type_accounting(const DecoratedGenerator& gen) {
  const StableGraph& g = gen.graph;
  if (!g.is_compact_type()) throw std::invalid_argument("compact_type_accounting: graph has cycles");
  const int V = g.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(V));
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (const auto& [a, b] : g.edges) {
    if (g.genus[a] == 0 && g.genus[b] == 0) comp[static_cast<std::size_t>(find(a))] = find(b);
  }
  struct Tree {
    int edges = 0, decoration = 0, attachments = 0, real_legs = 0;
  };
  std::map<int, Tree> trees;
  int total = 0;
  for (int v = 0; v < V; ++v) {
    if (g.genus[v] == 0) {
      Tree& t = trees[find(v)];
      t.decoration += gen.vertex_degree(v);
      continue;
    }
    std::set<int> powers;
    for (int i = 0; i < g.leg_count(); ++i) {
      if (g.legs[i] == v) powers.insert(gen.leg_psi[i]);
    }
    total += static_cast<int>(powers.size());
  }
  for (int i = 0; i < g.leg_count(); ++i) {
    if (g.genus[g.legs[i]] == 0) ++trees[find(g.legs[i])].real_legs;
  }
  for (const auto& [a, b] : g.edges) {
    const bool za = g.genus[a] == 0, zb = g.genus[b] == 0;
    if (za && zb) {
      ++trees[find(a)].edges;
    } else if (za) {
      ++trees[find(a)].attachments;
    } else if (zb) {
      ++trees[find(b)].attachments;
    }
  }
  for (const auto& [root, t] : trees) {
    const int k = t.edges + t.decoration;
    const int m = t.real_legs + t.attachments;
    total += std::max(0, std::min({k + 1, m - k - 2, t.real_legs}));
  }
  return total;
}

DecoratedGenerator cut_edge(const DecoratedGenerator& gen, int e) {
  if (e < 0 || e >= gen.graph.edge_count() || !gen.graph.is_nonseparating(e)) {
    throw std::invalid_argument("cut_edge: edge must be nonseparating");
  }
  DecoratedGenerator out = gen;
  auto [a, b] = gen.graph.edges[e];
  out.graph.legs.push_back(a);
  out.graph.legs.push_back(b);
  out.leg_psi.push_back(gen.edge_psi[e][0]);
  out.leg_psi.push_back(gen.edge_psi[e][1]);
  out.graph.edges.erase(out.graph.edges.begin() + e);
  out.edge_psi.erase(out.edge_psi.begin() + e);
  return out;
}

DecoratedGenerator glue_at_vertex(const DecoratedGenerator& gen, int v, const DecoratedGenerator& local) {
  const std::vector<Incidence> inc = gen.graph.incidences(v);
  if (local.graph.leg_count() != static_cast<int>(inc.size()) || local.genus() != gen.graph.genus[v]) {
    throw std::invalid_argument("glue_at_vertex: local generator does not match the vertex");
  }
  const int V = gen.graph.vertex_count();
  auto new_index = [&](int lv) { return lv == 0 ? v : V + lv - 1; };
  DecoratedGenerator out = gen;
  out.graph.genus[v] = local.graph.genus[0];
  out.kappa[v] = local.kappa[0];
  for (int lv = 1; lv < local.graph.vertex_count(); ++lv) {
    out.graph.genus.push_back(local.graph.genus[lv]);
    out.kappa.push_back(local.kappa[lv]);
  }
  for (std::size_t i = 0; i < inc.size(); ++i) {
    const int target = new_index(local.graph.legs[i]);
    const int psi = local.leg_psi[i];
    const Incidence& x = inc[i];
    if (x.kind == Incidence::Kind::kLeg) {
      out.graph.legs[x.index] = target;
      out.leg_psi[x.index] = psi;
    } else if (x.side == 0) {
      out.graph.edges[x.index].first = target;
      out.edge_psi[x.index][0] = psi;
    } else {
      out.graph.edges[x.index].second = target;
      out.edge_psi[x.index][1] = psi;
    }
  }
  for (int e = 0; e < local.graph.edge_count(); ++e) {
    out.graph.edges.emplace_back(new_index(local.graph.edges[e].first), new_index(local.graph.edges[e].second));
    out.edge_psi.push_back(local.edge_psi[e]);
  }
  for (std::size_t e = 0; e < out.graph.edges.size(); ++e) {
    if (out.graph.edges[e].first > out.graph.edges[e].second) {
      std::swap(out.graph.edges[e].first, out.graph.edges[e].second);
      std::swap(out.edge_psi[e][0], out.edge_psi[e][1]);
    }
  }
  return out;
}

void clear_length_cache() {
  std::lock_guard<std::mutex> lock(g_mutex);
  std::unordered_map<std::string, int>().swap(memo());
  std::unordered_map<std::string, int>().swap(context_memo());
}

GeneratorLength generator_length(const DecoratedGenerator& gen) {
  GeneratorLength r;
  r.theorem_bound = stable_bound(gen);
  r.accounting = gen.graph.is_compact_type() ? compact_type_accounting(gen) : young_bound(gen);
  r.length = refined_bound(gen);
  r.pass = r.length <= r.theorem_bound;
  return r;
}

}  // namespace mgn::tautcalc
