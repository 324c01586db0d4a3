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

#include "mgn/tautcalc/generator.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace mgn::tautcalc {

namespace {

using Code = std::vector<int>;

struct Layout {
  std::vector<Code> base;  // per vertex
  // adjacency[a][b] for a < b: (psi at a, psi at b) pairs, sorted
  std::vector<std::vector<std::vector<std::pair<int, int>>>> adjacency;
};

Layout layout(const DecoratedGenerator& gen, const LegColouring& colours) {
  const StableGraph& g = gen.graph;
  const int V = g.vertex_count();
  Layout L;
  L.base.resize(static_cast<std::size_t>(V));
  L.adjacency.assign(static_cast<std::size_t>(V), std::vector<std::vector<std::pair<int, int>>>(static_cast<std::size_t>(V)));
  std::vector<std::vector<std::pair<int, int>>> loops(static_cast<std::size_t>(V));
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.edges[e];
    int pa = gen.edge_psi[e][0], pb = gen.edge_psi[e][1];
    if (a == b) {
      loops[a].emplace_back(std::min(pa, pb), std::max(pa, pb));
    } else {
      L.adjacency[a][b].emplace_back(pa, pb);
      L.adjacency[b][a].emplace_back(pb, pa);
    }
  }
  for (int v = 0; v < V; ++v) {
    Code& k = L.base[v];
    k.push_back(g.genus[v]);
    std::vector<std::pair<int, int>> legs;
    for (int i = 0; i < g.leg_count(); ++i) {
      if (g.legs[i] == v) legs.emplace_back(colours[i], gen.leg_psi[i]);
    }
    std::sort(legs.begin(), legs.end());
    k.push_back(static_cast<int>(legs.size()));
    for (auto [c, psi] : legs) {
      k.push_back(c);
      k.push_back(psi);
    }
    k.push_back(static_cast<int>(gen.kappa[v].size()));
    k.insert(k.end(), gen.kappa[v].begin(), gen.kappa[v].end());
    k.push_back(g.valence(v));
    std::sort(loops[v].begin(), loops[v].end());
    k.push_back(static_cast<int>(loops[v].size()));
    for (auto [x, y] : loops[v]) {
      k.push_back(x);
      k.push_back(y);
    }
  }
  for (auto& row : L.adjacency) {
    for (auto& cell : row) std::sort(cell.begin(), cell.end());
  }
  return L;
}

template <typename T>
std::vector<int> ranks_of(const std::vector<T>& sigs) {
  std::vector<T> sorted = sigs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> r;
  for (const auto& s : sigs) r.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), s) - sorted.begin()));
  return r;
}

// Invariant vertex colouring by iterated neighbourhood refinement.
std::vector<int> refine(const Layout& L) {
  const std::size_t V = L.base.size();
  std::vector<int> rank = ranks_of(L.base);
  std::size_t classes = 0;
  while (true) {
    std::size_t now = static_cast<std::size_t>(*std::max_element(rank.begin(), rank.end())) + 1;
    if (now == classes || now == V) break;
    classes = now;
    std::vector<Code> sigs(V);
    for (std::size_t v = 0; v < V; ++v) {
      std::vector<Code> nb;
      for (std::size_t u = 0; u < V; ++u) {
        for (auto [pv, pu] : L.adjacency[v][u]) nb.push_back({rank[u], pv, pu});
      }
      std::sort(nb.begin(), nb.end());
      sigs[v].push_back(rank[v]);
      for (const auto& x : nb) sigs[v].insert(sigs[v].end(), x.begin(), x.end());
    }
    rank = ranks_of(sigs);
  }
  return rank;
}

Code encode(const Layout& L, const std::vector<int>& order) {
  Code c;
  for (int v : order) {
    c.push_back(static_cast<int>(L.base[v].size()));
    c.insert(c.end(), L.base[v].begin(), L.base[v].end());
  }
  c.push_back(-1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const auto& cell = L.adjacency[order[i]][order[j]];
      c.push_back(static_cast<int>(cell.size()));
      for (auto [x, y] : cell) {
        c.push_back(x);
        c.push_back(y);
      }
    }
  }
  return c;
}

std::pair<Code, std::vector<int>> best_order(const DecoratedGenerator& gen, const LegColouring& colours) {
  if (static_cast<int>(colours.size()) != gen.legs()) throw std::invalid_argument("leg colouring size mismatch");
  Layout L = layout(gen, colours);
  std::vector<int> rank = refine(L);
  const int V = static_cast<int>(rank.size());
  std::vector<int> order(static_cast<std::size_t>(V));
  for (int v = 0; v < V; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return rank[a] < rank[b]; });
  std::vector<std::pair<int, int>> groups;  // [begin, end) in order
  for (int i = 0; i < V;) {
    int j = i;
    while (j < V && rank[order[j]] == rank[order[i]]) ++j;
    groups.emplace_back(i, j);
    i = j;
  }
  Code best;
  std::vector<int> best_perm;
  std::function<void(std::size_t)> rec = [&](std::size_t gi) {
    if (gi == groups.size()) {
      Code c = encode(L, order);
      if (best_perm.empty() || c < best) {
        best = std::move(c);
        best_perm = order;
      }
      return;
    }
    auto [b, e] = groups[gi];
    std::sort(order.begin() + b, order.begin() + e);
    do {
      rec(gi + 1);
    } while (std::next_permutation(order.begin() + b, order.begin() + e));
  };
  rec(0);
  return {best, best_perm};
}

// One byte per entry; every entry lies in [-1, 254].
std::string code_string(const Code& c) {
  std::string s;
  s.reserve(c.size());
  for (int x : c) {
    if (x < -1 || x > 254) throw std::overflow_error("canonical code entry out of range");
    s += static_cast<char>(static_cast<unsigned char>(x + 1));
  }
  return s;
}

DecoratedGenerator relabel(const DecoratedGenerator& gen, const std::vector<int>& order) {
  const int V = gen.graph.vertex_count();
  std::vector<int> new_index(static_cast<std::size_t>(V));
  for (int i = 0; i < V; ++i) new_index[order[i]] = i;
  DecoratedGenerator out;
  out.graph.genus.resize(static_cast<std::size_t>(V));
  out.kappa.resize(static_cast<std::size_t>(V));
  for (int i = 0; i < V; ++i) {
    out.graph.genus[i] = gen.graph.genus[order[i]];
    out.kappa[i] = gen.kappa[order[i]];
  }
  out.graph.legs.resize(gen.graph.legs.size());
  for (std::size_t i = 0; i < gen.graph.legs.size(); ++i) out.graph.legs[i] = new_index[gen.graph.legs[i]];
  out.leg_psi = gen.leg_psi;
  std::vector<std::tuple<int, int, int, int>> edges;
  for (int e = 0; e < gen.graph.edge_count(); ++e) {
    int a = new_index[gen.graph.edges[e].first], b = new_index[gen.graph.edges[e].second];
    int pa = gen.edge_psi[e][0], pb = gen.edge_psi[e][1];
    if (a > b || (a == b && pa > pb)) {
      std::swap(a, b);
      std::swap(pa, pb);
    }
    edges.emplace_back(a, b, pa, pb);
  }
  std::sort(edges.begin(), edges.end());
  for (auto [a, b, pa, pb] : edges) {
    out.graph.edges.emplace_back(a, b);
    out.edge_psi.push_back({pa, pb});
  }
  return out;
}

struct VertexDecoration {
  std::vector<int> psi;  // per incidence
  std::vector<int> kappa;
  int degree;
};

void kappa_partitions(int t, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (t == 0) {
    std::vector<int> asc(cur.rbegin(), cur.rend());
    out.push_back(asc);
    return;
  }
  for (int p = std::min(t, max_part); p >= 1; --p) {
    cur.push_back(p);
    kappa_partitions(t - p, p, cur, out);
    cur.pop_back();
  }
}

// prev[i] >= 0 forces psi[i] <= psi[prev[i]]: interchangeable legs get
// non-increasing powers.
std::vector<VertexDecoration> vertex_decorations(int m, int dim, const std::vector<int>& prev) {
  std::vector<VertexDecoration> out;
  std::vector<std::vector<std::vector<int>>> kp(static_cast<std::size_t>(std::max(dim, 0)) + 1);
  for (int t = 0; t <= dim; ++t) {
    std::vector<int> cur;
    kappa_partitions(t, t, cur, kp[t]);
  }
  std::vector<int> psi(static_cast<std::size_t>(m), 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == m) {
      for (int t = 0; used + t <= dim; ++t) {
        for (const auto& k : kp[t]) out.push_back({psi, k, used + t});
      }
      return;
    }
    const int cap = prev[i] >= 0 ? psi[prev[i]] : dim;
    for (int a = 0; used + a <= dim && a <= cap; ++a) {
      psi[i] = a;
      rec(i + 1, used + a);
    }
    psi[i] = 0;
  };
  if (dim >= 0) rec(0, 0);
  return out;
}

std::mutex g_mutex;
using GenKey = std::tuple<int, int, LegColouring>;
std::map<GenKey, std::vector<DecoratedGenerator>>& generator_cache() {
  static std::map<GenKey, std::vector<DecoratedGenerator>> c;
  return c;
}
std::map<std::pair<int, LegColouring>, std::vector<StableGraph>>& graph_cache() {
  static std::map<std::pair<int, LegColouring>, std::vector<StableGraph>> c;
  return c;
}

const std::vector<StableGraph>& cached_graphs(int g, const LegColouring& colours) {
  auto key = std::make_pair(g, colours);
  {
    std::lock_guard<std::mutex> lock(g_mutex);
    auto it = graph_cache().find(key);
    if (it != graph_cache().end()) return it->second;
  }
  auto graphs = enumerate_stable_graphs(g, colours);
  std::lock_guard<std::mutex> lock(g_mutex);
  return graph_cache().emplace(std::move(key), std::move(graphs)).first->second;
}

}  // namespace

DecoratedGenerator DecoratedGenerator::undecorated(const StableGraph& g) {
  DecoratedGenerator d;
  d.graph = g;
  d.leg_psi.assign(g.legs.size(), 0);
  d.edge_psi.assign(g.edges.size(), {0, 0});
  d.kappa.assign(g.genus.size(), {});
  return d;
}

int DecoratedGenerator::vertex_degree(int v) const {
  int d = 0;
  for (int i = 0; i < graph.leg_count(); ++i) {
    if (graph.legs[i] == v) d += leg_psi[i];
  }
  for (int e = 0; e < graph.edge_count(); ++e) {
    if (graph.edges[e].first == v) d += edge_psi[e][0];
    if (graph.edges[e].second == v) d += edge_psi[e][1];
  }
  for (int j : kappa[v]) d += j;
  return d;
}

int DecoratedGenerator::codimension() const {
  int k = graph.edge_count();
  for (int v = 0; v < graph.vertex_count(); ++v) k += vertex_degree(v);
  return k;
}

int DecoratedGenerator::psi_at(int v, const Incidence& inc) const {
  (void)v;
  return inc.kind == Incidence::Kind::kLeg ? leg_psi[inc.index] : edge_psi[inc.index][inc.side];
}

bool DecoratedGenerator::is_valid() const {
  if (!graph.is_stable()) return false;
  if (leg_psi.size() != graph.legs.size() || edge_psi.size() != graph.edges.size() ||
      kappa.size() != graph.genus.size()) {
    return false;
  }
  for (int v = 0; v < graph.vertex_count(); ++v) {
    for (int j : kappa[v]) {
      if (j < 1) return false;
    }
    if (vertex_degree(v) > 3 * graph.genus[v] - 3 + graph.valence(v)) return false;
  }
  for (int x : leg_psi) {
    if (x < 0) return false;
  }
  for (const auto& e : edge_psi) {
    if (e[0] < 0 || e[1] < 0) return false;
  }
  return true;
}

std::string DecoratedGenerator::to_string() const {
  std::ostringstream os;
  for (int v = 0; v < graph.vertex_count(); ++v) {
    os << (v ? " " : "") << "v" << v << "(g=" << graph.genus[v];
    for (int i = 0; i < graph.leg_count(); ++i) {
      if (graph.legs[i] != v) continue;
      os << " " << i + 1;
      if (leg_psi[i]) os << "^" << leg_psi[i];
    }
    for (int j : kappa[v]) os << " k" << j;
    os << ")";
  }
  for (int e = 0; e < graph.edge_count(); ++e) {
    os << " e" << graph.edges[e].first << "-" << graph.edges[e].second;
    if (edge_psi[e][0] || edge_psi[e][1]) os << "[" << edge_psi[e][0] << "," << edge_psi[e][1] << "]";
  }
  return os.str();
}

LegColouring numbered_legs(int n) {
  LegColouring c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = i;
  return c;
}

LegColouring unnumbered_legs(int n) { return LegColouring(static_cast<std::size_t>(n), 0); }

Canonical canonicalize(const DecoratedGenerator& gen, const LegColouring& colours) {
  auto [code, order] = best_order(gen, colours);
  return {code_string(code), relabel(gen, order)};
}

std::string canonical_code(const DecoratedGenerator& gen) { return canonical_code(gen, numbered_legs(gen.legs())); }

std::string canonical_code(const DecoratedGenerator& gen, const LegColouring& colours) {
  return code_string(best_order(gen, colours).first);
}

std::string canonical_code(const StableGraph& g) { return canonical_code(DecoratedGenerator::undecorated(g)); }

DecoratedGenerator canonical_form(const DecoratedGenerator& gen) {
  return relabel(gen, best_order(gen, numbered_legs(gen.legs())).second);
}

void for_each_generator(int g, int k, const LegColouring& colours,
                        const std::function<void(const DecoratedGenerator&)>& visit) {
  const int n = static_cast<int>(colours.size());
  if (g < 0 || 2 * g - 2 + n <= 0) throw std::invalid_argument("for_each_generator: unstable (g, n)");
  if (k < 0 || k > 3 * g - 3 + n) return;
  for (const auto& graph : cached_graphs(g, colours)) {
    const int E = graph.edge_count();
    if (E > k) continue;
    const int V = graph.vertex_count();
    std::vector<std::vector<Incidence>> inc(static_cast<std::size_t>(V));
    std::vector<std::vector<VertexDecoration>> options(static_cast<std::size_t>(V));
    for (int v = 0; v < V; ++v) {
      inc[v] = graph.incidences(v);
      const int m = static_cast<int>(inc[v].size());
      std::vector<int> prev(static_cast<std::size_t>(m), -1);
      for (int i = 0; i < m; ++i) {
        if (inc[v][i].kind != Incidence::Kind::kLeg) continue;
        for (int j = i - 1; j >= 0; --j) {
          if (inc[v][j].kind == Incidence::Kind::kLeg && colours[inc[v][j].index] == colours[inc[v][i].index]) {
            prev[i] = j;
            break;
          }
        }
      }
      options[v] = vertex_decorations(m, 3 * graph.genus[v] - 3 + m, prev);
    }
    std::map<std::string, DecoratedGenerator> found;
    DecoratedGenerator gen = DecoratedGenerator::undecorated(graph);
    std::function<void(int, int)> rec = [&](int v, int remaining) {
      if (v == V) {
        if (remaining != 0) return;
        Canonical c = canonicalize(gen, colours);
        found.emplace(std::move(c.code), std::move(c.form));
        return;
      }
      for (const auto& opt : options[v]) {
        if (opt.degree > remaining) continue;
        for (std::size_t i = 0; i < inc[v].size(); ++i) {
          const Incidence& x = inc[v][i];
          if (x.kind == Incidence::Kind::kLeg) {
            gen.leg_psi[x.index] = opt.psi[i];
          } else {
            gen.edge_psi[x.index][x.side] = opt.psi[i];
          }
        }
        gen.kappa[v] = opt.kappa;
        rec(v + 1, remaining - opt.degree);
      }
      gen.kappa[v].clear();
    };
    rec(0, k - E);
    for (const auto& [code, d] : found) visit(d);
  }
}

const std::vector<DecoratedGenerator>& enumerate_generators(int g, int n, int k) {
  if (n < 0) throw std::invalid_argument("enumerate_generators: unstable (g, n)");
  return enumerate_generators(g, k, numbered_legs(n));
}

const std::vector<DecoratedGenerator>& enumerate_generators(int g, int k, const LegColouring& colours) {
  const int n = static_cast<int>(colours.size());
  if (g < 0 || 2 * g - 2 + n <= 0) throw std::invalid_argument("enumerate_generators: unstable (g, n)");
  GenKey key{g, k, colours};
  {
    std::lock_guard<std::mutex> lock(g_mutex);
    auto it = generator_cache().find(key);
    if (it != generator_cache().end()) return it->second;
  }
  std::vector<DecoratedGenerator> out;
  for_each_generator(g, k, colours, [&](const DecoratedGenerator& d) { out.push_back(d); });
  std::lock_guard<std::mutex> lock(g_mutex);
  return generator_cache().emplace(std::move(key), std::move(out)).first->second;
}

std::size_t count_generators(int g, int n, int k) { return enumerate_generators(g, n, k).size(); }

}  // namespace mgn::tautcalc
