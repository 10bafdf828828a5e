// Copyright 2026 The linecover Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-side oracles and graph builders. Everything here is deliberately
// naive so it can check the library independently.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "linecover/linecover.hpp"

namespace lctest {

using namespace linecover;

struct E {
  VertexId u;
  VertexId v;
  double length;
};

// Vertices 0..n-1 on a line (x = index) unless coordinates are given; edge
// ids follow list order.
inline RoadGraph make_graph(int n, const std::vector<E>& edges,
                            std::vector<std::pair<double, double>> xy = {}) {
  std::vector<Vertex> vs;
  for (int i = 0; i < n; ++i) {
    const auto [x, y] = xy.empty() ? std::pair<double, double>{i, 0.0} : xy[i];
    vs.push_back({i, x, y});
  }
  std::vector<EdgeSpec> es;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    es.push_back({static_cast<EdgeId>(i), edges[i].u, edges[i].v, edges[i].length});
  }
  return RoadGraph(std::move(vs), std::move(es));
}

// Random connected graph: a random spanning tree plus `extra` random edges
// (parallel edges possible), lengths uniform in [1, 10).
inline RoadGraph random_graph(int n, int extra, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> len(1.0, 10.0);
  std::vector<E> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    edges.push_back({pick(rng), v, len(rng)});
  }
  std::uniform_int_distribution<int> any(0, n - 1);
  while (extra > 0) {
    const int a = any(rng);
    const int b = any(rng);
    if (a == b) continue;
    edges.push_back({a, b, len(rng)});
    --extra;
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return make_graph(n, edges);
}

inline std::vector<std::vector<double>> floyd_warshall(const RoadGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, kInfinity));
  for (int i = 0; i < n; ++i) d[i][i] = 0.0;
  for (const Edge& e : g.edges()) {
    d[e.u][e.v] = std::min(d[e.u][e.v], e.length);
    d[e.v][e.u] = std::min(d[e.v][e.u], e.length);
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Number of connected components formed by an edge subset.
inline int component_count(const RoadGraph& g, const std::vector<EdgeIndex>& edges) {
  UnionFind uf(g.vertex_count());
  for (EdgeIndex e : edges) uf.unite(g.edge(e).u, g.edge(e).v);
  std::set<int> roots;
  for (EdgeIndex e : edges) roots.insert(uf.find(g.edge(e).u));
  return static_cast<int>(roots.size());
}

// Minimum pairing weight by plain recursion over all (p-1)!! pairings.
inline double brute_matching(const std::vector<std::vector<double>>& cost) {
  std::vector<int> left(cost.size());
  std::iota(left.begin(), left.end(), 0);
  std::function<double(std::vector<int>)> go = [&](std::vector<int> rest) {
    if (rest.empty()) return 0.0;
    double best = kInfinity;
    const int a = rest.front();
    for (std::size_t i = 1; i < rest.size(); ++i) {
      std::vector<int> next;
      for (std::size_t j = 1; j < rest.size(); ++j)
        if (j != i) next.push_back(rest[j]);
      best = std::min(best, cost[a][rest[i]] + go(next));
    }
    return best;
  };
  return go(left);
}

// Every exactly-t-arc 0 -> r path by depth-first enumeration; returns the
// minimum length or infinity.
inline double brute_exact_path(const std::vector<Arc>& arcs, int r, int t) {
  double best = kInfinity;
  std::function<void(int, int, double)> go = [&](int at, int used, double len) {
    if (used == t) {
      if (at == r) best = std::min(best, len);
      return;
    }
    for (const Arc& a : arcs)
      if (a.tail == at) go(a.head, used + 1, len + a.length);
  };
  go(0, 0, 0.0);
  return best;
}

// Random TourGraph on positions 0..r; every (a, a+1) arc is present so some
// path always exists, other arcs appear with probability `density`.
inline TourGraph random_tour_graph(int r, double density, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_real_distribution<double> len(1.0, 20.0);
  std::vector<Arc> arcs;
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b <= r; ++b)
      if (b == a + 1 || coin(rng) < density) arcs.push_back({a, b, len(rng)});
  return TourGraph(r, arcs);
}

// Optimal makespan of assigning jobs to m machines, exhaustively.
inline double brute_makespan(const std::vector<double>& jobs, int m) {
  double best = kInfinity;
  std::vector<double> load(m, 0.0);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == jobs.size()) {
      best = std::min(best, *std::max_element(load.begin(), load.end()));
      return;
    }
    for (int k = 0; k < m; ++k) {
      load[k] += jobs[i];
      go(i + 1);
      load[k] -= jobs[i];
    }
  };
  go(0);
  return best;
}

inline double relative_gap(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

// Random connected edge subset of about `size` edges grown from edge 0's
// neighbourhood.
inline std::vector<EdgeIndex> grow_subset(const RoadGraph& g, int size, std::mt19937_64& rng) {
  std::vector<char> in(g.edge_count(), 0);
  std::vector<char> touched(g.vertex_count(), 0);
  const EdgeIndex seed = static_cast<EdgeIndex>(rng() % g.edge_count());
  in[seed] = 1;
  touched[g.edge(seed).u] = touched[g.edge(seed).v] = 1;
  std::vector<EdgeIndex> out{seed};
  while (static_cast<int>(out.size()) < size) {
    std::vector<EdgeIndex> frontier;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e)
      if (!in[e] && (touched[g.edge(e).u] || touched[g.edge(e).v])) frontier.push_back(e);
    if (frontier.empty()) break;
    const EdgeIndex e = frontier[rng() % frontier.size()];
    in[e] = 1;
    touched[g.edge(e).u] = touched[g.edge(e).v] = 1;
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lctest
