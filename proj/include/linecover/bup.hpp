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

#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linecover/config.hpp"
#include "linecover/error.hpp"
#include "linecover/graph.hpp"

namespace linecover {

enum class TraversalKind { kRequired, kDeadhead };

inline const char* to_string(TraversalKind k) {
  return k == TraversalKind::kRequired ? "required" : "deadhead";
}

// One directed pass over a road edge.
struct Traversal {
  EdgeIndex edge = kNoEdge;
  VertexIndex from = kNoVertex;
  VertexIndex to = kNoVertex;
  TraversalKind kind = TraversalKind::kRequired;
};

struct MultiEdge {
  EdgeIndex edge = kNoEdge;
  TraversalKind kind = TraversalKind::kRequired;
};

// Required edges plus the deadhead copies that make every degree even.
struct EulerMultigraph {
  VertexIndex depot = kNoVertex;
  std::vector<MultiEdge> edges;  // required first (ascending), then deadheads
  std::vector<std::pair<VertexIndex, VertexIndex>> matched_pairs;
  double matching_weight = 0.0;
};

struct EulerCircuit {
  VertexIndex depot = kNoVertex;
  std::vector<Traversal> traversals;
  std::vector<double> prefix;  // prefix[j] = length of traversals [0, j)

  int positions() const { return static_cast<int>(traversals.size()); }

  // Vertex at circuit position j in [0, r]; positions 0 and r are the depot.
  VertexIndex vertex_at(int j) const {
    return j == 0 ? depot : traversals[j - 1].to;
  }
};

// Upper bound on odd-vertex count for the exact matching; larger instances
// use greedy pairing plus pairwise improvement.
inline constexpr int kExactMatchingLimit = 10;

struct Matching {
  std::vector<std::pair<int, int>> pairs;  // indices into the cost matrix
  double weight = 0.0;
};

namespace detail {

inline Matching exact_matching(const std::vector<std::vector<double>>& cost) {
  const int p = static_cast<int>(cost.size());
  const int full = (1 << p) - 1;
  std::vector<double> best(1 << p, kInfinity);
  std::vector<int> partner(1 << p, -1);
  best[0] = 0.0;
  // best[mask]: cheapest pairing of the vertices in mask, built by always
  // pairing the lowest unpaired vertex.
  for (int mask = 0; mask <= full; ++mask) {
    if (best[mask] == kInfinity) continue;
    int i = 0;
    while (i < p && (mask >> i & 1)) ++i;
    if (i == p) continue;
    for (int j = i + 1; j < p; ++j) {
      if (mask >> j & 1) continue;
      const int next = mask | (1 << i) | (1 << j);
      const double w = best[mask] + cost[i][j];
      if (w < best[next]) {
        best[next] = w;
        partner[next] = i * p + j;
      }
    }
  }
  Matching out;
  out.weight = best[full];
  for (int mask = full; mask != 0;) {
    const int i = partner[mask] / p;
    const int j = partner[mask] % p;
    out.pairs.emplace_back(i, j);
    mask &= ~((1 << i) | (1 << j));
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

inline Matching greedy_matching(const std::vector<std::vector<double>>& cost) {
  const int p = static_cast<int>(cost.size());
  struct Candidate {
    double w;
    int i;
    int j;
  };
  std::vector<Candidate> all;
  all.reserve(static_cast<std::size_t>(p) * (p - 1) / 2);
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) all.push_back({cost[i][j], i, j});
  }
  std::sort(all.begin(), all.end(), [](const Candidate& a, const Candidate& b) {
    if (a.w != b.w) return a.w < b.w;
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  std::vector<char> used(p, 0);
  std::vector<std::pair<int, int>> pairs;
  for (const Candidate& c : all) {
    if (used[c.i] || used[c.j]) continue;
    used[c.i] = used[c.j] = 1;
    pairs.emplace_back(c.i, c.j);
  }

  // 2-swap: re-pair (a,b),(c,d) as (a,c),(b,d) or (a,d),(b,c) when cheaper.
  bool improved = true;
  for (int pass = 0; improved && pass < 100; ++pass) {
    improved = false;
    for (std::size_t x = 0; x < pairs.size(); ++x) {
      for (std::size_t y = x + 1; y < pairs.size(); ++y) {
        auto [a, b] = pairs[x];
        auto [c, d] = pairs[y];
        const double now = cost[a][b] + cost[c][d];
        const double alt1 = cost[a][c] + cost[b][d];
        const double alt2 = cost[a][d] + cost[b][c];
        const double slack = 1e-9 * std::max(1.0, now);
        if (alt1 <= alt2 && alt1 < now - slack) {
          pairs[x] = {std::min(a, c), std::max(a, c)};
          pairs[y] = {std::min(b, d), std::max(b, d)};
          improved = true;
        } else if (alt2 < now - slack) {
          pairs[x] = {std::min(a, d), std::max(a, d)};
          pairs[y] = {std::min(b, c), std::max(b, c)};
          improved = true;
        }
      }
    }
  }
  Matching out;
  std::sort(pairs.begin(), pairs.end());
  for (auto [i, j] : pairs) out.weight += cost[i][j];
  out.pairs = std::move(pairs);
  return out;
}

}  // namespace detail

// Minimum-weight perfect matching on an even-sized symmetric cost matrix;
// exact up to kExactMatchingLimit vertices, heuristic above.
inline Matching perfect_matching(const std::vector<std::vector<double>>& cost) {
  ensure(cost.size() % 2 == 0, "perfect_matching: odd vertex count");
  if (cost.empty()) return {};
  if (static_cast<int>(cost.size()) <= kExactMatchingLimit) {
    return detail::exact_matching(cost);
  }
  return detail::greedy_matching(cost);
}

// Pairs the odd-degree vertices of the required edges by shortest-path
// distance in the full graph and duplicates each matched path as deadheads.
inline EulerMultigraph eulerize(const RoadGraph& g,
                                std::span<const EdgeIndex> required,
                                VertexIndex depot) {
  if (required.empty()) throw ValidationError("eulerize: no required edges");
  std::vector<EdgeIndex> req(required.begin(), required.end());
  std::sort(req.begin(), req.end());
  ensure(connected_edge_components(g, req).size() == 1,
         "eulerize: required edges are not connected");

  std::vector<int> degree(g.vertex_count(), 0);
  bool depot_touched = false;
  for (EdgeIndex e : req) {
    ++degree[g.edge(e).u];
    ++degree[g.edge(e).v];
    depot_touched = depot_touched || g.edge(e).u == depot ||
                    g.edge(e).v == depot;
  }
  if (!depot_touched) {
    throw ValidationError("eulerize: depot is not incident to a required edge");
  }

  EulerMultigraph out;
  out.depot = depot;
  for (EdgeIndex e : req) out.edges.push_back({e, TraversalKind::kRequired});

  std::vector<VertexIndex> odd;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (degree[v] % 2 != 0) odd.push_back(v);
  }
  if (odd.empty()) return out;

  const std::size_t p = odd.size();
  std::vector<std::vector<double>> cost(p, std::vector<double>(p, 0.0));
  for (std::size_t i = 0; i < p; ++i) {
    const DistanceOracle from = shortest_from(g, odd[i]);
    for (std::size_t j = 0; j < p; ++j) cost[i][j] = from.dist[odd[j]];
  }
  // Symmetrize so that round-off in the two directions cannot make the
  // matching depend on orientation.
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i + 1; j < p; ++j) {
      const double w = std::min(cost[i][j], cost[j][i]);
      cost[i][j] = cost[j][i] = w;
    }
  }

  const Matching m = perfect_matching(cost);
  out.matching_weight = m.weight;
  for (auto [i, j] : m.pairs) {
    out.matched_pairs.emplace_back(odd[i], odd[j]);
    const DistanceOracle from = shortest_from(g, odd[i]);
    for (EdgeIndex e : from.path_edges(odd[j])) {
      out.edges.push_back({e, TraversalKind::kDeadhead});
    }
  }
  return out;
}

// Hierholzer's algorithm from the depot; at every vertex the unused
// multi-edge with the smallest position in `m.edges` is taken first.
inline EulerCircuit euler_circuit(const RoadGraph& g, const EulerMultigraph& m) {
  std::vector<std::vector<int>> adjacency(g.vertex_count());
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    const Edge& e = g.edge(m.edges[i].edge);
    adjacency[e.u].push_back(static_cast<int>(i));
    adjacency[e.v].push_back(static_cast<int>(i));
  }
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (adjacency[v].size() % 2 != 0) {
      throw ValidationError("euler_circuit: vertex " +
                            std::to_string(g.vertex(v).id) +
                            " has odd degree");
    }
  }
  if (m.depot < 0 || m.depot >= g.vertex_count() ||
      adjacency[m.depot].empty()) {
    throw ValidationError("euler_circuit: depot has no incident edges");
  }

  std::vector<std::size_t> next(g.vertex_count(), 0);
  std::vector<char> used(m.edges.size(), 0);
  std::vector<std::pair<VertexIndex, int>> stack{{m.depot, -1}};
  std::vector<int> reversed;
  reversed.reserve(m.edges.size());
  while (!stack.empty()) {
    const VertexIndex v = stack.back().first;
    auto& cursor = next[v];
    while (cursor < adjacency[v].size() && used[adjacency[v][cursor]]) {
      ++cursor;
    }
    if (cursor < adjacency[v].size()) {
      const int me = adjacency[v][cursor];
      used[me] = 1;
      stack.emplace_back(g.edge(m.edges[me].edge).other(v), me);
    } else {
      if (stack.back().second >= 0) reversed.push_back(stack.back().second);
      stack.pop_back();
    }
  }
  if (reversed.size() != m.edges.size()) {
    throw ValidationError("euler_circuit: multigraph is not connected");
  }

  EulerCircuit c;
  c.depot = m.depot;
  c.traversals.reserve(reversed.size());
  c.prefix.reserve(reversed.size() + 1);
  c.prefix.push_back(0.0);
  VertexIndex at = m.depot;
  for (auto it = reversed.rbegin(); it != reversed.rend(); ++it) {
    const MultiEdge& me = m.edges[*it];
    const Edge& e = g.edge(me.edge);
    ensure(e.u == at || e.v == at, "euler_circuit: walk is not continuous");
    const VertexIndex to = e.other(at);
    c.traversals.push_back({me.edge, at, to, me.kind});
    c.prefix.push_back(c.prefix.back() + e.length);
    at = to;
  }
  ensure(at == m.depot, "euler_circuit: walk does not return to the depot");
  return c;
}

struct Arc {
  int tail = 0;
  int head = 0;
  double length = 0.0;
};

// DAG over circuit positions 0..r. Arc (a, b) is the tour that walks from
// the depot to position a, follows the circuit to b and returns.
class TourGraph {
 public:
  TourGraph() = default;

  // Arcs must satisfy 0 <= tail < head <= r.
  TourGraph(int r, std::vector<Arc> arcs) : r_(r), incoming_(r + 1) {
    std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) {
      return x.head != y.head ? x.head < y.head : x.tail < y.tail;
    });
    for (const Arc& a : arcs) {
      ensure(a.tail >= 0 && a.tail < a.head && a.head <= r,
             "TourGraph: arc outside 0 <= a < b <= r");
      incoming_[a.head].push_back(a);
    }
    arc_count_ = arcs.size();
  }

  int positions() const { return r_; }
  std::size_t arc_count() const { return arc_count_; }

  // Arcs ending at `head`, by ascending tail.
  std::span<const Arc> incoming(int head) const { return incoming_[head]; }

  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    out.reserve(arc_count_);
    for (const auto& list : incoming_) out.insert(out.end(), list.begin(), list.end());
    return out;
  }

 private:
  int r_ = 0;
  std::vector<std::vector<Arc>> incoming_;
  std::size_t arc_count_ = 0;
};

// All energy-feasible arcs. `depot` holds shortest paths in the full graph
// from the circuit's depot.
inline TourGraph build_tour_graph(const EulerCircuit& circuit,
                                  const RoadGraph& g,
                                  const DistanceOracle& depot, double energy) {
  ensure(depot.source == circuit.depot,
         "build_tour_graph: distance oracle is not rooted at the depot");
  const int r = circuit.positions();
  std::vector<double> reach(r + 1);
  for (int j = 0; j <= r; ++j) reach[j] = depot.dist[circuit.vertex_at(j)];
  reach[0] = reach[r] = 0.0;

  std::vector<Arc> arcs;
  std::vector<int> cover(r + 1, 0);
  for (int a = 0; a < r; ++a) {
    for (int b = a + 1; b <= r; ++b) {
      const double out_and_along = reach[a] + (circuit.prefix[b] - circuit.prefix[a]);
      if (out_and_along > energy) break;
      const double len = out_and_along + reach[b];
      if (len <= energy) {
        arcs.push_back({a, b, len});
        ++cover[a];
        --cover[b];
      }
    }
  }
  int running = 0;
  for (int j = 0; j < r; ++j) {
    running += cover[j];
    if (running == 0) {
      const Traversal& t = circuit.traversals[j];
      throw InfeasibleError(
          "energy-infeasible: no tour within energy " +
          std::to_string(energy) + " m can cover edge " +
          std::to_string(g.edge(t.edge).id) + " (circuit position " +
          std::to_string(j) + ")");
    }
  }
  return TourGraph(r, std::move(arcs));
}

struct ArcPath {
  std::vector<Arc> arcs;
  double length = 0.0;
};

struct TourCount {
  int min_arcs = 0;  // t'
  int t = 0;         // t' rounded up to a multiple of M
};

// Fewest arcs on any 0 -> r path, and that count rounded up to a multiple of
// the team size.
inline TourCount compute_tour_count(const TourGraph& d, int team_size) {
  if (team_size < 1) throw ValidationError("compute_tour_count: M must be >= 1");
  const int r = d.positions();
  constexpr int kUnreached = -1;
  std::vector<int> hops(r + 1, kUnreached);
  hops[0] = 0;
  for (int v = 1; v <= r; ++v) {
    for (const Arc& a : d.incoming(v)) {
      if (hops[a.tail] == kUnreached) continue;
      if (hops[v] == kUnreached || hops[a.tail] + 1 < hops[v]) {
        hops[v] = hops[a.tail] + 1;
      }
    }
  }
  if (r == 0 || hops[r] == kUnreached) {
    throw InfeasibleError("compute_tour_count: no tour sequence covers the circuit");
  }
  TourCount out;
  out.min_arcs = hops[r];
  out.t = (out.min_arcs + team_size - 1) / team_size * team_size;
  return out;
}

// Shortest 0 -> r path using exactly `t` arcs whose lengths lie in
// [lower, upper]. dp(v, n) = min over arcs (k, v) of |arc| + dp(k, n - 1);
// equal values keep the smaller predecessor position.
inline std::optional<ArcPath> dp_exact_arcs(const TourGraph& d, int t,
                                            double lower = 0.0,
                                            double upper = kInfinity) {
  if (t < 1) throw ValidationError("dp_exact_arcs: t must be >= 1");
  const int r = d.positions();
  if (t > r) return std::nullopt;
  std::vector<std::vector<double>> dp(t + 1, std::vector<double>(r + 1, kInfinity));
  std::vector<std::vector<int>> arc_of(t + 1, std::vector<int>(r + 1, -1));
  dp[0][0] = 0.0;
  for (int n = 1; n <= t; ++n) {
    // A path of n arcs ends at position >= n and must still leave t - n
    // arcs for the remainder.
    for (int v = n; v <= r - (t - n); ++v) {
      const auto in = d.incoming(v);
      for (std::size_t i = 0; i < in.size(); ++i) {
        const Arc& a = in[i];
        if (a.length < lower || a.length > upper) continue;
        const double prev = dp[n - 1][a.tail];
        if (prev == kInfinity) continue;
        const double cand = a.length + prev;
        if (cand < dp[n][v]) {
          dp[n][v] = cand;
          arc_of[n][v] = static_cast<int>(i);
        }
      }
    }
  }
  if (dp[t][r] == kInfinity) return std::nullopt;
  ArcPath path;
  path.length = dp[t][r];
  for (int n = t, v = r; n > 0; --n) {
    const Arc& a = d.incoming(v)[arc_of[n][v]];
    path.arcs.push_back(a);
    v = a.tail;
  }
  std::reverse(path.arcs.begin(), path.arcs.end());
  return path;
}

// Plain Ulusoy split: shortest 0 -> r path with any number of arcs.
inline ArcPath up_arc_path(const TourGraph& d) {
  const int r = d.positions();
  std::vector<double> dist(r + 1, kInfinity);
  std::vector<int> arc_of(r + 1, -1);
  dist[0] = 0.0;
  for (int v = 1; v <= r; ++v) {
    const auto in = d.incoming(v);
    for (std::size_t i = 0; i < in.size(); ++i) {
      const double prev = dist[in[i].tail];
      if (prev == kInfinity) continue;
      const double cand = in[i].length + prev;
      if (cand < dist[v]) {
        dist[v] = cand;
        arc_of[v] = static_cast<int>(i);
      }
    }
  }
  if (r == 0 || dist[r] == kInfinity) {
    throw InfeasibleError("up_baseline: no tour sequence covers the circuit");
  }
  ArcPath path;
  path.length = dist[r];
  for (int v = r; v > 0;) {
    const Arc& a = d.incoming(v)[arc_of[v]];
    path.arcs.push_back(a);
    v = a.tail;
  }
  std::reverse(path.arcs.begin(), path.arcs.end());
  return path;
}

struct BupOutcome {
  ArcPath path;
  TourCount count;
  int t = 0;              // arc count actually used
  bool fallback = false;  // t had to be raised above the multiple of M
  int iterations = 0;     // accepted (feasible) DP rounds
  std::vector<std::pair<double, double>> windows;  // [lower, upper] per round
};

// Iteratively shrinks the admissible tour-length window: after each feasible
// exact-t solve, lower becomes the shortest chosen arc and upper becomes
// beta times the longest; stops at the first infeasible solve and keeps the
// last feasible path.
inline BupOutcome balanced_arc_path(const TourGraph& d, int team_size,
                                    double beta, double energy) {
  BupOutcome out;
  out.count = compute_tour_count(d, team_size);
  out.t = out.count.t;
  const int r = d.positions();

  std::optional<ArcPath> first = dp_exact_arcs(d, out.t, 0.0, energy);
  while (!first && out.t + team_size <= r) {
    out.t += team_size;
    out.fallback = true;
    first = dp_exact_arcs(d, out.t, 0.0, energy);
  }
  if (!first) {
    // Fewer circuit positions than any multiple of M: one tour per position.
    out.t = r;
    out.fallback = true;
    first = dp_exact_arcs(d, out.t, 0.0, energy);
  }
  if (!first) {
    throw InfeasibleError("balanced_tours: no feasible tour split for " +
                          std::to_string(team_size) + " robots");
  }

  double lower = 0.0;
  double upper = energy;
  std::optional<ArcPath> current = std::move(first);
  while (current) {
    out.path = std::move(*current);
    ++out.iterations;
    double lo = kInfinity;
    double hi = 0.0;
    for (const Arc& a : out.path.arcs) {
      lo = std::min(lo, a.length);
      hi = std::max(hi, a.length);
    }
    out.windows.emplace_back(lower, upper);
    lower = lo;
    upper = beta * hi;
    if (lower > upper) break;
    current = dp_exact_arcs(d, out.t, lower, upper);
  }
  return out;
}

// A depot-to-depot walk: approach deadheads, a circuit slice, and return
// deadheads.
struct Tour {
  std::vector<Traversal> walk;
  double length = 0.0;
  int first_position = 0;
  int last_position = 0;
  std::vector<EdgeIndex> covered;  // required edges, in walk order
};

inline Tour materialize_tour(const Arc& arc, const EulerCircuit& circuit,
                             const RoadGraph& g, const DistanceOracle& depot) {
  Tour tour;
  tour.first_position = arc.tail;
  tour.last_position = arc.head;
  tour.length = arc.length;

  VertexIndex at = circuit.depot;
  for (EdgeIndex e : depot.path_edges(circuit.vertex_at(arc.tail))) {
    const VertexIndex to = g.edge(e).other(at);
    tour.walk.push_back({e, at, to, TraversalKind::kDeadhead});
    at = to;
  }
  for (int j = arc.tail; j < arc.head; ++j) {
    const Traversal& t = circuit.traversals[j];
    tour.walk.push_back(t);
    if (t.kind == TraversalKind::kRequired) tour.covered.push_back(t.edge);
    at = t.to;
  }
  auto back = depot.path_edges(at);
  for (auto it = back.rbegin(); it != back.rend(); ++it) {
    const VertexIndex to = g.edge(*it).other(at);
    tour.walk.push_back({*it, at, to, TraversalKind::kDeadhead});
    at = to;
  }
  ensure(at == circuit.depot, "materialize_tour: tour does not end at depot");
  return tour;
}

inline std::vector<Tour> materialize_tours(const ArcPath& path,
                                           const EulerCircuit& circuit,
                                           const RoadGraph& g,
                                           const DistanceOracle& depot) {
  std::vector<Tour> tours;
  tours.reserve(path.arcs.size());
  for (const Arc& a : path.arcs) {
    tours.push_back(materialize_tour(a, circuit, g, depot));
  }
  return tours;
}

inline std::vector<Tour> balanced_tours(const TourGraph& d,
                                        const EulerCircuit& circuit,
                                        const RoadGraph& g,
                                        const DistanceOracle& depot,
                                        int team_size, double beta,
                                        double energy,
                                        BupOutcome* outcome = nullptr) {
  BupOutcome o = balanced_arc_path(d, team_size, beta, energy);
  auto tours = materialize_tours(o.path, circuit, g, depot);
  if (outcome) *outcome = std::move(o);
  return tours;
}

inline std::vector<Tour> up_baseline(const TourGraph& d,
                                     const EulerCircuit& circuit,
                                     const RoadGraph& g,
                                     const DistanceOracle& depot) {
  return materialize_tours(up_arc_path(d), circuit, g, depot);
}

struct LptAssignment {
  std::vector<int> robot_of_job;
  std::vector<double> workloads;
};

// Longest-processing-time greedy: jobs by descending length (ties by index)
// each go to the least-loaded robot (ties by smaller robot index).
inline LptAssignment assign_lpt(std::span<const double> lengths, int robots) {
  if (robots < 1) throw ValidationError("assign_tours_lpt: M must be >= 1");
  std::vector<int> order(lengths.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return lengths[a] > lengths[b]; });
  LptAssignment out;
  out.robot_of_job.assign(lengths.size(), 0);
  out.workloads.assign(robots, 0.0);
  for (int job : order) {
    const int robot = static_cast<int>(
        std::min_element(out.workloads.begin(), out.workloads.end()) -
        out.workloads.begin());
    out.robot_of_job[job] = robot;
    out.workloads[robot] += lengths[job];
  }
  return out;
}

inline LptAssignment assign_tours_lpt(std::span<const Tour> tours, int robots) {
  std::vector<double> lengths;
  lengths.reserve(tours.size());
  for (const Tour& t : tours) lengths.push_back(t.length);
  return assign_lpt(lengths, robots);
}

enum class Coverer { kBup, kUp };

inline const char* to_string(Coverer c) { return c == Coverer::kBup ? "bup" : "up"; }

// Everything planned for one sub-graph.
struct SubgraphPlan {
  int subgraph = -1;
  VertexIndex depot = kNoVertex;
  Coverer coverer = Coverer::kBup;
  std::vector<Tour> tours;
  std::vector<int> robot_of_tour;
  std::vector<double> workloads;  // per coverage robot, meters
  int circuit_positions = 0;
  std::size_t arc_count = 0;
  double matching_weight = 0.0;
  int min_tours = 0;  // t'
  int tours_planned = 0;
  bool fallback = false;
  int iterations = 0;
  double runtime_seconds = 0.0;

  std::vector<double> tour_lengths() const {
    std::vector<double> out;
    out.reserve(tours.size());
    for (const Tour& t : tours) out.push_back(t.length);
    return out;
  }
};

// Plans the coverage of `required` from `depot` for a team of cfg.crobs
// robots, with either the balanced split or the plain Ulusoy split.
inline SubgraphPlan cover_subgraph(const RoadGraph& g,
                                   std::span<const EdgeIndex> required,
                                   VertexIndex depot, const PlannerConfig& cfg,
                                   Coverer coverer, DistanceCache& cache) {
  const auto started = std::chrono::steady_clock::now();
  SubgraphPlan plan;
  plan.depot = depot;
  plan.coverer = coverer;
  const auto multigraph = eulerize(g, required, depot);
  plan.matching_weight = multigraph.matching_weight;
  const auto circuit = euler_circuit(g, multigraph);
  plan.circuit_positions = circuit.positions();
  const auto oracle = cache.from(depot);
  const TourGraph d = build_tour_graph(circuit, g, *oracle, cfg.energy);
  plan.arc_count = d.arc_count();
  if (coverer == Coverer::kBup) {
    BupOutcome outcome;
    plan.tours = balanced_tours(d, circuit, g, *oracle, cfg.crobs, cfg.beta,
                                cfg.energy, &outcome);
    plan.min_tours = outcome.count.min_arcs;
    plan.tours_planned = outcome.t;
    plan.fallback = outcome.fallback;
    plan.iterations = outcome.iterations;
  } else {
    plan.tours = up_baseline(d, circuit, g, *oracle);
    plan.min_tours = compute_tour_count(d, cfg.crobs).min_arcs;
    plan.tours_planned = static_cast<int>(plan.tours.size());
    plan.iterations = 1;
  }
  const auto lpt = assign_tours_lpt(plan.tours, cfg.crobs);
  plan.robot_of_tour = lpt.robot_of_job;
  plan.workloads = lpt.workloads;
  plan.runtime_seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - started)
                             .count();
  return plan;
}

}  // namespace linecover
