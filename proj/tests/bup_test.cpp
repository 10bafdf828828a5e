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

#include <gtest/gtest.h>

#include "support.hpp"

namespace {

using namespace lctest;

std::vector<EdgeIndex> all_edges(const RoadGraph& g) {
  std::vector<EdgeIndex> out(g.edge_count());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

void audit_circuit(const RoadGraph& g, const EulerMultigraph& m, const EulerCircuit& c) {
  ASSERT_EQ(c.positions(), static_cast<int>(m.edges.size()));
  std::map<std::pair<EdgeIndex, int>, int> want, got;
  for (const MultiEdge& me : m.edges) ++want[{me.edge, static_cast<int>(me.kind)}];
  VertexIndex at = m.depot;
  for (std::size_t j = 0; j < c.traversals.size(); ++j) {
    const Traversal& t = c.traversals[j];
    ASSERT_EQ(t.from, at);
    const Edge& e = g.edge(t.edge);
    ASSERT_TRUE((e.u == t.from && e.v == t.to) || (e.v == t.from && e.u == t.to));
    ++got[{t.edge, static_cast<int>(t.kind)}];
    at = t.to;
    EXPECT_NEAR(c.prefix[j + 1] - c.prefix[j], e.length, 1e-9);
  }
  EXPECT_EQ(at, m.depot);
  EXPECT_EQ(got, want);
}

TEST(Eulerize, CycleNeedsNoDeadheads) {
  const RoadGraph g = make_graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
  const auto m = eulerize(g, all_edges(g), 0);
  EXPECT_EQ(m.edges.size(), 4u);
  EXPECT_EQ(m.matching_weight, 0.0);
}

TEST(Eulerize, SingleEdgeUsesShortestPathInFullGraph) {
  const RoadGraph g = make_graph(3, {{0, 1, 5}, {0, 2, 1}, {2, 1, 1}});
  const std::vector<EdgeIndex> req{0};
  const auto m = eulerize(g, req, 0);
  EXPECT_DOUBLE_EQ(m.matching_weight, 2.0);
  ASSERT_EQ(m.edges.size(), 3u);
  EXPECT_EQ(m.edges[1].kind, TraversalKind::kDeadhead);
  EXPECT_EQ(m.edges[2].kind, TraversalKind::kDeadhead);
  audit_circuit(g, m, euler_circuit(g, m));
}

TEST(Eulerize, Validation) {
  const RoadGraph g = make_graph(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}});
  EXPECT_THROW(eulerize(g, std::vector<EdgeIndex>{0, 3}, 0), std::exception);
  EXPECT_THROW(eulerize(g, std::vector<EdgeIndex>{2}, 0), ValidationError);
  EXPECT_THROW(eulerize(g, std::vector<EdgeIndex>{}, 0), ValidationError);
}

TEST(Eulerize, MatchingEqualsBruteForcePairing) {
  std::mt19937_64 rng(101);
  int checked = 0;
  while (checked < 60) {
    const RoadGraph g = random_graph(25, 15, rng);
    const auto req = grow_subset(g, 12, rng);
    std::vector<int> degree(g.vertex_count(), 0);
    for (EdgeIndex e : req) ++degree[g.edge(e).u], ++degree[g.edge(e).v];
    std::vector<VertexIndex> odd;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
      if (degree[v] % 2) odd.push_back(v);
    if (odd.size() > 10) continue;
    const auto fw = floyd_warshall(g);
    std::vector<std::vector<double>> cost(odd.size(), std::vector<double>(odd.size()));
    for (std::size_t i = 0; i < odd.size(); ++i)
      for (std::size_t j = 0; j < odd.size(); ++j) cost[i][j] = fw[odd[i]][odd[j]];
    const auto m = eulerize(g, req, g.edge(req.front()).u);
    EXPECT_LE(relative_gap(m.matching_weight, brute_matching(cost)), 1e-9);
    audit_circuit(g, m, euler_circuit(g, m));
    ++checked;
  }
}

TEST(Eulerize, HeuristicMatchingIsPerfectAboveLimit) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> w(1.0, 50.0);
  const int p = 16;
  std::vector<std::vector<double>> cost(p, std::vector<double>(p, 0.0));
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) cost[i][j] = cost[j][i] = w(rng);
  const Matching m = perfect_matching(cost);
  std::vector<int> seen;
  for (auto [a, b] : m.pairs) seen.push_back(a), seen.push_back(b);
  std::sort(seen.begin(), seen.end());
  std::vector<int> all(p);
  std::iota(all.begin(), all.end(), 0);
  EXPECT_EQ(seen, all);
}

TEST(EulerCircuit, TriangleAndFigureEight) {
  const RoadGraph tri = make_graph(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
  const auto c = euler_circuit(tri, eulerize(tri, all_edges(tri), 0));
  EXPECT_EQ(c.positions(), 3);
  EXPECT_EQ(c.vertex_at(0), 0);
  EXPECT_EQ(c.vertex_at(3), 0);

  const RoadGraph eight = make_graph(
      5, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}, {0, 3, 1}, {3, 4, 1}, {4, 0, 1}});
  const auto m = eulerize(eight, all_edges(eight), 0);
  const auto c8 = euler_circuit(eight, m);
  EXPECT_EQ(c8.positions(), 6);
  audit_circuit(eight, m, c8);
}

TEST(EulerCircuit, RandomSixtyEdgeTraversalCounts) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const RoadGraph g = random_graph(30, 31, rng);
    ASSERT_EQ(g.edge_count(), 60);
    const auto m = eulerize(g, all_edges(g), 0);
    audit_circuit(g, m, euler_circuit(g, m));
  }
}

TEST(TourGraph, WholeCircuitArc) {
  const RoadGraph g = make_graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
  const auto c = euler_circuit(g, eulerize(g, all_edges(g), 0));
  const auto d = build_tour_graph(c, g, shortest_from(g, 0), 4.0);
  bool found = false;
  for (const Arc& a : d.arcs())
    if (a.tail == 0 && a.head == 4) {
      found = true;
      EXPECT_DOUBLE_EQ(a.length, 4.0);
    }
  EXPECT_TRUE(found);
}

TEST(TourGraph, EnergyInfeasible) {
  const RoadGraph g = make_graph(3, {{0, 1, 10}, {1, 2, 10}});
  const auto c = euler_circuit(g, eulerize(g, all_edges(g), 0));
  try {
    build_tour_graph(c, g, shortest_from(g, 0), 15.0);
    FAIL() << "expected infeasibility";
  } catch (const InfeasibleError& ex) {
    EXPECT_NE(std::string(ex.what()).find("edge"), std::string::npos);
  }
}

TEST(TourGraph, MatchesQuadraticRecomputation) {
  std::mt19937_64 rng(71);
  int checked = 0;
  while (checked < 20) {
    const RoadGraph g = random_graph(14, 4, rng);
    const auto req = grow_subset(g, 9, rng);
    const VertexIndex depot = g.edge(req.front()).u;
    const auto m = eulerize(g, req, depot);
    const auto c = euler_circuit(g, m);
    if (c.positions() < 12) continue;
    const auto fw = floyd_warshall(g);
    const double q = 0.5 * c.prefix.back() + 10.0;
    std::vector<std::tuple<int, int, double>> want;
    for (int a = 0; a < c.positions(); ++a)
      for (int b = a + 1; b <= c.positions(); ++b) {
        const double len = fw[depot][c.vertex_at(a)] + c.prefix[b] - c.prefix[a] +
                           fw[c.vertex_at(b)][depot];
        if (len <= q) want.emplace_back(a, b, len);
      }
    TourGraph d;
    try {
      d = build_tour_graph(c, g, shortest_from(g, depot), q);
    } catch (const InfeasibleError&) {
      continue;
    }
    auto got = d.arcs();
    std::sort(got.begin(), got.end(), [](const Arc& x, const Arc& y) {
      return std::tie(x.tail, x.head) < std::tie(y.tail, y.head);
    });
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      EXPECT_EQ(got[i].tail, std::get<0>(want[i]));
      EXPECT_EQ(got[i].head, std::get<1>(want[i]));
      EXPECT_NEAR(got[i].length, std::get<2>(want[i]), 1e-9);
      EXPECT_LE(got[i].length, q);
    }
    ++checked;
  }
}

TourGraph chain(int r) {
  std::vector<Arc> arcs;
  for (int a = 0; a < r; ++a) arcs.push_back({a, a + 1, 1.0});
  return TourGraph(r, arcs);
}

TEST(TourCount, CeilingArithmetic) {
  EXPECT_EQ(compute_tour_count(chain(7), 5).min_arcs, 7);
  EXPECT_EQ(compute_tour_count(chain(7), 5).t, 10);
  EXPECT_EQ(compute_tour_count(chain(5), 5).t, 5);
}

TEST(TourCount, MatchesBreadthFirstHops) {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 50; ++trial) {
    const int r = 5 + static_cast<int>(rng() % 20);
    const TourGraph d = random_tour_graph(r, 0.2, rng);
    std::vector<int> hops(r + 1, -1);
    std::vector<int> queue{0};
    hops[0] = 0;
    const auto arcs = d.arcs();
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const Arc& a : arcs)
        if (a.tail == queue[i] && hops[a.head] < 0)
          hops[a.head] = hops[queue[i]] + 1, queue.push_back(a.head);
    EXPECT_EQ(compute_tour_count(d, 3).min_arcs, hops[r]);
  }
}

TEST(DpExactArcs, HandExample) {
  const TourGraph d(2, {{0, 1, 5}, {1, 2, 5}, {0, 2, 9}});
  const auto two = dp_exact_arcs(d, 2);
  ASSERT_TRUE(two);
  EXPECT_DOUBLE_EQ(two->length, 10.0);
  ASSERT_EQ(two->arcs.size(), 2u);
  EXPECT_EQ(two->arcs[0].head, 1);
  const auto one = dp_exact_arcs(d, 1);
  ASSERT_TRUE(one);
  EXPECT_DOUBLE_EQ(one->length, 9.0);
  EXPECT_FALSE(dp_exact_arcs(d, 3));
}

TEST(DpExactArcs, ForcedSingleArc) {
  const TourGraph d(3, {{0, 3, 4}});
  const auto p = dp_exact_arcs(d, 1);
  ASSERT_TRUE(p);
  EXPECT_DOUBLE_EQ(p->length, 4.0);
}

TEST(DpExactArcs, MatchesEnumerationIncludingWindows) {
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 100; ++trial) {
    const int r = 2 + static_cast<int>(rng() % 11);
    const TourGraph d = random_tour_graph(r, 0.4, rng);
    const auto arcs = d.arcs();
    for (int t = 1; t <= r; ++t) {
      const double want = brute_exact_path(arcs, r, t);
      const auto got = dp_exact_arcs(d, t);
      ASSERT_EQ(got.has_value(), want < kInfinity);
      if (got) {
        EXPECT_LE(relative_gap(got->length, want), 1e-9);
        EXPECT_EQ(static_cast<int>(got->arcs.size()), t);
      }
      // Windowed: restrict to arcs in [5, 15].
      std::vector<Arc> kept;
      for (const Arc& a : arcs)
        if (a.length >= 5.0 && a.length <= 15.0) kept.push_back(a);
      const double want_w = brute_exact_path(kept, r, t);
      const auto got_w = dp_exact_arcs(d, t, 5.0, 15.0);
      ASSERT_EQ(got_w.has_value(), want_w < kInfinity);
      if (got_w) {
        EXPECT_LE(relative_gap(got_w->length, want_w), 1e-9);
      }
    }
  }
}

TEST(UpBaseline, EqualsMinimumOverArcCounts) {
  std::mt19937_64 rng(93);
  for (int trial = 0; trial < 50; ++trial) {
    const int r = 2 + static_cast<int>(rng() % 11);
    const TourGraph d = random_tour_graph(r, 0.4, rng);
    double best = kInfinity;
    for (int t = 1; t <= r; ++t)
      if (auto p = dp_exact_arcs(d, t)) best = std::min(best, p->length);
    EXPECT_LE(relative_gap(up_arc_path(d).length, best), 1e-9);
    const BupOutcome b = balanced_arc_path(d, 2, 0.98, 20.0);
    EXPECT_LE(up_arc_path(d).length, b.path.length + 1e-9);
  }
}

TEST(Balanced, UniquePathSurvives) {
  const TourGraph d = chain(4);
  const BupOutcome o = balanced_arc_path(d, 2, 0.98, 10.0);
  EXPECT_EQ(o.t, 4);
  EXPECT_FALSE(o.fallback);
  EXPECT_EQ(o.iterations, 1);
  EXPECT_DOUBLE_EQ(o.path.length, 4.0);
}

TEST(Balanced, FallbackWhenNoMultipleFits) {
  const BupOutcome o = balanced_arc_path(chain(7), 5, 0.98, 10.0);
  EXPECT_TRUE(o.fallback);
  EXPECT_EQ(o.t, 7);
  EXPECT_EQ(o.path.arcs.size(), 7u);
}

TEST(Balanced, FourEdgeCycleShrinksWindow) {
  const RoadGraph g = make_graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
  const auto c = euler_circuit(g, eulerize(g, all_edges(g), 0));
  const auto oracle = shortest_from(g, 0);
  const TourGraph d = build_tour_graph(c, g, oracle, 100.0);
  const BupOutcome o = balanced_arc_path(d, 1, 0.98, 100.0);
  EXPECT_EQ(o.count.min_arcs, 1);
  // First solve with t = 1 takes the whole cycle; nothing shorter with one
  // arc exists, so the final max tour cannot exceed it.
  double top = 0.0;
  for (const Arc& a : o.path.arcs) top = std::max(top, a.length);
  EXPECT_LE(top, 4.0);
  for (std::size_t i = 1; i < o.windows.size(); ++i) {
    EXPECT_LT(o.windows[i].second, o.windows[i - 1].second);
    EXPECT_GE(o.windows[i].first, o.windows[i - 1].first);
  }
}

TEST(Balanced, WindowMonotonicityOnRandomDags) {
  std::mt19937_64 rng(95);
  for (int trial = 0; trial < 100; ++trial) {
    const TourGraph d = random_tour_graph(12 + static_cast<int>(rng() % 20), 0.5, rng);
    const BupOutcome o = balanced_arc_path(d, 3, 0.98, 20.0);
    if (!o.fallback) {
      EXPECT_EQ(o.t % 3, 0);
    }
    EXPECT_EQ(static_cast<int>(o.path.arcs.size()), o.t);
    for (std::size_t i = 1; i < o.windows.size(); ++i) {
      EXPECT_LT(o.windows[i].second, o.windows[i - 1].second);
      EXPECT_GE(o.windows[i].first, o.windows[i - 1].first);
    }
    for (const Arc& a : o.path.arcs) {
      EXPECT_GE(a.length, o.windows.back().first);
      EXPECT_LE(a.length, o.windows.back().second);
    }
  }
}

TEST(Lpt, HandExamples) {
  const auto uniform = assign_lpt(std::vector<double>{5, 5, 5, 5, 5}, 5);
  EXPECT_EQ(uniform.workloads, (std::vector<double>{5, 5, 5, 5, 5}));
  const auto two = assign_lpt(std::vector<double>{8, 7, 6, 5, 4}, 2);
  EXPECT_EQ(two.workloads, (std::vector<double>{17, 13}));
  EXPECT_EQ(two.robot_of_job, (std::vector<int>{0, 1, 1, 0, 0}));
  EXPECT_THROW(assign_lpt(std::vector<double>{1}, 0), ValidationError);
}

TEST(Lpt, GrahamBoundAgainstBruteForce) {
  std::mt19937_64 rng(97);
  std::uniform_real_distribution<double> len(1.0, 25.0);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 1 + trial % 3;
    std::vector<double> jobs(1 + rng() % 8);
    for (double& j : jobs) j = len(rng);
    const auto lpt = assign_lpt(jobs, m);
    const double span = *std::max_element(lpt.workloads.begin(), lpt.workloads.end());
    EXPECT_LE(span, (4.0 / 3.0 - 1.0 / (3.0 * m)) * brute_makespan(jobs, m) + 1e-9);
  }
}

void audit_plan(const RoadGraph& g, const std::vector<EdgeIndex>& req,
                const SubgraphPlan& sp, const PlannerConfig& cfg) {
  std::vector<int> covered(g.edge_count(), 0);
  for (const Tour& t : sp.tours) {
    EXPECT_LE(t.length, cfg.energy * (1 + 1e-12));
    VertexIndex at = sp.depot;
    double walked = 0.0;
    for (const Traversal& tr : t.walk) {
      ASSERT_EQ(tr.from, at);
      at = tr.to;
      walked += g.edge(tr.edge).length;
      if (tr.kind == TraversalKind::kRequired) ++covered[tr.edge];
    }
    EXPECT_EQ(at, sp.depot);
    EXPECT_NEAR(walked, t.length, 1e-6);
  }
  for (EdgeIndex e : req) EXPECT_EQ(covered[e], 1);
  EXPECT_EQ(std::accumulate(covered.begin(), covered.end(), 0), static_cast<int>(req.size()));
  if (sp.coverer == Coverer::kBup && !sp.fallback) {
    EXPECT_EQ(static_cast<int>(sp.tours.size()) % cfg.crobs, 0);
  }
  double workload = 0.0;
  for (double w : sp.workloads) workload += w;
  double lengths = 0.0;
  for (const Tour& t : sp.tours) lengths += t.length;
  EXPECT_NEAR(workload, lengths, 1e-6);
}

TEST(CoverSubgraph, InvariantsOnSyntheticNetworks) {
  PlannerConfig cfg;
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const RoadGraph g = generate_synthetic_network({12, 12, 0.3, 0.2, seed, 100.0});
    DistanceCache cache(g);
    const auto req = all_edges(g);
    const VertexIndex depot = medoid(g, edge_set_vertices(g, req));
    for (Coverer c : {Coverer::kBup, Coverer::kUp}) {
      audit_plan(g, req, cover_subgraph(g, req, depot, cfg, c, cache), cfg);
    }
  }
}

TEST(CoverSubgraph, TinyCycleOneRobotOneTour) {
  const RoadGraph g = make_graph(4, {{0, 1, 100}, {1, 2, 100}, {2, 3, 100}, {3, 0, 100}});
  DistanceCache cache(g);
  PlannerConfig cfg;
  cfg.crobs = 1;
  const auto sp = cover_subgraph(g, all_edges(g), 0, cfg, Coverer::kBup, cache);
  ASSERT_EQ(sp.tours.size(), 1u);
  EXPECT_DOUBLE_EQ(sp.tours[0].length, 400.0);
  EXPECT_EQ(sp.tours[0].walk.size(), 4u);
}

TEST(CoverSubgraph, Deterministic) {
  const RoadGraph g = generate_synthetic_network({10, 10, 0.3, 0.2, 3, 100.0});
  PlannerConfig cfg;
  DistanceCache c1(g), c2(g);
  const auto a = cover_subgraph(g, all_edges(g), 0, cfg, Coverer::kBup, c1);
  const auto b = cover_subgraph(g, all_edges(g), 0, cfg, Coverer::kBup, c2);
  ASSERT_EQ(a.tours.size(), b.tours.size());
  for (std::size_t i = 0; i < a.tours.size(); ++i) {
    EXPECT_EQ(a.tours[i].length, b.tours[i].length);
    EXPECT_EQ(a.tours[i].covered, b.tours[i].covered);
  }
  EXPECT_EQ(a.robot_of_tour, b.robot_of_tour);
}

}  // namespace
