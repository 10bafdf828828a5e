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
#include <cmath>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "linecover/config.hpp"
#include "linecover/error.hpp"
#include "linecover/graph.hpp"

namespace linecover {

// Lower bound for dynamic scale factors. Without it a heavily undersized
// cluster can be pushed to s <= 0, which turns the weighted distance into a
// reward for being far away.
inline constexpr double kScaleFloor = 0.05;

// Edge-to-cluster assignment. Clusters are 0-based here; serialized output
// keeps the array order.
struct Partition {
  int k = 0;
  std::vector<int> cluster_of_edge;
  std::vector<VertexIndex> centroids;
  std::vector<double> scale;
  std::vector<double> lengths;

  std::vector<std::vector<EdgeIndex>> cluster_edges() const {
    std::vector<std::vector<EdgeIndex>> out(k);
    for (std::size_t e = 0; e < cluster_of_edge.size(); ++e) {
      out[cluster_of_edge[e]].push_back(static_cast<EdgeIndex>(e));
    }
    return out;
  }
};

// Counters recorded while partitioning, for auditing loop bounds and
// best-tracking.
struct BgpTrace {
  int cluster_iterations = 0;
  int boundary_iterations = 0;
  int boundary_moves = 0;
  double clustering_best_ratio = kInfinity;
  double ratio_after_elimination = kInfinity;
  double final_ratio = kInfinity;
  std::vector<double> snapshot_ratios;  // every ratio considered for "best"
};

inline std::vector<double> cluster_lengths(const RoadGraph& g,
                                           std::span<const int> cluster_of_edge,
                                           int k) {
  std::vector<double> lengths(k, 0.0);
  for (std::size_t e = 0; e < cluster_of_edge.size(); ++e) {
    lengths[cluster_of_edge[e]] += g.edge(static_cast<EdgeIndex>(e)).length;
  }
  return lengths;
}

// max/min of cluster lengths; infinite when some cluster is empty.
inline double length_ratio(std::span<const double> lengths) {
  if (lengths.empty()) return kInfinity;
  const auto [lo, hi] = std::minmax_element(lengths.begin(), lengths.end());
  if (!(*lo > 0.0)) return kInfinity;
  return *hi / *lo;
}

inline int compute_cluster_count(double total_length,
                                 const PlannerConfig& cfg) {
  if (!(total_length > 0.0)) {
    throw ValidationError("compute_cluster_count: total length must be > 0");
  }
  cfg.validate();
  const double capacity = cfg.alpha * cfg.crobs * cfg.energy;
  const double k = std::ceil(total_length / capacity);
  return std::max(1, static_cast<int>(k));
}

// Farthest-point seeding: start at the smallest-id vertex, then repeatedly
// add the vertex whose nearest chosen centroid is farthest away.
inline std::vector<VertexIndex> init_centroids(const RoadGraph& g, int k,
                                               DistanceCache& cache) {
  if (k < 1 || k > g.vertex_count()) {
    throw ValidationError("init_centroids: k=" + std::to_string(k) +
                          " outside [1, vertex count=" +
                          std::to_string(g.vertex_count()) + "]");
  }
  std::vector<VertexIndex> centroids{0};
  std::vector<double> nearest = cache.from(0)->dist;
  while (static_cast<int>(centroids.size()) < k) {
    VertexIndex pick = kNoVertex;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      if (pick == kNoVertex || nearest[v] > nearest[pick]) pick = v;
    }
    centroids.push_back(pick);
    const auto& d = cache.from(pick)->dist;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      nearest[v] = std::min(nearest[v], d[v]);
    }
  }
  return centroids;
}

inline std::vector<VertexIndex> init_centroids(const RoadGraph& g, int k) {
  DistanceCache cache(g);
  return init_centroids(g, k, cache);
}

// Assigns every edge to argmin_i s_i * min(d(a, c_i), d(b, c_i)); ties go to
// the smaller cluster index.
inline std::vector<int> cluster_edges(const RoadGraph& g,
                                      std::span<const VertexIndex> centroids,
                                      std::span<const double> scale,
                                      DistanceCache& cache) {
  ensure(centroids.size() == scale.size(),
         "cluster_edges: centroid/scale size mismatch");
  std::vector<std::shared_ptr<const DistanceOracle>> oracles;
  oracles.reserve(centroids.size());
  for (VertexIndex c : centroids) oracles.push_back(cache.from(c));

  std::vector<int> assignment(g.edge_count(), 0);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    double best = kInfinity;
    int best_cluster = 0;
    for (std::size_t i = 0; i < centroids.size(); ++i) {
      const auto& d = oracles[i]->dist;
      const double w = scale[i] * std::min(d[edge.u], d[edge.v]);
      if (w < best) {
        best = w;
        best_cluster = static_cast<int>(i);
      }
    }
    assignment[e] = best_cluster;
  }
  return assignment;
}

inline std::vector<int> cluster_edges(const RoadGraph& g,
                                      std::span<const VertexIndex> centroids,
                                      std::span<const double> scale) {
  DistanceCache cache(g);
  return cluster_edges(g, centroids, scale, cache);
}

// s_i += eta1 * dev + eta2 * dev^3 with dev = (l_i - l_avg) / l_avg, floored
// at kScaleFloor.
inline std::vector<double> update_scale_factors(std::span<const double> lengths,
                                                std::span<const double> scale,
                                                const PlannerConfig& cfg) {
  ensure(lengths.size() == scale.size(),
         "update_scale_factors: size mismatch");
  double avg = 0.0;
  for (double l : lengths) avg += l;
  avg /= static_cast<double>(lengths.size());
  if (!(avg > 0.0)) {
    throw ValidationError("update_scale_factors: average length must be > 0");
  }
  std::vector<double> out(scale.begin(), scale.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double dev = (lengths[i] - avg) / avg;
    out[i] += cfg.eta1 * dev + cfg.eta2 * dev * dev * dev;
    out[i] = std::max(out[i], kScaleFloor);
  }
  return out;
}

namespace detail {

// Medoid of each cluster's endpoint set, memoized on the vertex set.
class MedoidMemo {
 public:
  explicit MedoidMemo(const RoadGraph& g) : g_(&g) {}

  VertexIndex of_edges(std::span<const EdgeIndex> edges) {
    auto vertices = edge_set_vertices(*g_, edges);
    auto it = memo_.find(vertices);
    if (it != memo_.end()) return it->second;
    const VertexIndex m = medoid(*g_, vertices);
    if (memo_.size() > 4096) memo_.clear();
    memo_.emplace(std::move(vertices), m);
    return m;
  }

  std::vector<VertexIndex> of_partition(std::span<const int> cluster_of_edge,
                                        int k,
                                        std::span<const VertexIndex> fallback) {
    std::vector<std::vector<EdgeIndex>> groups(k);
    for (std::size_t e = 0; e < cluster_of_edge.size(); ++e) {
      groups[cluster_of_edge[e]].push_back(static_cast<EdgeIndex>(e));
    }
    std::vector<VertexIndex> out(k);
    for (int i = 0; i < k; ++i) {
      out[i] = groups[i].empty() ? fallback[i] : of_edges(groups[i]);
    }
    return out;
  }

 private:
  const RoadGraph* g_;
  std::map<std::vector<VertexIndex>, VertexIndex> memo_;
};

// Vertex maximizing the distance to its nearest other centroid, used to
// re-seed the centroid of an emptied cluster.
inline VertexIndex farthest_from(const RoadGraph& g,
                                 std::span<const VertexIndex> centroids,
                                 int skip, DistanceCache& cache) {
  std::vector<double> nearest(g.vertex_count(), kInfinity);
  for (std::size_t i = 0; i < centroids.size(); ++i) {
    if (static_cast<int>(i) == skip) continue;
    const auto& d = cache.from(centroids[i])->dist;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      nearest[v] = std::min(nearest[v], d[v]);
    }
  }
  VertexIndex pick = 0;
  for (VertexIndex v = 1; v < g.vertex_count(); ++v) {
    if (nearest[v] > nearest[pick]) pick = v;
  }
  return pick;
}

// Number of edges of each cluster incident to each vertex.
class IncidenceCounts {
 public:
  IncidenceCounts(const RoadGraph& g, std::span<const int> cluster_of_edge)
      : counts_(g.vertex_count()) {
    for (std::size_t e = 0; e < cluster_of_edge.size(); ++e) {
      const Edge& edge = g.edge(static_cast<EdgeIndex>(e));
      add(edge.u, cluster_of_edge[e], 1);
      add(edge.v, cluster_of_edge[e], 1);
    }
  }

  int count(VertexIndex v, int cluster) const {
    for (const auto& [c, n] : counts_[v]) {
      if (c == cluster) return n;
    }
    return 0;
  }

  const std::vector<std::pair<int, int>>& at(VertexIndex v) const {
    return counts_[v];
  }

  void add(VertexIndex v, int cluster, int delta) {
    auto& list = counts_[v];
    for (auto it = list.begin(); it != list.end(); ++it) {
      if (it->first == cluster) {
        it->second += delta;
        if (it->second == 0) list.erase(it);
        return;
      }
    }
    ensure(delta > 0, "IncidenceCounts: negative count");
    list.emplace_back(cluster, delta);
  }

 private:
  std::vector<std::vector<std::pair<int, int>>> counts_;
};

// Whether `u` and `v` stay connected through edges of `cluster` other than
// `removed`.
inline bool connected_without(const RoadGraph& g,
                              std::span<const int> cluster_of_edge,
                              int cluster, EdgeIndex removed, VertexIndex u,
                              VertexIndex v, std::vector<int>& mark,
                              int& stamp) {
  ++stamp;
  std::vector<VertexIndex> stack{u};
  mark[u] = stamp;
  while (!stack.empty()) {
    const VertexIndex x = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.incident(x)) {
      if (inc.edge == removed || cluster_of_edge[inc.edge] != cluster) {
        continue;
      }
      if (mark[inc.other] == stamp) continue;
      if (inc.other == v) return true;
      mark[inc.other] = stamp;
      stack.push_back(inc.other);
    }
  }
  return false;
}

inline Partition make_partition(const RoadGraph& g, std::vector<int> assignment,
                                int k, std::vector<VertexIndex> centroids,
                                std::vector<double> scale) {
  Partition p;
  p.k = k;
  p.lengths = cluster_lengths(g, assignment, k);
  p.cluster_of_edge = std::move(assignment);
  p.centroids = std::move(centroids);
  p.scale = std::move(scale);
  return p;
}

}  // namespace detail

// Moves every non-largest connected component of a cluster into an adjacent
// cluster. Largest components stay put as cluster cores; stray components
// are attached in rounds to the smallest core they touch (ties by index),
// so components only reachable through other strays are attached once
// those have been placed.
inline Partition eliminate_disconnected(const RoadGraph& g,
                                        const Partition& input) {
  ensure(static_cast<int>(input.cluster_of_edge.size()) == g.edge_count(),
         "eliminate_disconnected: partition does not cover the graph");
  Partition p = input;
  const int k = p.k;
  constexpr int kStray = -1;
  std::vector<int> owner = p.cluster_of_edge;
  std::vector<std::vector<EdgeIndex>> strays;

  const auto groups = p.cluster_edges();
  for (int i = 0; i < k; ++i) {
    if (groups[i].empty()) continue;
    auto comps = connected_edge_components(g, groups[i]);
    for (std::size_t c = 1; c < comps.size(); ++c) {
      for (EdgeIndex e : comps[c]) owner[e] = kStray;
      strays.push_back(std::move(comps[c]));
    }
  }
  if (strays.empty()) return p;

  std::vector<double> lengths(k, 0.0);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (owner[e] != kStray) lengths[owner[e]] += g.edge(e).length;
  }

  std::vector<char> placed(strays.size(), 0);
  std::size_t remaining = strays.size();
  while (remaining > 0) {
    bool progress = false;
    for (std::size_t s = 0; s < strays.size(); ++s) {
      if (placed[s]) continue;
      int target = -1;
      for (EdgeIndex e : strays[s]) {
        for (VertexIndex end : {g.edge(e).u, g.edge(e).v}) {
          for (const Incidence& inc : g.incident(end)) {
            const int c = owner[inc.edge];
            if (c == kStray) continue;
            if (target == -1 || lengths[c] < lengths[target] ||
                (lengths[c] == lengths[target] && c < target)) {
              target = c;
            }
          }
        }
      }
      if (target == -1) continue;
      for (EdgeIndex e : strays[s]) {
        owner[e] = target;
        lengths[target] += g.edge(e).length;
      }
      placed[s] = 1;
      --remaining;
      progress = true;
    }
    ensure(progress,
           "eliminate_disconnected: component with no adjacent cluster");
  }

  p.cluster_of_edge = std::move(owner);
  p.lengths = cluster_lengths(g, p.cluster_of_edge, k);
  return p;
}

// Greedy boundary fine-tuning. Each pass scans the boundary edges (edges of
// cluster i sharing a vertex with another cluster) longest first, ties by
// index, and moves an edge to its smallest adjacent cluster j when
// l_j + |e| < l_i and cluster i stays connected and nonempty. Runs at most
// tau2 passes or until the max/min ratio is within epsilon, and returns the
// best-ratio partition seen.
inline Partition reassign_boundary_edges(const RoadGraph& g,
                                         const Partition& input,
                                         const PlannerConfig& cfg,
                                         BgpTrace* trace = nullptr) {
  Partition current = input;
  current.lengths = cluster_lengths(g, current.cluster_of_edge, current.k);
  Partition best = current;
  double best_ratio = length_ratio(current.lengths);
  double ratio = best_ratio;
  if (trace) trace->snapshot_ratios.push_back(ratio);

  detail::IncidenceCounts counts(g, current.cluster_of_edge);
  std::vector<int> mark(g.vertex_count(), 0);
  int stamp = 0;
  std::vector<int> edge_count(current.k, 0);
  for (int c : current.cluster_of_edge) ++edge_count[c];

  int loop = 0;
  while (loop < cfg.tau2 && ratio > cfg.epsilon) {
    std::vector<EdgeIndex> boundary;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      const Edge& edge = g.edge(e);
      if (counts.at(edge.u).size() > 1 || counts.at(edge.v).size() > 1) {
        boundary.push_back(e);
      }
    }
    std::sort(boundary.begin(), boundary.end(),
              [&](EdgeIndex a, EdgeIndex b) {
                const double la = g.edge(a).length;
                const double lb = g.edge(b).length;
                return la != lb ? la > lb : a < b;
              });

    int moves = 0;
    for (EdgeIndex e : boundary) {
      const Edge& edge = g.edge(e);
      const int from = current.cluster_of_edge[e];
      int to = -1;
      for (VertexIndex end : {edge.u, edge.v}) {
        for (const auto& [c, n] : counts.at(end)) {
          if (c == from) continue;
          if (to == -1 || current.lengths[c] < current.lengths[to] ||
              (current.lengths[c] == current.lengths[to] && c < to)) {
            to = c;
          }
        }
      }
      if (to == -1) continue;
      if (!(current.lengths[to] + edge.length < current.lengths[from])) {
        continue;
      }
      if (edge_count[from] <= 1) continue;
      const bool pendant =
          counts.count(edge.u, from) == 1 || counts.count(edge.v, from) == 1;
      if (!pendant &&
          !detail::connected_without(g, current.cluster_of_edge, from, e,
                                     edge.u, edge.v, mark, stamp)) {
        continue;
      }
      current.cluster_of_edge[e] = to;
      current.lengths[from] -= edge.length;
      current.lengths[to] += edge.length;
      --edge_count[from];
      ++edge_count[to];
      counts.add(edge.u, from, -1);
      counts.add(edge.v, from, -1);
      counts.add(edge.u, to, 1);
      counts.add(edge.v, to, 1);
      ++moves;
    }

    // Re-sum to keep incremental round-off out of the ratio.
    current.lengths = cluster_lengths(g, current.cluster_of_edge, current.k);
    ratio = length_ratio(current.lengths);
    if (trace) {
      trace->snapshot_ratios.push_back(ratio);
      trace->boundary_moves += moves;
    }
    if (ratio < best_ratio) {
      best_ratio = ratio;
      best = current;
    }
    ++loop;
    if (moves == 0) break;
  }
  if (trace) trace->boundary_iterations = loop;
  return best;
}

// Recomputes centroids as cluster medoids.
inline void recompute_centroids(const RoadGraph& g, Partition& p) {
  detail::MedoidMemo memo(g);
  p.centroids = memo.of_partition(p.cluster_of_edge, p.k, p.centroids);
}

namespace detail {

inline int checked_cluster_count(const RoadGraph& g, int k) {
  if (k > g.vertex_count() || k > g.edge_count()) {
    throw ValidationError("cluster count k=" + std::to_string(k) +
                          " exceeds the graph size (" +
                          std::to_string(g.vertex_count()) + " vertices, " +
                          std::to_string(g.edge_count()) + " edges)");
  }
  return k;
}

}  // namespace detail

// Balanced graph partitioning: scale-factored k-medoids, then disconnected
// sub-graph elimination, then boundary edge re-assignment.
inline Partition partition_graph(const RoadGraph& g, const PlannerConfig& cfg,
                                 DistanceCache& cache,
                                 BgpTrace* trace = nullptr) {
  cfg.validate();
  const int k = detail::checked_cluster_count(
      g, cfg.k ? *cfg.k : compute_cluster_count(g.total_length(), cfg));

  std::vector<VertexIndex> centroids = init_centroids(g, k, cache);
  std::vector<double> scale(k, 1.0);
  detail::MedoidMemo memo(g);

  double best_ratio = kInfinity;
  double ratio = kInfinity;
  std::vector<int> best_assignment;
  std::vector<VertexIndex> best_centroids;
  std::vector<double> best_scale;
  std::vector<int> assignment;

  int loop = 0;
  while (loop < cfg.tau1 && ratio > cfg.epsilon) {
    assignment = cluster_edges(g, centroids, scale, cache);
    const auto lengths = cluster_lengths(g, assignment, k);
    ratio = length_ratio(lengths);
    if (trace) trace->snapshot_ratios.push_back(ratio);
    if (ratio < best_ratio) {
      best_ratio = ratio;
      best_assignment = assignment;
      best_centroids = centroids;
      best_scale = scale;
      centroids = memo.of_partition(assignment, k, centroids);
    }
    for (int i = 0; i < k; ++i) {
      if (lengths[i] == 0.0) {
        centroids[i] = detail::farthest_from(g, centroids, i, cache);
      }
    }
    scale = update_scale_factors(lengths, scale, cfg);
    ++loop;
  }
  if (trace) {
    trace->cluster_iterations = loop;
    trace->clustering_best_ratio = best_ratio;
  }
  if (best_assignment.empty()) {
    throw InternalError(
        "partition_graph: clustering never produced k nonempty clusters");
  }

  Partition p = detail::make_partition(g, std::move(best_assignment), k,
                                       std::move(best_centroids),
                                       std::move(best_scale));
  p = eliminate_disconnected(g, p);
  if (trace) trace->ratio_after_elimination = length_ratio(p.lengths);
  p = reassign_boundary_edges(g, p, cfg, trace);
  p.centroids = memo.of_partition(p.cluster_of_edge, k, p.centroids);
  if (trace) trace->final_ratio = length_ratio(p.lengths);
  return p;
}

inline Partition partition_graph(const RoadGraph& g, const PlannerConfig& cfg,
                                 BgpTrace* trace = nullptr) {
  DistanceCache cache(g);
  return partition_graph(g, cfg, cache, trace);
}

// Plain k-medoids baseline: same farthest-point seeding, unit scale factors,
// medoid update every iteration until the centroids stop moving (or tau1
// iterations), then disconnected elimination so that the result can still
// be planned on. No boundary re-assignment.
inline Partition kmedoids_baseline(const RoadGraph& g, int k,
                                   const PlannerConfig& cfg,
                                   DistanceCache& cache) {
  detail::checked_cluster_count(g, k);
  std::vector<VertexIndex> centroids = init_centroids(g, k, cache);
  const std::vector<double> unit(k, 1.0);
  detail::MedoidMemo memo(g);
  std::vector<int> assignment;
  for (int loop = 0; loop < std::max(1, cfg.tau1); ++loop) {
    assignment = cluster_edges(g, centroids, unit, cache);
    const auto lengths = cluster_lengths(g, assignment, k);
    auto next = memo.of_partition(assignment, k, centroids);
    for (int i = 0; i < k; ++i) {
      if (lengths[i] == 0.0) {
        next[i] = detail::farthest_from(g, next, i, cache);
      }
    }
    if (next == centroids) break;
    centroids = std::move(next);
  }
  Partition p =
      detail::make_partition(g, std::move(assignment), k, centroids, unit);
  for (double l : p.lengths) {
    if (l == 0.0) {
      throw InternalError("kmedoids_baseline: produced an empty cluster");
    }
  }
  p = eliminate_disconnected(g, p);
  p.centroids = memo.of_partition(p.cluster_of_edge, k, p.centroids);
  return p;
}

inline Partition kmedoids_baseline(const RoadGraph& g, int k,
                                   const PlannerConfig& cfg) {
  DistanceCache cache(g);
  return kmedoids_baseline(g, k, cfg, cache);
}

}  // namespace linecover
