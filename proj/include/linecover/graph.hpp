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
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "linecover/error.hpp"

namespace linecover {

using VertexId = std::int64_t;
using EdgeId = std::int64_t;

// Dense indices into RoadGraph storage. Vertices and edges are stored sorted
// by their external id, so index order equals id order and every "smallest
// id" tie-break can be done on indices.
using VertexIndex = int;
using EdgeIndex = int;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
inline constexpr VertexIndex kNoVertex = -1;
inline constexpr EdgeIndex kNoEdge = -1;

struct Vertex {
  VertexId id = 0;
  double x = 0.0;  // planar meters
  double y = 0.0;
};

struct Edge {
  EdgeId id = 0;
  VertexIndex u = kNoVertex;
  VertexIndex v = kNoVertex;
  double length = 0.0;  // meters

  VertexIndex other(VertexIndex w) const { return w == u ? v : u; }
};

// Input record for an edge; a missing length means "Euclidean".
struct EdgeSpec {
  EdgeId id = 0;
  VertexId u = 0;
  VertexId v = 0;
  std::optional<double> length;
};

struct Incidence {
  EdgeIndex edge;
  VertexIndex other;
};

// Undirected, connected road network with positive edge lengths. Parallel
// edges are kept, self-loops are rejected.
class RoadGraph {
 public:
  RoadGraph() = default;

  RoadGraph(std::vector<Vertex> vertices, std::vector<EdgeSpec> edges) {
    std::sort(vertices.begin(), vertices.end(),
              [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < vertices.size(); ++i) {
      if (vertices[i].id == vertices[i - 1].id) {
        throw ValidationError("duplicate vertex id " +
                              std::to_string(vertices[i].id));
      }
    }
    vertices_ = std::move(vertices);
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      index_of_vertex_.emplace(vertices_[i].id, static_cast<VertexIndex>(i));
    }

    std::sort(edges.begin(), edges.end(),
              [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
    edges_.reserve(edges.size());
    for (const EdgeSpec& spec : edges) {
      const std::string where = "edge " + std::to_string(spec.id) + " (" +
                                std::to_string(spec.u) + " " +
                                std::to_string(spec.v) + ")";
      if (!edges_.empty() && edges_.back().id == spec.id) {
        throw ValidationError("duplicate edge id in " + where);
      }
      auto iu = index_of_vertex_.find(spec.u);
      auto iv = index_of_vertex_.find(spec.v);
      if (iu == index_of_vertex_.end() || iv == index_of_vertex_.end()) {
        const VertexId missing =
            iu == index_of_vertex_.end() ? spec.u : spec.v;
        throw ValidationError("dangling endpoint: " + where +
                              " references unknown vertex " +
                              std::to_string(missing));
      }
      if (iu->second == iv->second) {
        throw ValidationError("self-loop rejected: " + where);
      }
      Edge e;
      e.id = spec.id;
      e.u = iu->second;
      e.v = iv->second;
      if (spec.length) {
        e.length = *spec.length;
      } else {
        const Vertex& a = vertices_[e.u];
        const Vertex& b = vertices_[e.v];
        e.length = std::hypot(a.x - b.x, a.y - b.y);
      }
      if (!(e.length > 0.0) || !std::isfinite(e.length)) {
        throw ValidationError("non-positive edge length in " + where);
      }
      index_of_edge_.emplace(e.id, static_cast<EdgeIndex>(edges_.size()));
      edges_.push_back(e);
    }

    if (edges_.empty()) throw ValidationError("graph has no edges");

    incidence_.assign(vertices_.size(), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      incidence_[e.u].push_back({static_cast<EdgeIndex>(i), e.v});
      incidence_[e.v].push_back({static_cast<EdgeIndex>(i), e.u});
    }
    for (auto& list : incidence_) {
      std::sort(list.begin(), list.end(),
                [](const Incidence& a, const Incidence& b) {
                  return a.edge < b.edge;
                });
    }
    check_connected();
  }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Vertex& vertex(VertexIndex v) const { return vertices_[v]; }
  const Edge& edge(EdgeIndex e) const { return edges_[e]; }

  std::span<const Incidence> incident(VertexIndex v) const {
    return incidence_[v];
  }

  std::optional<VertexIndex> find_vertex(VertexId id) const {
    auto it = index_of_vertex_.find(id);
    if (it == index_of_vertex_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<EdgeIndex> find_edge(EdgeId id) const {
    auto it = index_of_edge_.find(id);
    if (it == index_of_edge_.end()) return std::nullopt;
    return it->second;
  }

  // Counts parallel edges once per edge.
  double total_length() const {
    double sum = 0.0;
    for (const Edge& e : edges_) sum += e.length;
    return sum;
  }

 private:
  void check_connected() const {
    std::vector<char> seen(vertices_.size(), 0);
    std::vector<VertexIndex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const VertexIndex v = stack.back();
      stack.pop_back();
      for (const Incidence& inc : incidence_[v]) {
        if (!seen[inc.other]) {
          seen[inc.other] = 1;
          ++reached;
          stack.push_back(inc.other);
        }
      }
    }
    if (reached != vertices_.size()) {
      for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!seen[i]) {
          throw ValidationError(
              "disconnected graph: vertex " + std::to_string(vertices_[i].id) +
              " is not reachable from vertex " +
              std::to_string(vertices_[0].id));
        }
      }
    }
  }

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> incidence_;
  std::unordered_map<VertexId, VertexIndex> index_of_vertex_;
  std::unordered_map<EdgeId, EdgeIndex> index_of_edge_;
};

// Single-source shortest paths over edge lengths.
struct DistanceOracle {
  VertexIndex source = kNoVertex;
  std::vector<double> dist;
  std::vector<VertexIndex> pred;
  std::vector<EdgeIndex> pred_edge;

  double distance(VertexIndex v) const { return dist[v]; }

  // Edges of the shortest path source -> target, in walking order.
  std::vector<EdgeIndex> path_edges(VertexIndex target) const {
    std::vector<EdgeIndex> path;
    for (VertexIndex v = target; v != source; v = pred[v]) {
      ensure(pred[v] != kNoVertex, "path_edges: target unreachable");
      path.push_back(pred_edge[v]);
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  // Vertices of the shortest path source -> target, inclusive.
  std::vector<VertexIndex> path_vertices(VertexIndex target) const {
    std::vector<VertexIndex> path{target};
    for (VertexIndex v = target; v != source; v = pred[v]) {
      ensure(pred[v] != kNoVertex, "path_vertices: target unreachable");
      path.push_back(pred[v]);
    }
    std::reverse(path.begin(), path.end());
    return path;
  }
};

namespace detail {

struct QueueEntry {
  double dist;
  VertexIndex vertex;
  bool operator>(const QueueEntry& o) const {
    return dist > o.dist || (dist == o.dist && vertex > o.vertex);
  }
};

using MinQueue = std::priority_queue<QueueEntry, std::vector<QueueEntry>,
                                     std::greater<QueueEntry>>;

}  // namespace detail

// Dijkstra. Among equal-length predecessors the smaller vertex index wins,
// then the shorter (then smaller) parallel edge.
inline DistanceOracle shortest_from(const RoadGraph& g, VertexIndex source) {
  if (source < 0 || source >= g.vertex_count()) {
    throw ValidationError("shortest_from: unknown source vertex index " +
                          std::to_string(source));
  }
  const int n = g.vertex_count();
  DistanceOracle out;
  out.source = source;
  out.dist.assign(n, kInfinity);
  out.pred.assign(n, kNoVertex);
  out.pred_edge.assign(n, kNoEdge);
  std::vector<char> done(n, 0);
  detail::MinQueue queue;
  out.dist[source] = 0.0;
  queue.push({0.0, source});
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (done[u]) continue;
    done[u] = 1;
    for (const Incidence& inc : g.incident(u)) {
      const VertexIndex w = inc.other;
      if (done[w]) continue;
      const double len = g.edge(inc.edge).length;
      const double nd = d + len;
      if (nd < out.dist[w]) {
        out.dist[w] = nd;
        out.pred[w] = u;
        out.pred_edge[w] = inc.edge;
        queue.push({nd, w});
      } else if (nd == out.dist[w]) {
        const EdgeIndex cur = out.pred_edge[w];
        const bool better =
            u < out.pred[w] ||
            (u == out.pred[w] &&
             (len < g.edge(cur).length ||
              (len == g.edge(cur).length && inc.edge < cur)));
        if (better) {
          out.pred[w] = u;
          out.pred_edge[w] = inc.edge;
        }
      }
    }
  }
  return out;
}

// Memoizes DistanceOracles per source. Safe for concurrent use; entries are
// immutable once inserted. The whole cache is dropped when it grows past
// `capacity` sources.
class DistanceCache {
 public:
  explicit DistanceCache(const RoadGraph& g, std::size_t capacity = 512)
      : graph_(&g), capacity_(capacity) {}

  const RoadGraph& graph() const { return *graph_; }

  std::shared_ptr<const DistanceOracle> from(VertexIndex source) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = entries_.find(source);
      if (it != entries_.end()) return it->second;
    }
    auto oracle =
        std::make_shared<const DistanceOracle>(shortest_from(*graph_, source));
    std::lock_guard<std::mutex> lock(mutex_);
    if (entries_.size() >= capacity_) entries_.clear();
    return entries_.emplace(source, std::move(oracle)).first->second;
  }

  double distance(VertexIndex a, VertexIndex b) { return from(a)->dist[b]; }

 private:
  const RoadGraph* graph_;
  std::size_t capacity_;
  std::mutex mutex_;
  std::unordered_map<VertexIndex, std::shared_ptr<const DistanceOracle>>
      entries_;
};

inline double edge_set_length(const RoadGraph& g,
                              std::span<const EdgeIndex> edges) {
  double sum = 0.0;
  for (EdgeIndex e : edges) sum += g.edge(e).length;
  return sum;
}

// Splits an edge subset into maximal vertex-connected components. Components
// come out by descending total length, ties by smallest edge index; each
// component lists its edges in ascending order.
inline std::vector<std::vector<EdgeIndex>> connected_edge_components(
    const RoadGraph& g, std::span<const EdgeIndex> subset) {
  std::unordered_map<EdgeIndex, int> label;
  label.reserve(subset.size() * 2);
  for (EdgeIndex e : subset) {
    if (e < 0 || e >= g.edge_count()) {
      throw ValidationError("connected_edge_components: edge index " +
                            std::to_string(e) + " not in graph");
    }
    label.emplace(e, -1);
  }

  std::vector<std::vector<EdgeIndex>> components;
  std::vector<EdgeIndex> stack;
  std::vector<EdgeIndex> ordered(subset.begin(), subset.end());
  std::sort(ordered.begin(), ordered.end());
  ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());
  for (EdgeIndex seed : ordered) {
    if (label[seed] != -1) continue;
    const int id = static_cast<int>(components.size());
    components.emplace_back();
    label[seed] = id;
    stack.push_back(seed);
    while (!stack.empty()) {
      const EdgeIndex e = stack.back();
      stack.pop_back();
      components[id].push_back(e);
      for (VertexIndex end : {g.edge(e).u, g.edge(e).v}) {
        for (const Incidence& inc : g.incident(end)) {
          auto it = label.find(inc.edge);
          if (it != label.end() && it->second == -1) {
            it->second = id;
            stack.push_back(inc.edge);
          }
        }
      }
    }
    std::sort(components[id].begin(), components[id].end());
  }

  std::vector<double> lengths;
  lengths.reserve(components.size());
  for (const auto& c : components) lengths.push_back(edge_set_length(g, c));
  std::vector<std::size_t> order(components.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (lengths[a] != lengths[b]) return lengths[a] > lengths[b];
    return components[a].front() < components[b].front();
  });
  std::vector<std::vector<EdgeIndex>> sorted;
  sorted.reserve(components.size());
  for (std::size_t i : order) sorted.push_back(std::move(components[i]));
  return sorted;
}

// Endpoints of an edge set, ascending and unique.
inline std::vector<VertexIndex> edge_set_vertices(
    const RoadGraph& g, std::span<const EdgeIndex> edges) {
  std::vector<VertexIndex> out;
  out.reserve(edges.size() * 2);
  for (EdgeIndex e : edges) {
    out.push_back(g.edge(e).u);
    out.push_back(g.edge(e).v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

// Relative tolerance for comparing sums of shortest-path distances that are
// mathematically equal but accumulated in different orders.
inline constexpr double kSumTolerance = 1e-9;

inline bool clearly_greater(double a, double b) {
  return a > b + kSumTolerance * std::max(1.0, std::abs(b));
}

// Sum of distances from `source` to all flagged targets. Gives up and
// returns nullopt once the sum provably exceeds `cutoff`.
inline std::optional<double> sum_to_targets(const RoadGraph& g,
                                            VertexIndex source,
                                            const std::vector<char>& is_target,
                                            std::size_t target_count,
                                            double cutoff,
                                            std::vector<double>& dist,
                                            std::vector<VertexIndex>& touched,
                                            std::vector<double>* settled) {
  for (VertexIndex v : touched) dist[v] = kInfinity;
  touched.clear();
  MinQueue queue;
  dist[source] = 0.0;
  touched.push_back(source);
  queue.push({0.0, source});
  double sum = 0.0;
  std::size_t remaining = target_count;
  while (!queue.empty() && remaining > 0) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (d > dist[u]) continue;
    if (is_target[u]) {
      sum += d;
      --remaining;
      if (settled) (*settled)[u] = d;
      if (clearly_greater(sum + static_cast<double>(remaining) * d, cutoff)) {
        return std::nullopt;
      }
    }
    for (const Incidence& inc : g.incident(u)) {
      const double nd = d + g.edge(inc.edge).length;
      if (nd < dist[inc.other]) {
        if (dist[inc.other] == kInfinity) touched.push_back(inc.other);
        dist[inc.other] = nd;
        queue.push({nd, inc.other});
      }
    }
  }
  ensure(remaining == 0, "medoid: subset not connected in graph");
  return sum;
}

}  // namespace detail

// Vertex of `subset` with the smallest sum of shortest-path distances (in g)
// to the other subset vertices; ties by smallest index.
//
// Candidates are visited in order of a triangle-inequality lower bound,
// sum_w |d(r,w) - d(r,u)| maximized over already evaluated reference vertices
// r, and the search stops once the next bound exceeds the best exact sum.
inline VertexIndex medoid(const RoadGraph& g,
                          std::span<const VertexIndex> subset) {
  if (subset.empty()) throw ValidationError("medoid: empty vertex subset");
  std::vector<VertexIndex> members(subset.begin(), subset.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (VertexIndex v : members) {
    if (v < 0 || v >= g.vertex_count()) {
      throw ValidationError("medoid: vertex index " + std::to_string(v) +
                            " not in graph");
    }
  }
  const std::size_t n = members.size();
  if (n == 1) return members.front();

  std::vector<char> is_target(g.vertex_count(), 0);
  for (VertexIndex v : members) is_target[v] = 1;

  std::vector<double> scratch(g.vertex_count(), kInfinity);
  std::vector<VertexIndex> touched;
  std::vector<double> settled(g.vertex_count(), 0.0);
  std::vector<double> lower(n, 0.0);
  std::vector<char> evaluated(n, 0);

  // Start from the member closest to the coordinate mean; it is usually near
  // the medoid, which makes the first bound tight.
  double mx = 0.0;
  double my = 0.0;
  for (VertexIndex v : members) {
    mx += g.vertex(v).x;
    my += g.vertex(v).y;
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  std::size_t start = 0;
  double start_d = kInfinity;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = std::hypot(g.vertex(members[i]).x - mx,
                                g.vertex(members[i]).y - my);
    if (d < start_d) {
      start_d = d;
      start = i;
    }
  }

  double best_sum = kInfinity;
  VertexIndex best = kNoVertex;
  std::vector<double> ref(n);
  std::vector<double> sorted_ref(n);
  std::vector<double> prefix(n + 1);

  auto add_reference = [&]() {
    // ref[i] holds distances from the reference to member i.
    sorted_ref = ref;
    std::sort(sorted_ref.begin(), sorted_ref.end());
    prefix[0] = 0.0;
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + sorted_ref[i];
    for (std::size_t i = 0; i < n; ++i) {
      if (evaluated[i]) continue;
      const double x = ref[i];
      const std::size_t below = static_cast<std::size_t>(
          std::lower_bound(sorted_ref.begin(), sorted_ref.end(), x) -
          sorted_ref.begin());
      const double bound = (static_cast<double>(below) * x - prefix[below]) +
                           (prefix[n] - prefix[below] -
                            static_cast<double>(n - below) * x);
      lower[i] = std::max(lower[i], bound);
    }
  };

  std::size_t next = start;
  while (true) {
    evaluated[next] = 1;
    const VertexIndex cand = members[next];
    const bool full_needed = best == kNoVertex;
    auto sum = detail::sum_to_targets(
        g, cand, is_target, n, full_needed ? kInfinity : best_sum, scratch,
        touched, &settled);
    if (sum) {
      if (best == kNoVertex || detail::clearly_greater(best_sum, *sum)) {
        best = cand;
        best_sum = *sum;
      } else if (!detail::clearly_greater(*sum, best_sum) && cand < best) {
        best = cand;
        best_sum = std::min(best_sum, *sum);
      }
      for (std::size_t i = 0; i < n; ++i) ref[i] = settled[members[i]];
      add_reference();
    }

    // Next candidate: smallest lower bound, then smallest index.
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (evaluated[i]) continue;
      if (pick == n || lower[i] < lower[pick]) pick = i;
    }
    if (pick == n) break;
    if (detail::clearly_greater(lower[pick], best_sum)) break;
    next = pick;
  }
  return best;
}

}  // namespace linecover
