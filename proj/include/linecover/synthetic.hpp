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

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "linecover/error.hpp"
#include "linecover/graph.hpp"

namespace linecover {

struct SyntheticSpec {
  int rows = 2;
  int cols = 2;
  double jitter = 0.0;  // fraction of spacing; vertices move by at most half
  double drop = 0.0;    // probability of removing each grid edge
  std::uint64_t seed = 0;
  double spacing = 100.0;  // meters between grid neighbours
};

// Grid-like planar road network. Vertex (r, c) has id r * cols + c and sits
// near (c * spacing, r * spacing). Each grid edge is dropped with the given
// probability; dropped edges that are needed for connectivity are restored.
// Edge lengths are the Euclidean distances of the perturbed endpoints.
inline RoadGraph generate_synthetic_network(const SyntheticSpec& spec) {
  if (spec.rows < 2 || spec.cols < 2) {
    throw ValidationError("synthetic network needs rows >= 2 and cols >= 2");
  }
  if (!(spec.jitter >= 0.0 && spec.jitter < 1.0)) {
    throw ValidationError("synthetic jitter must lie in [0, 1)");
  }
  if (!(spec.drop >= 0.0 && spec.drop <= 1.0)) {
    throw ValidationError("synthetic drop probability must lie in [0, 1]");
  }
  if (!(spec.spacing > 0.0)) {
    throw ValidationError("synthetic spacing must be positive");
  }

  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> offset(-0.5, 0.5);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  const int n = spec.rows * spec.cols;
  std::vector<Vertex> vertices(n);
  for (int r = 0; r < spec.rows; ++r) {
    for (int c = 0; c < spec.cols; ++c) {
      Vertex& v = vertices[r * spec.cols + c];
      v.id = r * spec.cols + c;
      const double dx = spec.jitter * offset(rng);
      const double dy = spec.jitter * offset(rng);
      v.x = (c + dx) * spec.spacing;
      v.y = (r + dy) * spec.spacing;
    }
  }

  struct GridEdge {
    int a;
    int b;
    bool kept;
  };
  std::vector<GridEdge> grid;
  for (int r = 0; r < spec.rows; ++r) {
    for (int c = 0; c + 1 < spec.cols; ++c) {
      grid.push_back({r * spec.cols + c, r * spec.cols + c + 1, true});
    }
  }
  for (int r = 0; r + 1 < spec.rows; ++r) {
    for (int c = 0; c < spec.cols; ++c) {
      grid.push_back({r * spec.cols + c, (r + 1) * spec.cols + c, true});
    }
  }
  for (GridEdge& e : grid) e.kept = coin(rng) >= spec.drop;

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const GridEdge& e : grid) {
    if (e.kept) parent[find(e.a)] = find(e.b);
  }
  for (GridEdge& e : grid) {
    if (!e.kept && find(e.a) != find(e.b)) {
      e.kept = true;
      parent[find(e.a)] = find(e.b);
    }
  }

  std::vector<EdgeSpec> edges;
  for (const GridEdge& e : grid) {
    if (!e.kept) continue;
    const Vertex& a = vertices[e.a];
    const Vertex& b = vertices[e.b];
    edges.push_back({static_cast<EdgeId>(edges.size()), a.id, b.id,
                     std::hypot(a.x - b.x, a.y - b.y)});
  }
  return RoadGraph(std::move(vertices), std::move(edges));
}

inline RoadGraph generate_synthetic_network(int rows, int cols, double jitter,
                                            double drop, std::uint64_t seed) {
  return generate_synthetic_network(
      SyntheticSpec{rows, cols, jitter, drop, seed, 100.0});
}

}  // namespace linecover
