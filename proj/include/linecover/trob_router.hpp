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
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "linecover/config.hpp"
#include "linecover/error.hpp"
#include "linecover/graph.hpp"

namespace linecover {

struct GaParams {
  int population = 100;
  int generations = 500;
  int elitism = 2;
  double mutation_rate = 0.05;
  TrobObjective objective = TrobObjective::kTotalLength;
};

inline GaParams ga_params_from(const PlannerConfig& cfg) {
  GaParams p;
  p.population = cfg.ga_population;
  p.generations = cfg.ga_generations;
  p.objective = cfg.trob_objective;
  return p;
}

// Open transport-robot routes from the depot through the sub-graph
// centroids. Clusters are referred to by their index in the centroid list.
struct TrobRoutes {
  int teams = 0;
  VertexIndex depot = kNoVertex;
  std::vector<std::vector<int>> routes;
  std::vector<std::vector<double>> legs;  // legs[t][i] ends at routes[t][i]
  std::vector<double> route_lengths;
  double fitness = 0.0;
};

struct GaTrace {
  std::vector<double> best_per_generation;
  std::vector<double> final_population_fitness;
};

namespace detail {

struct Chromosome {
  std::vector<int> order;   // permutation of stop indices 0..n-1
  std::vector<int> breaks;  // teams-1 ascending cut positions in [1, n-1]
  double fitness = 0.0;
};

inline std::vector<int> sample_breaks(int n, int teams, std::mt19937_64& rng) {
  std::vector<int> cuts(n - 1);
  std::iota(cuts.begin(), cuts.end(), 1);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(teams - 1);
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

// Stop sequence of each team decoded from a chromosome.
inline std::vector<std::vector<int>> decode(const Chromosome& c) {
  std::vector<std::vector<int>> routes;
  int begin = 0;
  for (std::size_t t = 0; t <= c.breaks.size(); ++t) {
    const int end = t < c.breaks.size() ? c.breaks[t]
                                        : static_cast<int>(c.order.size());
    routes.emplace_back(c.order.begin() + begin, c.order.begin() + end);
    begin = end;
  }
  return routes;
}

// `dist` is (n+1)x(n+1) with row/column 0 the depot and i+1 stop i.
inline double route_length(const std::vector<std::vector<double>>& dist,
                           std::span<const int> route) {
  double len = 0.0;
  int at = 0;
  for (int stop : route) {
    len += dist[at][stop + 1];
    at = stop + 1;
  }
  return len;
}

inline double evaluate(const std::vector<std::vector<double>>& dist,
                       const Chromosome& c, TrobObjective objective) {
  double total = 0.0;
  double longest = 0.0;
  for (const auto& r : decode(c)) {
    const double len = route_length(dist, r);
    total += len;
    longest = std::max(longest, len);
  }
  return objective == TrobObjective::kTotalLength ? total : longest;
}

// Order crossover: keep a slice of `a`, fill the rest in `b`'s order.
inline std::vector<int> order_crossover(const std::vector<int>& a,
                                        const std::vector<int>& b,
                                        std::mt19937_64& rng) {
  const int n = static_cast<int>(a.size());
  std::uniform_int_distribution<int> pos(0, n - 1);
  int lo = pos(rng);
  int hi = pos(rng);
  if (lo > hi) std::swap(lo, hi);
  std::vector<int> child(n, -1);
  std::vector<char> used(n, 0);
  for (int i = lo; i <= hi; ++i) {
    child[i] = a[i];
    used[a[i]] = 1;
  }
  int fill = (hi + 1) % n;
  for (int k = 0; k < n; ++k) {
    const int gene = b[(hi + 1 + k) % n];
    if (used[gene]) continue;
    child[fill] = gene;
    used[gene] = 1;
    fill = (fill + 1) % n;
  }
  return child;
}

}  // namespace detail

// Multiple-TSP genetic algorithm over a precomputed distance matrix
// (index 0 = depot). Two-part chromosome: a stop permutation plus team
// break points. Tournament selection, order crossover, swap mutation,
// break-point re-sampling, and elitism.
inline TrobRoutes route_trobs_matrix(
    const std::vector<std::vector<double>>& dist, int teams,
    const GaParams& params, std::uint64_t seed, GaTrace* trace = nullptr) {
  const int n = static_cast<int>(dist.size()) - 1;
  if (n < 1) throw ValidationError("route_trobs: no centroids to visit");
  if (teams < 1) throw ValidationError("route_trobs: teams must be >= 1");
  if (teams > n) {
    throw ValidationError("route_trobs: teams (" + std::to_string(teams) +
                          ") exceed the number of centroids (" +
                          std::to_string(n) + ")");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> any_pos(0, n - 1);

  const int pop_size = std::max(2, params.population);
  const int elite = std::clamp(params.elitism, 0, pop_size);
  const auto by_fitness = [](const detail::Chromosome& a,
                             const detail::Chromosome& b) {
    if (a.fitness != b.fitness) return a.fitness < b.fitness;
    if (a.order != b.order) return a.order < b.order;
    return a.breaks < b.breaks;
  };

  std::vector<detail::Chromosome> population(pop_size);
  for (auto& c : population) {
    c.order.resize(n);
    std::iota(c.order.begin(), c.order.end(), 0);
    std::shuffle(c.order.begin(), c.order.end(), rng);
    c.breaks = detail::sample_breaks(n, teams, rng);
    c.fitness = detail::evaluate(dist, c, params.objective);
  }
  std::sort(population.begin(), population.end(), by_fitness);

  std::uniform_int_distribution<int> pick(0, pop_size - 1);
  const auto tournament = [&]() -> const detail::Chromosome& {
    const auto& a = population[pick(rng)];
    const auto& b = population[pick(rng)];
    return by_fitness(a, b) ? a : b;
  };

  for (int gen = 0; gen < params.generations; ++gen) {
    std::vector<detail::Chromosome> next(population.begin(),
                                         population.begin() + elite);
    while (static_cast<int>(next.size()) < pop_size) {
      const auto& a = tournament();
      const auto& b = tournament();
      detail::Chromosome child;
      child.order = n > 1 ? detail::order_crossover(a.order, b.order, rng)
                          : a.order;
      child.breaks = coin(rng) < 0.5 ? a.breaks : b.breaks;
      for (int i = 0; i < n; ++i) {
        if (n > 1 && coin(rng) < params.mutation_rate) {
          std::swap(child.order[i], child.order[any_pos(rng)]);
        }
      }
      if (teams > 1 && coin(rng) < params.mutation_rate) {
        child.breaks = detail::sample_breaks(n, teams, rng);
      }
      child.fitness = detail::evaluate(dist, child, params.objective);
      next.push_back(std::move(child));
    }
    population = std::move(next);
    std::sort(population.begin(), population.end(), by_fitness);
    if (trace) trace->best_per_generation.push_back(population.front().fitness);
  }
  if (trace) {
    for (const auto& c : population) {
      trace->final_population_fitness.push_back(c.fitness);
    }
  }

  const detail::Chromosome& best = population.front();
  TrobRoutes out;
  out.teams = teams;
  out.routes = detail::decode(best);
  out.fitness = best.fitness;
  for (const auto& r : out.routes) {
    std::vector<double> legs;
    int at = 0;
    for (int stop : r) {
      legs.push_back(dist[at][stop + 1]);
      at = stop + 1;
    }
    out.route_lengths.push_back(std::accumulate(legs.begin(), legs.end(), 0.0));
    out.legs.push_back(std::move(legs));
  }
  return out;
}

// Routes `teams` transport robots from `depot` over the centroids, with legs
// measured by shortest-path distance in g.
inline TrobRoutes route_trobs(const RoadGraph& g,
                              std::span<const VertexIndex> centroids,
                              int teams, VertexIndex depot,
                              const GaParams& params, std::uint64_t seed,
                              DistanceCache& cache,
                              GaTrace* trace = nullptr) {
  if (depot < 0 || depot >= g.vertex_count()) {
    throw ValidationError("route_trobs: depot not in graph");
  }
  if (centroids.empty()) {
    throw ValidationError("route_trobs: no centroids to visit");
  }
  std::vector<VertexIndex> stops{depot};
  stops.insert(stops.end(), centroids.begin(), centroids.end());
  std::vector<std::vector<double>> dist(stops.size(),
                                        std::vector<double>(stops.size()));
  for (std::size_t i = 0; i < stops.size(); ++i) {
    const auto oracle = cache.from(stops[i]);
    for (std::size_t j = 0; j < stops.size(); ++j) {
      dist[i][j] = oracle->dist[stops[j]];
    }
  }
  TrobRoutes out = route_trobs_matrix(dist, teams, params, seed, trace);
  out.depot = depot;
  return out;
}

}  // namespace linecover
