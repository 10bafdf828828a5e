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
#include <atomic>
#include <chrono>
#include <cmath>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "linecover/bgp.hpp"
#include "linecover/bup.hpp"
#include "linecover/config.hpp"
#include "linecover/error.hpp"
#include "linecover/graph.hpp"
#include "linecover/trob_router.hpp"

namespace linecover {

// Relative standard deviation in percent (population standard deviation).
inline double rsd(std::span<const double> values) {
  if (values.empty()) throw ValidationError("rsd: empty list");
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  if (!(mean > 0.0)) throw ValidationError("rsd: mean must be > 0");
  double sq = 0.0;
  for (double v : values) sq += (v - mean) * (v - mean);
  return 100.0 * std::sqrt(sq / n) / mean;
}

// Mean of w_i / max(w).
inline double utilization(std::span<const double> workloads) {
  if (workloads.empty()) throw ValidationError("utilization: empty list");
  const double top = *std::max_element(workloads.begin(), workloads.end());
  if (!(top > 0.0)) throw ValidationError("utilization: all workloads are zero");
  double sum = 0.0;
  for (double w : workloads) sum += w / top;
  return sum / static_cast<double>(workloads.size());
}

enum class Partitioner { kBgp, kKmedoids };

inline const char* to_string(Partitioner p) {
  return p == Partitioner::kBgp ? "bgp" : "kmedoids";
}

// Output of the whole pipeline on one network.
struct CoveragePlan {
  PlannerConfig cfg;
  Partitioner partitioner = Partitioner::kBgp;
  Coverer coverer = Coverer::kBup;
  Partition partition;
  TrobRoutes trob;
  std::vector<SubgraphPlan> subgraphs;  // indexed like partition clusters
};

inline Partition run_partitioner(const RoadGraph& g, const PlannerConfig& cfg,
                                 Partitioner which, DistanceCache& cache) {
  if (which == Partitioner::kBgp) return partition_graph(g, cfg, cache);
  const int k = cfg.k ? *cfg.k : compute_cluster_count(g.total_length(), cfg);
  return kmedoids_baseline(g, k, cfg, cache);
}

inline VertexIndex resolve_depot(const RoadGraph& g, const PlannerConfig& cfg) {
  if (cfg.depot) {
    auto v = g.find_vertex(*cfg.depot);
    if (!v) {
      throw ValidationError("depot vertex " + std::to_string(*cfg.depot) +
                            " not in graph");
    }
    return *v;
  }
  std::vector<VertexIndex> all(g.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  return medoid(g, all);
}

// Routes transport robots over the partition and plans every sub-graph.
// Team count is capped at the number of sub-graphs.
inline CoveragePlan plan_coverage(const RoadGraph& g, Partition partition,
                                  const PlannerConfig& cfg, Coverer coverer,
                                  DistanceCache& cache,
                                  std::optional<VertexIndex> depot = {}) {
  cfg.validate();
  ensure(static_cast<int>(partition.cluster_of_edge.size()) == g.edge_count(),
         "plan_coverage: partition does not match graph");
  CoveragePlan plan;
  plan.cfg = cfg;
  plan.coverer = coverer;
  const VertexIndex start = depot ? *depot : resolve_depot(g, cfg);
  const int teams = std::min(cfg.teams, partition.k);
  plan.trob = route_trobs(g, partition.centroids, teams, start,
                          ga_params_from(cfg), cfg.seed, cache);

  const auto groups = partition.cluster_edges();
  for (int i = 0; i < partition.k; ++i) {
    try {
      SubgraphPlan sp = cover_subgraph(g, groups[i], partition.centroids[i],
                                       cfg, coverer, cache);
      sp.subgraph = i;
      plan.subgraphs.push_back(std::move(sp));
    } catch (const InfeasibleError& ex) {
      throw InfeasibleError("sub-graph " + std::to_string(i) + ": " + ex.what());
    }
  }
  plan.partition = std::move(partition);
  return plan;
}

struct TimelineEvent {
  enum class Kind { kTransit, kCoverage } kind = Kind::kTransit;
  int subgraph = -1;  // destination for transit, covered sub-graph otherwise
  double start = 0.0;
  double end = 0.0;
  double distance = 0.0;  // transit meters, or the largest robot workload
};

struct SimulationResult {
  std::vector<double> team_seconds;
  double overall_seconds = 0.0;
  std::vector<std::vector<TimelineEvent>> timeline;
};

// Each team rides its transport route and waits at every sub-graph until
// its slowest coverage robot is done; teams run in parallel. Recharge and
// deployment take no time.
inline SimulationResult simulate(const CoveragePlan& plan,
                                 const PlannerConfig& cfg) {
  SimulationResult out;
  for (std::size_t t = 0; t < plan.trob.routes.size(); ++t) {
    double clock = 0.0;
    std::vector<TimelineEvent> events;
    const auto& route = plan.trob.routes[t];
    for (std::size_t i = 0; i < route.size(); ++i) {
      const int sub = route[i];
      if (sub < 0 || sub >= static_cast<int>(plan.subgraphs.size()) ||
          plan.subgraphs[sub].tours.empty()) {
        throw ValidationError("simulate: sub-graph " + std::to_string(sub) +
                              " has no tours");
      }
      const double leg = plan.trob.legs[t][i];
      TimelineEvent move{TimelineEvent::Kind::kTransit, sub, clock,
                         clock + leg / cfg.trob_speed, leg};
      clock = move.end;
      events.push_back(move);
      const auto& w = plan.subgraphs[sub].workloads;
      const double busiest = w.empty() ? 0.0 : *std::max_element(w.begin(), w.end());
      TimelineEvent work{TimelineEvent::Kind::kCoverage, sub, clock,
                         clock + busiest / cfg.crob_speed, busiest};
      clock = work.end;
      events.push_back(work);
    }
    out.team_seconds.push_back(clock);
    out.overall_seconds = std::max(out.overall_seconds, clock);
    out.timeline.push_back(std::move(events));
  }
  return out;
}

struct HomogeneousResult {
  SubgraphPlan plan;
  double seconds = 0.0;
};

// Single-depot comparison system: every coverage robot starts at `depot`
// (default: graph medoid), the whole network is split by the plain Ulusoy
// method and tours go to `robots` robots by LPT. Tours already include the
// walk to and from the depot.
inline HomogeneousResult simulate_homogeneous(
    const RoadGraph& g, const PlannerConfig& cfg, int robots,
    DistanceCache& cache, std::optional<VertexIndex> depot = {}) {
  PlannerConfig c = cfg;
  c.crobs = robots;
  const VertexIndex start = depot ? *depot : resolve_depot(g, cfg);
  std::vector<EdgeIndex> all(g.edge_count());
  std::iota(all.begin(), all.end(), 0);
  HomogeneousResult out;
  out.plan = cover_subgraph(g, all, start, c, Coverer::kUp, cache);
  out.plan.subgraph = 0;
  const double busiest =
      *std::max_element(out.plan.workloads.begin(), out.plan.workloads.end());
  out.seconds = busiest / cfg.crob_speed;
  return out;
}

// Summary metrics of one plan.
struct PlanMetrics {
  int subgraphs = 0;
  double partition_rsd = 0.0;        // % over sub-graph lengths
  double total_tour_length = 0.0;    // meters
  double mean_max_tour_length = 0.0; // meters, mean over sub-graphs
  double mean_tour_rsd = 0.0;        // %, mean over sub-graphs
  double mean_utilization = 0.0;     // mean over sub-graphs
  double max_tour_length = 0.0;
  int fallbacks = 0;
};

inline PlanMetrics plan_metrics(const CoveragePlan& plan) {
  PlanMetrics m;
  m.subgraphs = static_cast<int>(plan.subgraphs.size());
  m.partition_rsd = rsd(plan.partition.lengths);
  for (const auto& sp : plan.subgraphs) {
    const auto lengths = sp.tour_lengths();
    const double top = *std::max_element(lengths.begin(), lengths.end());
    m.total_tour_length += std::accumulate(lengths.begin(), lengths.end(), 0.0);
    m.mean_max_tour_length += top;
    m.max_tour_length = std::max(m.max_tour_length, top);
    m.mean_tour_rsd += rsd(lengths);
    m.mean_utilization += utilization(sp.workloads);
    m.fallbacks += sp.fallback ? 1 : 0;
  }
  const double n = std::max(1, m.subgraphs);
  m.mean_max_tour_length /= n;
  m.mean_tour_rsd /= n;
  m.mean_utilization /= n;
  return m;
}

struct PlannerSpec {
  Partitioner partitioner = Partitioner::kBgp;
  Coverer coverer = Coverer::kBup;

  std::string name() const {
    return std::string(to_string(partitioner)) + "+" + to_string(coverer);
  }
};

inline PlannerSpec parse_planner(const std::string& name) {
  const auto plus = name.find_first_of("+:");
  if (plus == std::string::npos) {
    throw ValidationError("unknown planner '" + name +
                          "' (expected partitioner+coverer, e.g. bgp+bup)");
  }
  const std::string part = name.substr(0, plus);
  const std::string cover = name.substr(plus + 1);
  PlannerSpec spec;
  if (part == "bgp") spec.partitioner = Partitioner::kBgp;
  else if (part == "kmedoids") spec.partitioner = Partitioner::kKmedoids;
  else throw ValidationError("unknown planner '" + name + "': partitioner '" + part + "'");
  if (cover == "bup") spec.coverer = Coverer::kBup;
  else if (cover == "up") spec.coverer = Coverer::kUp;
  else throw ValidationError("unknown planner '" + name + "': coverer '" + cover + "'");
  return spec;
}

struct SubgraphRow {
  int subgraph = 0;
  double length = 0.0;
  int tours = 0;
  double total_tour_length = 0.0;
  double max_tour_length = 0.0;
  double tour_rsd = 0.0;
  double utilization = 0.0;
  double runtime_seconds = 0.0;
};

// One cell of the comparison: a planner on a network.
struct ReportRow {
  std::string network;
  std::string planner;
  bool ok = false;
  std::string error;
  int subgraphs = 0;
  double runtime_seconds = 0.0;  // partition + coverage planning
  double partition_rsd = 0.0;
  double total_tour_length = 0.0;
  double mean_max_tour_length = 0.0;
  double mean_rsd = 0.0;
  double utilization = 0.0;
  std::vector<SubgraphRow> detail;
};

// Runs one planner on one network. Failures are captured in the row.
inline ReportRow evaluate_planner(const RoadGraph& g, const PlannerConfig& cfg,
                                  const PlannerSpec& spec,
                                  const std::string& network) {
  ReportRow row;
  row.network = network;
  row.planner = spec.name();
  try {
    DistanceCache cache(g);
    const auto started = std::chrono::steady_clock::now();
    Partition p = run_partitioner(g, cfg, spec.partitioner, cache);
    CoveragePlan plan = plan_coverage(g, std::move(p), cfg, spec.coverer, cache);
    plan.partitioner = spec.partitioner;
    row.runtime_seconds = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - started)
                              .count();
    const PlanMetrics m = plan_metrics(plan);
    row.subgraphs = m.subgraphs;
    row.partition_rsd = m.partition_rsd;
    row.total_tour_length = m.total_tour_length;
    row.mean_max_tour_length = m.mean_max_tour_length;
    row.mean_rsd = m.mean_tour_rsd;
    row.utilization = m.mean_utilization;
    for (const auto& sp : plan.subgraphs) {
      const auto lengths = sp.tour_lengths();
      SubgraphRow s;
      s.subgraph = sp.subgraph;
      s.length = plan.partition.lengths[sp.subgraph];
      s.tours = static_cast<int>(lengths.size());
      s.total_tour_length = std::accumulate(lengths.begin(), lengths.end(), 0.0);
      s.max_tour_length = *std::max_element(lengths.begin(), lengths.end());
      s.tour_rsd = rsd(lengths);
      s.utilization = utilization(sp.workloads);
      s.runtime_seconds = sp.runtime_seconds;
      row.detail.push_back(s);
    }
    row.ok = true;
  } catch (const std::exception& ex) {
    row.ok = false;
    row.error = ex.what();
  }
  return row;
}

struct NamedGraph {
  std::string name;
  const RoadGraph* graph = nullptr;
};

// Evaluates every planner on every network, fanning cells out to at most
// `threads` workers. Rows are ordered by network, then planner, regardless of
// completion order.
inline std::vector<ReportRow> compare_report(
    std::span<const NamedGraph> networks, const PlannerConfig& cfg,
    std::span<const PlannerSpec> planners, int threads = 1) {
  if (planners.empty()) throw ValidationError("compare: no planners given");
  const std::size_t cells = networks.size() * planners.size();
  std::vector<ReportRow> rows(cells);
  std::atomic<std::size_t> next{0};
  const auto work = [&]() {
    for (std::size_t i = next++; i < cells; i = next++) {
      const auto& net = networks[i / planners.size()];
      rows[i] = evaluate_planner(*net.graph, cfg, planners[i % planners.size()],
                                 net.name);
    }
  };
  const int workers =
      std::max(1, std::min<int>(threads, static_cast<int>(cells)));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return rows;
}

}  // namespace linecover
