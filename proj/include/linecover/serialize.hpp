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
#include <sstream>
#include <string>
#include <vector>

#include "linecover/bgp.hpp"
#include "linecover/bup.hpp"
#include "linecover/config.hpp"
#include "linecover/evalsim.hpp"
#include "linecover/graph.hpp"
#include "linecover/json_format.hpp"

namespace linecover {

// {k, clusters: [{centroid, scale, edges: [ids], length}]} with vertex and
// edge ids from the input graph.
inline Json partition_to_json(const RoadGraph& g, const Partition& p) {
  Json j;
  j["k"] = p.k;
  Json clusters = Json::array();
  const auto groups = p.cluster_edges();
  for (int i = 0; i < p.k; ++i) {
    Json c;
    c["index"] = i;
    c["centroid"] = g.vertex(p.centroids[i]).id;
    c["scale"] = p.scale.empty() ? 1.0 : p.scale[i];
    Json edges = Json::array();
    for (EdgeIndex e : groups[i]) edges.push_back(g.edge(e).id);
    c["edges"] = std::move(edges);
    c["length"] = p.lengths[i];
    clusters.push_back(std::move(c));
  }
  j["clusters"] = std::move(clusters);
  return j;
}

inline Partition partition_from_json(const RoadGraph& g, const Json& j) {
  try {
    Partition p;
    p.k = j.at("k").get<int>();
    const auto& clusters = j.at("clusters");
    if (p.k < 1 || static_cast<int>(clusters.size()) != p.k) {
      throw ValidationError("partition: k does not match the cluster list");
    }
    p.cluster_of_edge.assign(g.edge_count(), -1);
    for (int i = 0; i < p.k; ++i) {
      const auto& c = clusters[i];
      const auto centroid = g.find_vertex(c.at("centroid").get<VertexId>());
      if (!centroid) {
        throw ValidationError("partition: cluster " + std::to_string(i) +
                              " centroid not in graph");
      }
      p.centroids.push_back(*centroid);
      p.scale.push_back(c.contains("scale") ? c.at("scale").get<double>() : 1.0);
      for (const auto& id : c.at("edges")) {
        const auto e = g.find_edge(id.get<EdgeId>());
        if (!e) {
          throw ValidationError("partition: edge " + id.dump() + " not in graph");
        }
        if (p.cluster_of_edge[*e] != -1) {
          throw ValidationError("partition: edge " + id.dump() +
                                " assigned twice");
        }
        p.cluster_of_edge[*e] = i;
      }
    }
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      if (p.cluster_of_edge[e] == -1) {
        throw ValidationError("partition: edge " +
                              std::to_string(g.edge(e).id) + " unassigned");
      }
    }
    const auto groups = p.cluster_edges();
    for (int i = 0; i < p.k; ++i) {
      if (groups[i].empty()) {
        throw ValidationError("partition: cluster " + std::to_string(i) + " is empty");
      }
      if (connected_edge_components(g, groups[i]).size() != 1) {
        throw ValidationError("partition: cluster " + std::to_string(i) +
                              " is not connected");
      }
      const auto vs = edge_set_vertices(g, groups[i]);
      if (!std::binary_search(vs.begin(), vs.end(), p.centroids[i])) {
        throw ValidationError("partition: cluster " + std::to_string(i) +
                              " centroid is not on its edges");
      }
    }
    p.lengths = cluster_lengths(g, p.cluster_of_edge, p.k);
    return p;
  } catch (const Json::exception& ex) {
    throw ValidationError(std::string("partition: ") + ex.what());
  }
}

inline Json tours_to_json(const RoadGraph& g, const SubgraphPlan& sp) {
  Json j;
  j["subgraph"] = sp.subgraph;
  j["depot"] = g.vertex(sp.depot).id;
  j["coverer"] = to_string(sp.coverer);
  j["circuit_positions"] = sp.circuit_positions;
  j["arcs"] = sp.arc_count;
  j["min_tours"] = sp.min_tours;
  j["t"] = sp.tours_planned;
  j["fallback"] = sp.fallback;
  j["iterations"] = sp.iterations;
  j["matching_weight"] = sp.matching_weight;
  j["workloads"] = sp.workloads;
  Json tours = Json::array();
  for (std::size_t i = 0; i < sp.tours.size(); ++i) {
    const Tour& t = sp.tours[i];
    Json tj;
    tj["robot"] = sp.robot_of_tour.empty() ? 0 : sp.robot_of_tour[i];
    tj["length"] = t.length;
    tj["positions"] = Json::array({t.first_position, t.last_position});
    Json legs = Json::array();
    for (const Traversal& tr : t.walk) {
      Json leg;
      leg["edge"] = g.edge(tr.edge).id;
      leg["dir"] = tr.from == g.edge(tr.edge).u ? "fwd" : "rev";
      leg["kind"] = to_string(tr.kind);
      legs.push_back(std::move(leg));
    }
    tj["legs"] = std::move(legs);
    tours.push_back(std::move(tj));
  }
  j["tours"] = std::move(tours);
  return j;
}

inline Json trob_to_json(const RoadGraph& g, const TrobRoutes& r) {
  Json j;
  j["teams"] = r.teams;
  j["depot"] = r.depot == kNoVertex ? Json(nullptr) : Json(g.vertex(r.depot).id);
  j["fitness"] = r.fitness;
  Json routes = Json::array();
  for (std::size_t t = 0; t < r.routes.size(); ++t) {
    Json rj;
    rj["team"] = t;
    rj["subgraphs"] = r.routes[t];
    rj["legs"] = r.legs[t];
    rj["length"] = r.route_lengths[t];
    routes.push_back(std::move(rj));
  }
  j["routes"] = std::move(routes);
  return j;
}

inline Json metrics_to_json(const PlanMetrics& m) {
  Json j;
  j["subgraphs"] = m.subgraphs;
  j["partition_rsd"] = m.partition_rsd;
  j["total_tour_length"] = m.total_tour_length;
  j["mean_max_tour_length"] = m.mean_max_tour_length;
  j["mean_tour_rsd"] = m.mean_tour_rsd;
  j["mean_utilization"] = m.mean_utilization;
  j["max_tour_length"] = m.max_tour_length;
  j["fallbacks"] = m.fallbacks;
  return j;
}

inline Json plan_to_json(const RoadGraph& g, const CoveragePlan& plan) {
  Json j;
  j["planner"] = std::string(to_string(plan.partitioner)) + "+" +
                 to_string(plan.coverer);
  j["config"] = to_json(plan.cfg);
  j["partition"] = partition_to_json(g, plan.partition);
  j["trob_routes"] = trob_to_json(g, plan.trob);
  Json subs = Json::array();
  for (const auto& sp : plan.subgraphs) subs.push_back(tours_to_json(g, sp));
  j["subgraphs"] = std::move(subs);
  j["metrics"] = metrics_to_json(plan_metrics(plan));
  return j;
}

// Reads the parts of a plan document the simulator needs: transport routes
// with leg distances, and per-sub-graph workloads and tour lengths.
inline CoveragePlan plan_for_simulation(const Json& j) {
  try {
    CoveragePlan plan;
    if (j.contains("config")) plan.cfg = config_from_json(j.at("config"));
    const auto& tr = j.at("trob_routes");
    plan.trob.teams = tr.at("teams").get<int>();
    for (const auto& r : tr.at("routes")) {
      plan.trob.routes.push_back(r.at("subgraphs").get<std::vector<int>>());
      plan.trob.legs.push_back(r.at("legs").get<std::vector<double>>());
      plan.trob.route_lengths.push_back(r.at("length").get<double>());
      if (plan.trob.routes.back().size() != plan.trob.legs.back().size()) {
        throw ValidationError("plan: route and leg lists differ in length");
      }
    }
    for (const auto& s : j.at("subgraphs")) {
      SubgraphPlan sp;
      sp.subgraph = s.at("subgraph").get<int>();
      sp.workloads = s.at("workloads").get<std::vector<double>>();
      for (const auto& t : s.at("tours")) {
        Tour tour;
        tour.length = t.at("length").get<double>();
        sp.tours.push_back(std::move(tour));
        sp.robot_of_tour.push_back(t.at("robot").get<int>());
      }
      if (sp.subgraph != static_cast<int>(plan.subgraphs.size())) {
        throw ValidationError("plan: sub-graphs must be listed in order");
      }
      plan.subgraphs.push_back(std::move(sp));
    }
    return plan;
  } catch (const Json::exception& ex) {
    throw ValidationError(std::string("plan: ") + ex.what());
  }
}

inline Json simulation_to_json(const SimulationResult& sim) {
  Json j;
  j["overall_seconds"] = sim.overall_seconds;
  Json teams = Json::array();
  for (std::size_t t = 0; t < sim.team_seconds.size(); ++t) {
    Json tj;
    tj["team"] = t;
    tj["seconds"] = sim.team_seconds[t];
    Json events = Json::array();
    for (const auto& ev : sim.timeline[t]) {
      Json e;
      e["type"] = ev.kind == TimelineEvent::Kind::kTransit ? "transit" : "coverage";
      e["subgraph"] = ev.subgraph;
      e["start"] = ev.start;
      e["end"] = ev.end;
      e["distance"] = ev.distance;
      events.push_back(std::move(e));
    }
    tj["events"] = std::move(events);
    teams.push_back(std::move(tj));
  }
  j["teams"] = std::move(teams);
  return j;
}

inline constexpr const char* kReportColumns[] = {
    "network",         "planner",           "status",
    "subgraphs",       "total_runtime_s",   "partition_rsd_pct",
    "total_tour_length_km", "mean_max_tour_length_km", "mean_rsd_pct",
    "utilization"};

inline Json report_to_json(const std::vector<ReportRow>& rows,
                           bool with_runtime = true) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["network"] = r.network;
    j["planner"] = r.planner;
    j["status"] = r.ok ? "ok" : "error";
    if (!r.ok) j["error"] = r.error;
    j["subgraphs"] = r.subgraphs;
    if (with_runtime) j["total_runtime_s"] = r.runtime_seconds;
    j["partition_rsd_pct"] = r.partition_rsd;
    j["total_tour_length_km"] = r.total_tour_length / 1000.0;
    j["mean_max_tour_length_km"] = r.mean_max_tour_length / 1000.0;
    j["mean_rsd_pct"] = r.mean_rsd;
    j["utilization"] = r.utilization;
    Json detail = Json::array();
    for (const auto& s : r.detail) {
      Json d;
      d["subgraph"] = s.subgraph;
      d["length_km"] = s.length / 1000.0;
      d["tours"] = s.tours;
      d["total_tour_length_km"] = s.total_tour_length / 1000.0;
      d["max_tour_length_km"] = s.max_tour_length / 1000.0;
      d["rsd_pct"] = s.tour_rsd;
      d["utilization"] = s.utilization;
      if (with_runtime) d["runtime_s"] = s.runtime_seconds;
      detail.push_back(std::move(d));
    }
    j["per_subgraph"] = std::move(detail);
    out.push_back(std::move(j));
  }
  return out;
}

inline std::string report_to_csv(const std::vector<ReportRow>& rows,
                                 bool with_runtime = true) {
  std::ostringstream out;
  bool first = true;
  for (const char* c : kReportColumns) {
    out << (first ? "" : ",") << c;
    first = false;
  }
  out << "\n";
  const auto num = [](double v) {
    std::string s;
    detail::append_fixed(s, v);
    return s;
  };
  for (const auto& r : rows) {
    out << r.network << "," << r.planner << "," << (r.ok ? "ok" : "error")
        << "," << r.subgraphs << ","
        << num(with_runtime ? r.runtime_seconds : 0.0) << ","
        << num(r.partition_rsd) << "," << num(r.total_tour_length / 1000.0)
        << "," << num(r.mean_max_tour_length / 1000.0) << ","
        << num(r.mean_rsd) << "," << num(r.utilization) << "\n";
  }
  return out.str();
}

}  // namespace linecover
