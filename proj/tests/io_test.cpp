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

void expect_same_graph(const RoadGraph& a, const RoadGraph& b) {
  ASSERT_EQ(a.vertex_count(), b.vertex_count());
  ASSERT_EQ(a.edge_count(), b.edge_count());
  for (int i = 0; i < a.vertex_count(); ++i) {
    EXPECT_EQ(a.vertex(i).id, b.vertex(i).id);
    EXPECT_EQ(a.vertex(i).x, b.vertex(i).x);
    EXPECT_EQ(a.vertex(i).y, b.vertex(i).y);
  }
  for (int i = 0; i < a.edge_count(); ++i) {
    EXPECT_EQ(a.edge(i).id, b.edge(i).id);
    EXPECT_EQ(a.edge(i).u, b.edge(i).u);
    EXPECT_EQ(a.edge(i).v, b.edge(i).v);
    EXPECT_EQ(a.edge(i).length, b.edge(i).length);
  }
}

TEST(EdgeList, ParsesCommentsAndOptionalLengths) {
  const RoadGraph g = load_graph_string(
      "# header\n"
      "v 10 0 0\n"
      "v 11 3 4   # trailing comment\n"
      "v 12 3 0\n"
      "10 11\n"
      "\n"
      "11 12 2.5\n",
      GraphFormat::kEdgeList);
  EXPECT_EQ(g.vertex_count(), 3);
  ASSERT_EQ(g.edge_count(), 2);
  EXPECT_DOUBLE_EQ(g.edge(0).length, 5.0);
  EXPECT_DOUBLE_EQ(g.edge(1).length, 2.5);
  EXPECT_EQ(g.edge(1).id, 1);
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
  try {
    load_graph_string("v 0 0 0\nv 1 1 0\n0 x\n", GraphFormat::kEdgeList);
    FAIL();
  } catch (const ValidationError& ex) {
    EXPECT_NE(std::string(ex.what()).find("line 3"), std::string::npos);
  }
  EXPECT_THROW(load_graph_string("v 0 0 0\nv 1 1 0\n0 2\n", GraphFormat::kEdgeList),
               ValidationError);
}

TEST(JsonGraph, EuclideanDefaultAndErrors) {
  const RoadGraph g = load_graph_string(
      R"({"vertices":[{"id":0,"x":0,"y":0},{"id":1,"x":3,"y":4}],
          "edges":[{"id":7,"u":0,"v":1}]})",
      GraphFormat::kJson);
  EXPECT_DOUBLE_EQ(g.edge(0).length, 5.0);
  EXPECT_EQ(g.edge(0).id, 7);
  EXPECT_THROW(load_graph_string(R"({"vertices":[{"id":0,"x":0,"y":0}],
          "edges":[{"id":0,"u":0,"v":1}]})", GraphFormat::kJson),
               ValidationError);
  EXPECT_THROW(load_graph_string("{not json", GraphFormat::kJson), ValidationError);
}

TEST(RoundTrip, BothFormatsAreIdentity) {
  const RoadGraph g = generate_synthetic_network(15, 11, 0.3, 0.2, 4);
  for (GraphFormat f : {GraphFormat::kEdgeList, GraphFormat::kJson}) {
    const RoadGraph h = load_graph_string(serialize_graph(g, f), f);
    expect_same_graph(g, h);
    EXPECT_EQ(serialize_graph(h, f), serialize_graph(g, f));
  }
}

TEST(FormatNames, ParseAndGuess) {
  EXPECT_EQ(parse_graph_format("json"), GraphFormat::kJson);
  EXPECT_EQ(parse_graph_format("edge-list"), GraphFormat::kEdgeList);
  EXPECT_THROW(parse_graph_format("xml"), ValidationError);
  EXPECT_EQ(graph_format_for_path("a/b.json"), GraphFormat::kJson);
  EXPECT_EQ(graph_format_for_path("a/b.txt"), GraphFormat::kEdgeList);
}

TEST(DumpFixed, SixDecimalsAndStableLayout) {
  Json j;
  j["a"] = 1.0 / 3.0;
  j["b"] = std::vector<double>{1.0, -0.0000001};
  j["c"] = 3;
  j["d"] = "x";
  const std::string s = dump_fixed(j);
  EXPECT_NE(s.find("0.333333"), std::string::npos);
  EXPECT_NE(s.find("[1.000000, 0.000000]"), std::string::npos);
  EXPECT_NE(s.find("\"c\": 3"), std::string::npos);
  EXPECT_EQ(s.back(), '\n');
  EXPECT_EQ(dump_fixed(Json::parse(s)), s);
}

TEST(Config, JsonRoundTripAndValidation) {
  PlannerConfig c;
  c.alpha = 0.5;
  c.k = 4;
  c.trob_objective = TrobObjective::kMaxRoute;
  const PlannerConfig back = config_from_json(to_json(c));
  EXPECT_EQ(to_json(back), to_json(c));
  EXPECT_THROW(config_from_json(Json{{"bogus", 1}}), ValidationError);
  EXPECT_THROW(config_from_json(Json{{"alpha", 1.5}}), ValidationError);
  EXPECT_THROW(config_from_json(Json{{"beta", 1.0}}), ValidationError);
  EXPECT_THROW(config_from_json(Json{{"crobs", "five"}}), ValidationError);
  EXPECT_THROW(config_from_json(Json{{"energy", -1}}), ValidationError);
}

TEST(PartitionJson, RoundTrip) {
  const RoadGraph g = generate_synthetic_network(20, 20, 0.3, 0.2, 2);
  PlannerConfig cfg;
  cfg.k = 3;
  const Partition p = partition_graph(g, cfg);
  const Json j = partition_to_json(g, p);
  const Partition q = partition_from_json(g, Json::parse(dump_fixed(j)));
  EXPECT_EQ(q.cluster_of_edge, p.cluster_of_edge);
  EXPECT_EQ(q.centroids, p.centroids);
  EXPECT_EQ(dump_fixed(partition_to_json(g, q)), dump_fixed(j));
  Json broken = j;
  broken["clusters"][0]["edges"].push_back(0);
  EXPECT_THROW(partition_from_json(g, broken), ValidationError);
}

TEST(PlanJson, SimulationReadBackMatches) {
  const RoadGraph g = generate_synthetic_network(24, 24, 0.3, 0.2, 3);
  PlannerConfig cfg;
  cfg.ga_generations = 50;
  DistanceCache cache(g);
  const CoveragePlan plan =
      plan_coverage(g, partition_graph(g, cfg, cache), cfg, Coverer::kBup, cache);
  const std::string text = dump_fixed(plan_to_json(g, plan));
  const CoveragePlan back = plan_for_simulation(Json::parse(text));
  EXPECT_NEAR(simulate(back, back.cfg).overall_seconds,
              simulate(plan, cfg).overall_seconds, 1e-3);
  const Json j = Json::parse(text);
  for (const char* key : {"planner", "config", "partition", "trob_routes", "subgraphs", "metrics"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  const Json& first = j["subgraphs"][0];
  for (const char* key : {"subgraph", "depot", "tours"}) EXPECT_TRUE(first.contains(key)) << key;
  const Json& tour = first["tours"][0];
  for (const char* key : {"robot", "length", "legs"}) EXPECT_TRUE(tour.contains(key)) << key;
  EXPECT_TRUE(tour["legs"][0].contains("dir"));
}

TEST(ReportColumns, HaveMetricColumns) {
  const std::string header = report_to_csv({}, true);
  for (const char* col : {"subgraphs", "total_runtime_s", "total_tour_length_km",
                          "mean_max_tour_length_km", "mean_rsd_pct"}) {
    EXPECT_NE(header.find(col), std::string::npos) << col;
  }
}

TEST(Svg, PartitionAndPlanRender) {
  const RoadGraph g = generate_synthetic_network(8, 8, 0.3, 0.2, 3);
  PlannerConfig cfg;
  cfg.k = 2;
  cfg.ga_generations = 10;
  DistanceCache cache(g);
  const CoveragePlan plan =
      plan_coverage(g, partition_graph(g, cfg, cache), cfg, Coverer::kBup, cache);
  const std::string a = render_partition_svg(g, plan.partition);
  const std::string b = render_plan_svg(g, plan);
  EXPECT_EQ(a.rfind("<svg", 0), 0u);
  EXPECT_NE(b.find("</svg>"), std::string::npos);
  EXPECT_EQ(render_plan_svg(g, plan), b);
}

}  // namespace
