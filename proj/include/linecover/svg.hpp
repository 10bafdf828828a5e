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
#include <cstdio>
#include <string>
#include <vector>

#include "linecover/bgp.hpp"
#include "linecover/evalsim.hpp"
#include "linecover/graph.hpp"

namespace linecover {

namespace detail {

inline const char* palette(int i) {
  static const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                 "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                 "#bcbd22", "#17becf", "#393b79", "#637939",
                                 "#8c6d31", "#843c39", "#7b4173", "#3182bd"};
  return colors[static_cast<unsigned>(i) % (sizeof(colors) / sizeof(*colors))];
}

// Maps planar meters onto an SVG canvas with the y axis pointing up.
class Canvas {
 public:
  explicit Canvas(const RoadGraph& g, double width = 1000.0,
                  double margin = 20.0)
      : margin_(margin) {
    min_x_ = max_x_ = g.vertex(0).x;
    min_y_ = max_y_ = g.vertex(0).y;
    for (const Vertex& v : g.vertices()) {
      min_x_ = std::min(min_x_, v.x);
      max_x_ = std::max(max_x_, v.x);
      min_y_ = std::min(min_y_, v.y);
      max_y_ = std::max(max_y_, v.y);
    }
    const double span_x = std::max(max_x_ - min_x_, 1e-9);
    const double span_y = std::max(max_y_ - min_y_, 1e-9);
    scale_ = (width - 2 * margin) / std::max(span_x, span_y);
    width_ = span_x * scale_ + 2 * margin;
    height_ = span_y * scale_ + 2 * margin;
  }

  std::string header() const {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width_) +
           "\" height=\"" + fmt(height_) + "\" viewBox=\"0 0 " + fmt(width_) +
           " " + fmt(height_) + "\">\n<rect width=\"100%\" height=\"100%\" "
           "fill=\"white\"/>\n";
  }

  std::string x(double mx) const { return fmt(margin_ + (mx - min_x_) * scale_); }
  std::string y(double my) const { return fmt(margin_ + (max_y_ - my) * scale_); }

  static std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
  }

 private:
  double margin_;
  double min_x_ = 0, max_x_ = 0, min_y_ = 0, max_y_ = 0;
  double scale_ = 1.0;
  double width_ = 0.0;
  double height_ = 0.0;
};

inline std::string line(const Canvas& c, const RoadGraph& g, VertexIndex a,
                        VertexIndex b, const char* color, double width) {
  return "<line x1=\"" + c.x(g.vertex(a).x) + "\" y1=\"" + c.y(g.vertex(a).y) +
         "\" x2=\"" + c.x(g.vertex(b).x) + "\" y2=\"" + c.y(g.vertex(b).y) +
         "\" stroke=\"" + color + "\" stroke-width=\"" + Canvas::fmt(width) +
         "\"/>\n";
}

inline std::string marker(const Canvas& c, const RoadGraph& g, VertexIndex v,
                          const char* color, const std::string& label) {
  return "<circle cx=\"" + c.x(g.vertex(v).x) + "\" cy=\"" + c.y(g.vertex(v).y) +
         "\" r=\"6\" fill=\"" + color + "\" stroke=\"black\" stroke-width=\"1.5\">"
         "<title>" + label + "</title></circle>\n";
}

}  // namespace detail

// Edges colored by cluster, centroids drawn as circles.
inline std::string render_partition_svg(const RoadGraph& g, const Partition& p) {
  detail::Canvas canvas(g);
  std::string out = canvas.header();
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    out += detail::line(canvas, g, edge.u, edge.v,
                        detail::palette(p.cluster_of_edge[e]), 2.0);
  }
  for (int i = 0; i < p.k; ++i) {
    out += detail::marker(canvas, g, p.centroids[i], detail::palette(i),
                          "cluster " + std::to_string(i));
  }
  out += "</svg>\n";
  return out;
}

// Road network in grey, each coverage robot's tours in its own color,
// sub-graph depots as circles.
inline std::string render_plan_svg(const RoadGraph& g, const CoveragePlan& plan) {
  detail::Canvas canvas(g);
  std::string out = canvas.header();
  for (const Edge& e : g.edges()) {
    out += detail::line(canvas, g, e.u, e.v, "#dddddd", 1.0);
  }
  const int robots = plan.cfg.crobs;
  for (const auto& sp : plan.subgraphs) {
    out += "<g id=\"subgraph-" + std::to_string(sp.subgraph) + "\">\n";
    for (std::size_t t = 0; t < sp.tours.size(); ++t) {
      const int robot = sp.robot_of_tour.empty() ? 0 : sp.robot_of_tour[t];
      const char* color = detail::palette(sp.subgraph * robots + robot);
      for (const Traversal& tr : sp.tours[t].walk) {
        out += detail::line(canvas, g, tr.from, tr.to, color,
                            tr.kind == TraversalKind::kRequired ? 2.0 : 0.8);
      }
    }
    out += "</g>\n";
  }
  for (const auto& sp : plan.subgraphs) {
    out += detail::marker(canvas, g, sp.depot, detail::palette(sp.subgraph),
                          "depot of sub-graph " + std::to_string(sp.subgraph));
  }
  out += "</svg>\n";
  return out;
}

}  // namespace linecover
