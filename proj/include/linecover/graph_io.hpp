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

#include <charconv>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "linecover/error.hpp"
#include "linecover/graph.hpp"

namespace linecover {

enum class GraphFormat { kEdgeList, kJson };

inline GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edge-list" || name == "edgelist" || name == "txt") {
    return GraphFormat::kEdgeList;
  }
  if (name == "json" || name == "geo-json" || name == "geojson") {
    return GraphFormat::kJson;
  }
  throw ValidationError("unknown graph format '" + std::string(name) + "'");
}

// Guesses the format from a path suffix: .json means JSON, anything else is
// an edge list.
inline GraphFormat graph_format_for_path(std::string_view path) {
  return path.ends_with(".json") ? GraphFormat::kJson : GraphFormat::kEdgeList;
}

namespace detail {

template <typename T>
bool parse_number(std::string_view token, T& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r') {
      ++j;
    }
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

// Edge list: "v id x y" declares a vertex, "u v [length]" declares an edge.
// Edge ids are assigned in file order starting at 0. '#' starts a comment.
inline RoadGraph load_edge_list(std::istream& in) {
  std::vector<Vertex> vertices;
  std::vector<EdgeSpec> edges;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    const auto tokens = split_ws(view);
    if (tokens.empty()) continue;
    const auto fail = [&](const std::string& why) {
      return ValidationError("parse error at line " + std::to_string(line_no) +
                             " ('" + line + "'): " + why);
    };
    if (tokens[0] == "v") {
      Vertex v;
      if (tokens.size() != 4 || !parse_number(tokens[1], v.id) ||
          !parse_number(tokens[2], v.x) || !parse_number(tokens[3], v.y)) {
        throw fail("expected 'v id x y'");
      }
      vertices.push_back(v);
      continue;
    }
    EdgeSpec e;
    e.id = static_cast<EdgeId>(edges.size());
    if (tokens.size() < 2 || tokens.size() > 3 ||
        !parse_number(tokens[0], e.u) || !parse_number(tokens[1], e.v)) {
      throw fail("expected 'u v [length]'");
    }
    if (tokens.size() == 3) {
      double len = 0.0;
      if (!parse_number(tokens[2], len)) throw fail("bad length");
      e.length = len;
    }
    edges.push_back(e);
  }
  return RoadGraph(std::move(vertices), std::move(edges));
}

inline RoadGraph load_json_graph(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& ex) {
    throw ValidationError(std::string("parse error: ") + ex.what());
  }
  std::vector<Vertex> vertices;
  std::vector<EdgeSpec> edges;
  try {
    if (!doc.is_object() || !doc.contains("vertices") ||
        !doc.contains("edges")) {
      throw ValidationError(
          "parse error: expected an object with 'vertices' and 'edges'");
    }
    for (const auto& rec : doc.at("vertices")) {
      try {
        vertices.push_back({rec.at("id").get<VertexId>(),
                            rec.at("x").get<double>(),
                            rec.at("y").get<double>()});
      } catch (const nlohmann::json::exception& ex) {
        throw ValidationError("parse error in vertex record " + rec.dump() +
                              ": " + ex.what());
      }
    }
    for (const auto& rec : doc.at("edges")) {
      try {
        EdgeSpec e;
        e.id = rec.at("id").get<EdgeId>();
        e.u = rec.at("u").get<VertexId>();
        e.v = rec.at("v").get<VertexId>();
        if (rec.contains("length") && !rec.at("length").is_null()) {
          e.length = rec.at("length").get<double>();
        }
        edges.push_back(e);
      } catch (const nlohmann::json::exception& ex) {
        throw ValidationError("parse error in edge record " + rec.dump() +
                              ": " + ex.what());
      }
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ValidationError(std::string("parse error: ") + ex.what());
  }
  return RoadGraph(std::move(vertices), std::move(edges));
}

// Shortest decimal form that reads back to the same double.
inline std::string exact_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  ensure(ec == std::errc(), "exact_number: formatting failed");
  return std::string(buf, ptr);
}

}  // namespace detail

inline RoadGraph load_graph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::kJson ? detail::load_json_graph(in)
                                      : detail::load_edge_list(in);
}

inline RoadGraph load_graph_string(const std::string& text,
                                   GraphFormat format) {
  std::istringstream in(text);
  return load_graph(in, format);
}

// Writes lengths and coordinates in shortest round-trip form, so loading the
// output reproduces the same RoadGraph. Edge-list output renumbers edge ids
// by position; JSON output keeps them.
inline std::string serialize_graph(const RoadGraph& g, GraphFormat format) {
  std::string out;
  if (format == GraphFormat::kEdgeList) {
    out += "# linecover edge list: " + std::to_string(g.vertex_count()) +
           " vertices, " + std::to_string(g.edge_count()) + " edges\n";
    for (const Vertex& v : g.vertices()) {
      out += "v " + std::to_string(v.id) + " " + detail::exact_number(v.x) +
             " " + detail::exact_number(v.y) + "\n";
    }
    for (const Edge& e : g.edges()) {
      out += std::to_string(g.vertex(e.u).id) + " " +
             std::to_string(g.vertex(e.v).id) + " " +
             detail::exact_number(e.length) + "\n";
    }
    return out;
  }
  out += "{\n  \"vertices\": [\n";
  for (int i = 0; i < g.vertex_count(); ++i) {
    const Vertex& v = g.vertex(i);
    out += "    {\"id\": " + std::to_string(v.id) +
           ", \"x\": " + detail::exact_number(v.x) +
           ", \"y\": " + detail::exact_number(v.y) + "}";
    out += i + 1 < g.vertex_count() ? ",\n" : "\n";
  }
  out += "  ],\n  \"edges\": [\n";
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    out += "    {\"id\": " + std::to_string(e.id) +
           ", \"u\": " + std::to_string(g.vertex(e.u).id) +
           ", \"v\": " + std::to_string(g.vertex(e.v).id) +
           ", \"length\": " + detail::exact_number(e.length) + "}";
    out += i + 1 < g.edge_count() ? ",\n" : "\n";
  }
  out += "  ]\n}\n";
  return out;
}

}  // namespace linecover
