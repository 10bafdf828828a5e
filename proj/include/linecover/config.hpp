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
#include <optional>
#include <string>

#include "linecover/error.hpp"
#include "linecover/graph.hpp"
#include "linecover/json_format.hpp"

namespace linecover {

enum class TrobObjective { kTotalLength, kMaxRoute };

// All tunables of the pipeline. Defaults are the published experiment
// settings: 5 coverage robots per team, 25 km of energy, 2 m/s coverage and
// 12 m/s transport speed.
struct PlannerConfig {
  double alpha = 0.59;
  int crobs = 5;              // M, coverage robots per team
  double energy = 25000.0;    // Q, meters per tour
  double epsilon = 1.05;      // target max/min sub-graph length ratio
  int tau1 = 1000;            // clustering iteration cap
  int tau2 = 100;             // boundary re-assignment iteration cap
  double eta1 = 0.02;
  double eta2 = 0.1;
  double beta = 0.98;         // window shrink factor on the longest tour
  double crob_speed = 2.0;    // m/s
  double trob_speed = 12.0;   // m/s
  std::uint64_t seed = 1;
  int teams = 2;
  std::optional<int> k;              // overrides the computed cluster count
  std::optional<VertexId> depot;     // transport robot start; default medoid
  int ga_population = 100;
  int ga_generations = 500;
  TrobObjective trob_objective = TrobObjective::kTotalLength;

  void validate() const {
    const auto fail = [](const std::string& what) {
      throw ValidationError("invalid config: " + what);
    };
    if (!(alpha > 0.0 && alpha < 1.0)) fail("alpha must lie in (0, 1)");
    if (crobs < 1) fail("crobs must be >= 1");
    if (!(energy > 0.0)) fail("energy must be > 0");
    if (!(epsilon >= 1.0)) fail("epsilon must be >= 1");
    if (tau1 < 0 || tau2 < 0) fail("tau1 and tau2 must be >= 0");
    if (!(eta1 >= 0.0 && eta2 >= 0.0)) fail("eta1 and eta2 must be >= 0");
    if (!(beta > 0.0 && beta < 1.0)) fail("beta must lie in (0, 1)");
    if (!(crob_speed > 0.0 && trob_speed > 0.0)) fail("speeds must be > 0");
    if (teams < 1) fail("teams must be >= 1");
    if (k && *k < 1) fail("k must be >= 1");
    if (ga_population < 2) fail("ga_population must be >= 2");
    if (ga_generations < 0) fail("ga_generations must be >= 0");
  }
};

inline Json to_json(const PlannerConfig& c) {
  Json j;
  j["alpha"] = c.alpha;
  j["crobs"] = c.crobs;
  j["energy"] = c.energy;
  j["epsilon"] = c.epsilon;
  j["tau1"] = c.tau1;
  j["tau2"] = c.tau2;
  j["eta1"] = c.eta1;
  j["eta2"] = c.eta2;
  j["beta"] = c.beta;
  j["crob_speed"] = c.crob_speed;
  j["trob_speed"] = c.trob_speed;
  j["seed"] = c.seed;
  j["teams"] = c.teams;
  j["k"] = c.k ? Json(*c.k) : Json(nullptr);
  j["depot"] = c.depot ? Json(*c.depot) : Json(nullptr);
  j["ga_population"] = c.ga_population;
  j["ga_generations"] = c.ga_generations;
  j["trob_objective"] =
      c.trob_objective == TrobObjective::kTotalLength ? "total" : "max";
  return j;
}

// Overlays the keys present in `j` onto `c`; unknown keys are rejected.
inline void apply_json(PlannerConfig& c, const Json& j) {
  if (!j.is_object()) throw ValidationError("config must be a JSON object");
  try {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string& key = it.key();
      const Json& v = it.value();
      if (key == "alpha") c.alpha = v.get<double>();
      else if (key == "crobs") c.crobs = v.get<int>();
      else if (key == "energy") c.energy = v.get<double>();
      else if (key == "epsilon") c.epsilon = v.get<double>();
      else if (key == "tau1") c.tau1 = v.get<int>();
      else if (key == "tau2") c.tau2 = v.get<int>();
      else if (key == "eta1") c.eta1 = v.get<double>();
      else if (key == "eta2") c.eta2 = v.get<double>();
      else if (key == "beta") c.beta = v.get<double>();
      else if (key == "crob_speed") c.crob_speed = v.get<double>();
      else if (key == "trob_speed") c.trob_speed = v.get<double>();
      else if (key == "seed") c.seed = v.get<std::uint64_t>();
      else if (key == "teams") c.teams = v.get<int>();
      else if (key == "k") c.k = v.is_null() ? std::nullopt : std::optional<int>(v.get<int>());
      else if (key == "depot") c.depot = v.is_null() ? std::nullopt : std::optional<VertexId>(v.get<VertexId>());
      else if (key == "ga_population") c.ga_population = v.get<int>();
      else if (key == "ga_generations") c.ga_generations = v.get<int>();
      else if (key == "trob_objective") {
        const auto name = v.get<std::string>();
        if (name == "total") c.trob_objective = TrobObjective::kTotalLength;
        else if (name == "max") c.trob_objective = TrobObjective::kMaxRoute;
        else throw ValidationError("invalid config: trob_objective '" + name + "'");
      } else {
        throw ValidationError("invalid config: unknown key '" + key + "'");
      }
    }
  } catch (const Json::exception& ex) {
    throw ValidationError(std::string("invalid config: ") + ex.what());
  }
}

inline PlannerConfig config_from_json(const Json& j) {
  PlannerConfig c;
  apply_json(c, j);
  c.validate();
  return c;
}

}  // namespace linecover
