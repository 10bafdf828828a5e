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

// linecover: partition a road network, plan balanced coverage tours,
// simulate execution time and compare planners.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "linecover/linecover.hpp"

namespace fs = std::filesystem;
using namespace linecover;

namespace {

struct ConfigFlags {
  std::optional<std::string> config_file;
  std::optional<double> alpha, energy, epsilon, eta1, eta2, beta, crob_speed,
      trob_speed;
  std::optional<int> crobs, tau1, tau2, teams, k, generations, population;
  std::optional<std::uint64_t> seed;
  std::optional<VertexId> depot;
  std::optional<std::string> objective;

  void attach(CLI::App* app) {
    app->add_option("--config", config_file, "JSON file with config values");
    app->add_option("--alpha", alpha, "sub-graph scale constant (0,1)");
    app->add_option("--crobs", crobs, "coverage robots per team (M)");
    app->add_option("--energy", energy, "tour energy budget Q in meters");
    app->add_option("--epsilon", epsilon, "target max/min sub-graph ratio");
    app->add_option("--tau1", tau1, "clustering iteration cap");
    app->add_option("--tau2", tau2, "boundary re-assignment iteration cap");
    app->add_option("--eta1", eta1, "linear scale-factor gain");
    app->add_option("--eta2", eta2, "cubic scale-factor gain");
    app->add_option("--beta", beta, "tour window shrink factor (0,1)");
    app->add_option("--crob-speed", crob_speed, "coverage robot speed m/s");
    app->add_option("--trob-speed", trob_speed, "transport robot speed m/s");
    app->add_option("--seed", seed, "random seed");
    app->add_option("--teams", teams, "number of robot teams");
    app->add_option("--k", k, "override the sub-graph count");
    app->add_option("--depot", depot, "transport robot start vertex id");
    app->add_option("--generations", generations, "GA generations");
    app->add_option("--population", population, "GA population size");
    app->add_option("--trob-objective", objective, "total | max");
  }

  // defaults < config file < flags
  PlannerConfig resolve() const {
    PlannerConfig cfg;
    if (config_file) {
      std::ifstream in(*config_file);
      if (!in) throw ValidationError("cannot open config file " + *config_file);
      Json j;
      try {
        j = Json::parse(in);
      } catch (const Json::exception& ex) {
        throw ValidationError("config file: " + std::string(ex.what()));
      }
      apply_json(cfg, j);
    }
    if (alpha) cfg.alpha = *alpha;
    if (crobs) cfg.crobs = *crobs;
    if (energy) cfg.energy = *energy;
    if (epsilon) cfg.epsilon = *epsilon;
    if (tau1) cfg.tau1 = *tau1;
    if (tau2) cfg.tau2 = *tau2;
    if (eta1) cfg.eta1 = *eta1;
    if (eta2) cfg.eta2 = *eta2;
    if (beta) cfg.beta = *beta;
    if (crob_speed) cfg.crob_speed = *crob_speed;
    if (trob_speed) cfg.trob_speed = *trob_speed;
    if (seed) cfg.seed = *seed;
    if (teams) cfg.teams = *teams;
    if (k) cfg.k = *k;
    if (depot) cfg.depot = *depot;
    if (generations) cfg.ga_generations = *generations;
    if (population) cfg.ga_population = *population;
    if (objective) apply_json(cfg, Json{{"trob_objective", *objective}});
    cfg.validate();
    return cfg;
  }
};

std::string with_suffix(const std::string& path, const std::string& suffix) {
  fs::path p(path);
  p.replace_extension();
  return p.string() + suffix;
}

class Manifest {
 public:
  Manifest(std::string command, std::string input,
           std::vector<std::string> argv)
      : command_(std::move(command)),
        input_(std::move(input)),
        argv_(std::move(argv)) {}

  void config(const PlannerConfig& cfg) { config_ = to_json(cfg); }
  void extra(const std::string& key, Json value) { extra_[key] = std::move(value); }
  void output(const std::string& path) { outputs_.push_back(path); }

  template <typename F>
  auto stage(const std::string& name, F&& f) {
    const auto started = std::chrono::steady_clock::now();
    auto result = f();
    timings_.emplace_back(name, std::chrono::duration<double>(
                                    std::chrono::steady_clock::now() - started)
                                    .count());
    return result;
  }

  // Writes <stem>.manifest.json and <stem>.timings.csv next to the primary
  // output. Timings stay out of the JSON so a replay reproduces it byte for byte.
  void write(const std::string& primary) {
    const std::string path = with_suffix(primary, ".manifest.json");
    const std::string timings_path = with_suffix(primary, ".timings.csv");
    std::ostringstream csv;
    csv << "stage,seconds\n";
    for (const auto& [name, seconds] : timings_) csv << name << "," << seconds << "\n";
    write_file(timings_path, csv.str());
    outputs_.push_back(timings_path);
    outputs_.push_back(path);
    Json j;
    j["command"] = command_;
    j["argv"] = argv_;
    j["input"] = input_;
    j["config"] = config_;
    j["seed"] = config_.contains("seed") ? config_["seed"] : Json(nullptr);
    for (auto it = extra_.begin(); it != extra_.end(); ++it) j[it.key()] = it.value();
    j["outputs"] = outputs_;
    write_file(path, dump_fixed(j));
  }

  static void write_file(const std::string& path, const std::string& text) {
    if (auto parent = fs::path(path).parent_path(); !parent.empty()) {
      fs::create_directories(parent);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + path);
    out << text;
  }

 private:
  std::string command_;
  std::string input_;
  Json config_ = Json::object();
  Json extra_ = Json::object();
  std::vector<std::string> argv_;
  std::vector<std::string> outputs_;
  std::vector<std::pair<std::string, double>> timings_;
};

RoadGraph read_graph(const std::string& path,
                     const std::optional<std::string>& format) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open graph file " + path);
  const GraphFormat f =
      format ? parse_graph_format(*format) : graph_format_for_path(path);
  return load_graph(in, f);
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& ex) {
    throw ValidationError(path + ": " + ex.what());
  }
}

int worker_cap(int requested) {
  int threads = requested > 0
                    ? requested
                    : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("LINECOVER_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) threads = std::min(threads, cap);
  }
  return threads;
}

// Post-emit audit: every tour within energy, every required edge covered
// exactly once, walks continuous and depot-anchored.
void audit_plan(const RoadGraph& g, const CoveragePlan& plan) {
  std::vector<int> covered(g.edge_count(), 0);
  for (const auto& sp : plan.subgraphs) {
    for (const Tour& t : sp.tours) {
      if (t.length > plan.cfg.energy * (1 + 1e-9)) {
        throw InternalError("audit: tour exceeds energy in sub-graph " +
                            std::to_string(sp.subgraph));
      }
      VertexIndex at = sp.depot;
      for (const Traversal& tr : t.walk) {
        if (tr.from != at) throw InternalError("audit: discontinuous tour");
        at = tr.to;
        if (tr.kind == TraversalKind::kRequired) ++covered[tr.edge];
      }
      if (at != sp.depot) throw InternalError("audit: tour does not return to depot");
    }
  }
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (covered[e] != 1) {
      throw InternalError("audit: edge " + std::to_string(g.edge(e).id) +
                          " covered " + std::to_string(covered[e]) + " times");
    }
  }
}

}  // namespace

int run_cli(std::vector<std::string> args) {
  const std::vector<std::string> argv_copy = args;
  CLI::App app{"linecover: balanced multi-robot line coverage planning"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a synthetic road network");
  SyntheticSpec gen_spec;
  std::string gen_out;
  std::optional<std::string> gen_format;
  gen->add_option("--rows", gen_spec.rows, "grid rows")->required();
  gen->add_option("--cols", gen_spec.cols, "grid columns")->required();
  gen->add_option("--jitter", gen_spec.jitter, "coordinate jitter fraction");
  gen->add_option("--drop", gen_spec.drop, "edge drop probability");
  gen->add_option("--seed", gen_spec.seed, "random seed");
  gen->add_option("--spacing", gen_spec.spacing, "grid spacing in meters");
  gen->add_option("--out", gen_out, "output graph file")->required();
  gen->add_option("--format", gen_format, "edge-list | json (default: by suffix)");

  // partition
  auto* part = app.add_subcommand("partition", "balanced graph partitioning");
  std::string part_graph;
  std::string part_out = "partition.json";
  std::optional<std::string> part_format;
  std::string part_method = "bgp";
  ConfigFlags part_flags;
  part->add_option("graph", part_graph, "road network file")->required();
  part->add_option("--out", part_out, "partition JSON path");
  part->add_option("--format", part_format, "edge-list | json");
  part->add_option("--method", part_method, "bgp | kmedoids");
  part_flags.attach(part);

  // plan
  auto* plan_cmd = app.add_subcommand("plan", "plan coverage tours");
  std::string plan_graph;
  std::optional<std::string> plan_partition;
  std::string plan_out = "plan.json";
  std::optional<std::string> plan_format;
  std::string plan_planner = "bgp+bup";
  ConfigFlags plan_flags;
  plan_cmd->add_option("graph", plan_graph, "road network file")->required();
  plan_cmd->add_option("--partition", plan_partition, "existing partition JSON");
  plan_cmd->add_option("--out", plan_out, "plan JSON path");
  plan_cmd->add_option("--format", plan_format, "edge-list | json");
  plan_cmd->add_option("--planner", plan_planner, "partitioner+coverer, e.g. bgp+bup");
  plan_flags.attach(plan_cmd);

  // simulate
  auto* sim = app.add_subcommand("simulate", "simulate plan execution time");
  std::string sim_plan;
  std::string sim_out = "timeline.json";
  ConfigFlags sim_flags;
  sim->add_option("plan", sim_plan, "plan JSON")->required();
  sim->add_option("--out", sim_out, "timeline JSON path");
  sim_flags.attach(sim);

  // compare
  auto* cmp = app.add_subcommand("compare", "compare planners");
  std::optional<std::string> cmp_graph;
  std::optional<std::string> cmp_gen;
  std::optional<std::string> cmp_format;
  std::vector<std::string> cmp_planners{"bgp+bup", "bgp+up"};
  std::vector<std::uint64_t> cmp_seeds{1};
  std::string cmp_out = "report.json";
  int cmp_threads = 0;
  bool cmp_with_runtime = false;
  ConfigFlags cmp_flags;
  cmp->add_option("--graph", cmp_graph, "road network file");
  cmp->add_option("--gen", cmp_gen, "generator spec rows,cols,jitter,drop[,spacing]");
  cmp->add_option("--format", cmp_format, "edge-list | json");
  cmp->add_option("--planners", cmp_planners, "planner list")->delimiter(',');
  cmp->add_option("--seeds", cmp_seeds, "seeds (networks for --gen)")->delimiter(',');
  cmp->add_option("--out", cmp_out, "report path (.json; a .csv is written alongside)");
  cmp->add_option("--threads", cmp_threads, "worker threads (capped by LINECOVER_THREADS)");
  cmp->add_flag("--with-runtime", cmp_with_runtime,
                "include wall-clock runtimes in the JSON report (the CSV always has them)");
  cmp_flags.attach(cmp);

  // replay
  auto* replay = app.add_subcommand("replay", "re-run the command recorded in a manifest");
  std::string replay_manifest;
  replay->add_option("manifest", replay_manifest, "manifest JSON")->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::kValidation);
  }

  try {
    if (replay->parsed()) {
      const Json m = read_json(replay_manifest);
      if (!m.contains("argv") || !m["argv"].is_array() || m["argv"].empty()) {
        throw ValidationError("replay: manifest has no argv");
      }
      auto recorded = m["argv"].get<std::vector<std::string>>();
      if (recorded.front() == "replay") {
        throw ValidationError("replay: manifest records a replay");
      }
      return run_cli(std::move(recorded));
    } else if (gen->parsed()) {
      Manifest manifest("gen", "", argv_copy);
      const RoadGraph g = manifest.stage(
          "generate", [&] { return generate_synthetic_network(gen_spec); });
      const GraphFormat f = gen_format ? parse_graph_format(*gen_format)
                                       : graph_format_for_path(gen_out);
      Manifest::write_file(gen_out, serialize_graph(g, f));
      manifest.output(gen_out);
      manifest.extra("generator", Json{{"rows", gen_spec.rows},
                                       {"cols", gen_spec.cols},
                                       {"jitter", gen_spec.jitter},
                                       {"drop", gen_spec.drop},
                                       {"seed", gen_spec.seed},
                                       {"spacing", gen_spec.spacing}});
      manifest.write(gen_out);
      std::cout << "wrote " << gen_out << ": " << g.vertex_count()
                << " vertices, " << g.edge_count() << " edges, "
                << g.total_length() / 1000.0 << " km\n";
    } else if (part->parsed()) {
      const PlannerConfig cfg = part_flags.resolve();
      Manifest manifest("partition", part_graph, argv_copy);
      manifest.config(cfg);
      manifest.extra("method", part_method);
      const RoadGraph g = manifest.stage(
          "load", [&] { return read_graph(part_graph, part_format); });
      const Partitioner which =
          part_method == "kmedoids" ? Partitioner::kKmedoids
          : part_method == "bgp"    ? Partitioner::kBgp
              : throw ValidationError("unknown partition method " + part_method);
      DistanceCache cache(g);
      const Partition p = manifest.stage(
          "partition", [&] { return run_partitioner(g, cfg, which, cache); });
      Manifest::write_file(part_out, dump_fixed(partition_to_json(g, p)));
      manifest.output(part_out);
      const std::string svg = with_suffix(part_out, ".svg");
      Manifest::write_file(svg, render_partition_svg(g, p));
      manifest.output(svg);
      manifest.write(part_out);
      std::cout << "k=" << p.k << " ratio=" << length_ratio(p.lengths)
                << " rsd=" << rsd(p.lengths) << "%\n";
    } else if (plan_cmd->parsed()) {
      const PlannerConfig cfg = plan_flags.resolve();
      const PlannerSpec spec = parse_planner(plan_planner);
      Manifest manifest("plan", plan_graph, argv_copy);
      manifest.config(cfg);
      manifest.extra("planner", spec.name());
      const RoadGraph g = manifest.stage(
          "load", [&] { return read_graph(plan_graph, plan_format); });
      DistanceCache cache(g);
      Partition p = manifest.stage("partition", [&] {
        if (plan_partition) {
          manifest.extra("partition_input", *plan_partition);
          return partition_from_json(g, read_json(*plan_partition));
        }
        return run_partitioner(g, cfg, spec.partitioner, cache);
      });
      CoveragePlan plan = manifest.stage("plan", [&] {
        return plan_coverage(g, std::move(p), cfg, spec.coverer, cache);
      });
      plan.partitioner = spec.partitioner;
      audit_plan(g, plan);
      Manifest::write_file(plan_out, dump_fixed(plan_to_json(g, plan)));
      manifest.output(plan_out);
      const std::string svg = with_suffix(plan_out, ".svg");
      Manifest::write_file(svg, render_plan_svg(g, plan));
      manifest.output(svg);
      manifest.write(plan_out);
      const PlanMetrics m = plan_metrics(plan);
      std::cout << "subgraphs=" << m.subgraphs
                << " total_tour_km=" << m.total_tour_length / 1000.0
                << " mean_max_tour_km=" << m.mean_max_tour_length / 1000.0
                << " mean_rsd=" << m.mean_tour_rsd
                << "% utilization=" << m.mean_utilization << "\n";
    } else if (sim->parsed()) {
      const Json doc = read_json(sim_plan);
      CoveragePlan plan = plan_for_simulation(doc);
      // Speeds come from the plan's config unless a config file or flag
      // overrides them.
      PlannerConfig cfg = plan.cfg;
      if (sim_flags.config_file || sim_flags.crob_speed || sim_flags.trob_speed) {
        const PlannerConfig overrides = sim_flags.resolve();
        cfg.crob_speed = overrides.crob_speed;
        cfg.trob_speed = overrides.trob_speed;
        cfg.validate();
      }
      Manifest manifest("simulate", sim_plan, argv_copy);
      manifest.config(cfg);
      const SimulationResult r =
          manifest.stage("simulate", [&] { return simulate(plan, cfg); });
      Manifest::write_file(sim_out, dump_fixed(simulation_to_json(r)));
      manifest.output(sim_out);
      manifest.write(sim_out);
      std::cout << "overall " << r.overall_seconds << " s ("
                << r.overall_seconds / 60.0 << " min)\n";
    } else if (cmp->parsed()) {
      const PlannerConfig cfg = cmp_flags.resolve();
      if (cmp_graph.has_value() == cmp_gen.has_value()) {
        throw ValidationError("compare: give exactly one of --graph or --gen");
      }
      std::vector<PlannerSpec> planners;
      for (const auto& name : cmp_planners) planners.push_back(parse_planner(name));
      Manifest manifest("compare", cmp_graph ? *cmp_graph : "gen:" + *cmp_gen,
                        argv_copy);
      manifest.config(cfg);
      manifest.extra("planners", cmp_planners);
      manifest.extra("seeds", cmp_seeds);

      std::vector<RoadGraph> graphs;
      std::vector<std::string> names;
      std::vector<ReportRow> rows;
      const int threads = worker_cap(cmp_threads);
      if (cmp_graph) {
        graphs.push_back(read_graph(*cmp_graph, cmp_format));
        for (std::uint64_t s : cmp_seeds) {
          PlannerConfig c = cfg;
          c.seed = s;
          const NamedGraph net{fs::path(*cmp_graph).stem().string() + "@" +
                                   std::to_string(s),
                               &graphs.front()};
          auto part_rows = manifest.stage("compare-" + std::to_string(s), [&] {
            return compare_report(std::span(&net, 1), c, planners, threads);
          });
          rows.insert(rows.end(), part_rows.begin(), part_rows.end());
        }
      } else {
        std::vector<double> values;
        std::stringstream ss(*cmp_gen);
        for (std::string tok; std::getline(ss, tok, ',');) {
          values.push_back(std::stod(tok));
        }
        if (values.size() < 4 || values.size() > 5) {
          throw ValidationError("compare: --gen expects rows,cols,jitter,drop[,spacing]");
        }
        for (std::uint64_t s : cmp_seeds) {
          SyntheticSpec spec{static_cast<int>(values[0]),
                             static_cast<int>(values[1]), values[2], values[3],
                             s, values.size() == 5 ? values[4] : 100.0};
          graphs.push_back(generate_synthetic_network(spec));
          names.push_back("grid" + std::to_string(spec.rows) + "x" +
                          std::to_string(spec.cols) + "@" + std::to_string(s));
        }
        std::vector<NamedGraph> nets;
        for (std::size_t i = 0; i < graphs.size(); ++i) {
          nets.push_back({names[i], &graphs[i]});
        }
        rows = manifest.stage("compare", [&] {
          return compare_report(nets, cfg, planners, threads);
        });
      }
      Manifest::write_file(cmp_out,
                           dump_fixed(report_to_json(rows, cmp_with_runtime)));
      manifest.output(cmp_out);
      const std::string csv = with_suffix(cmp_out, ".csv");
      Manifest::write_file(csv, report_to_csv(rows, true));
      manifest.output(csv);
      manifest.write(cmp_out);
      std::cout << report_to_csv(rows, true);
    }
  } catch (const ValidationError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return static_cast<int>(ExitCode::kValidation);
  } catch (const InfeasibleError& ex) {
    std::cerr << "infeasible: " << ex.what() << "\n";
    return static_cast<int>(ExitCode::kInfeasible);
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return static_cast<int>(ExitCode::kInternal);
  }
  return 0;
}

int main(int argc, char** argv) {
  return run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
