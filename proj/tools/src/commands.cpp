#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "cartroute/batch.hpp"
#include "cartroute/cost_policies.hpp"
#include "cartroute/elevation.hpp"
#include "cartroute/error.hpp"
#include "cartroute/evaluator.hpp"
#include "cartroute/geo_graph.hpp"
#include "cartroute/graph_io.hpp"
#include "cartroute/osm_ingest.hpp"
#include "cartroute/params_io.hpp"
#include "cartroute/route_document.hpp"
#include "cartroute/routing.hpp"
#include "cartroute/scenario.hpp"

namespace cartroute::cli {

namespace fs = std::filesystem;

namespace {

struct BuildGraphArgs {
  std::string osm;
  std::string dem;
  std::string elev_csv;
  std::string out;
  std::string sampling = "bilinear";
  double speed_threshold = kDefaultBidirectionalSpeedKmh;
};

struct PlanArgs {
  std::string graph;
  std::string stops;
  std::string policy = "work";
  std::optional<double> initial_mass;
  std::string out;
  std::string metrics;
  std::string params;
  std::string cdf_out;
  bool clamp_power_zero = false;
};

struct BenchArgs {
  std::string graph;
  std::string scenario;
  std::vector<std::string> policies = {"work", "impedance", "distance"};
  std::string out_dir;
  std::string params;
  bool clamp_power_zero = false;
};

struct ParamsArgs {
  bool dump = false;
  std::string params;
};

struct TerrainArgs {
  std::string kind = "sinusoidal";
  int size = 15;
  double amplitude = 60.0;
  double spacing = 100.0;
  double center_lat = TerrainOptions{}.center_lat;
  double center_lon = TerrainOptions{}.center_lon;
  double wavelength = 0.0;
  std::string out;
  std::string dem_out;
};

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write " + path.string());
  return f;
}

PhysicalParams params_or_default(const std::string& path) {
  return path.empty() ? PhysicalParams{} : load_params(path);
}

CostPolicy policy_or_throw(const std::string& name) {
  auto p = policy_from_name(name);
  if (!p) throw InvalidArgument("unknown policy '" + name + "' (work|impedance|distance)");
  return *p;
}

int cmd_build_graph(const BuildGraphArgs& a, std::ostream& out, std::ostream& err) {
  const OsmData data = parse_osm_file(a.osm);
  err << "dropped_ways=" << data.dropped_ways << '\n';

  BuildStats stats;
  GeoGraph graph = expand_bidirectional(build_graph(data, {}, &stats), a.speed_threshold);

  const Sampling mode = a.sampling == "nearest" ? Sampling::kNearest : Sampling::kBilinear;
  ElevationSource source;
  if (!a.dem.empty()) {
    source = load_ascii_grid(a.dem);
  } else {
    source = load_node_elevation_csv(a.elev_csv);
  }
  GradeReport report;
  graph = assign_grades(std::move(graph), source, mode, &report);
  if (report.fallback_samples > 0) {
    err << "nodata_fallbacks=" << report.fallback_samples << '\n';
  }

  auto f = open_output(a.out);
  write_graph(f, graph);
  out << fmt::format("nodes={} edges={} accepted_ways={} skipped_ways={}\n", graph.node_count(),
                     graph.edge_count(), stats.accepted_ways, stats.skipped_ways);
  return kOk;
}

int cmd_plan(const PlanArgs& a, std::ostream& out) {
  const PhysicalParams params = params_or_default(a.params);
  const CostPolicy policy = policy_or_throw(a.policy);
  const GeoGraph graph = read_graph_file(a.graph);
  const StopsRequest req = load_stops(a.stops);
  const double initial_mass = a.initial_mass.value_or(params.empty_mass);
  if (!(initial_mass > 0.0)) throw InvalidArgument("--initial-mass must be > 0");

  std::vector<CollectionStop> stops;
  stops.reserve(req.collection.size());
  for (const auto& wp : req.collection) {
    stops.push_back({snap_waypoint(graph, wp), wp.mass_increment});
  }
  const Tour tour = nearest_neighbor_route(graph, snap_waypoint(graph, req.start),
                                           snap_waypoint(graph, req.depot), stops, policy, params,
                                           initial_mass);
  const RouteMetrics metrics =
      evaluate_route(tour, params, initial_mass, EvaluationOptions{a.clamp_power_zero});

  {
    auto f = open_output(a.out);
    f << route_to_geojson(graph, tour, stops).dump(2) << '\n';
  }
  const auto metrics_json = metrics_to_json(tour, metrics);
  if (!a.metrics.empty()) {
    auto f = open_output(a.metrics);
    f << metrics_json.dump(2) << '\n';
  }
  if (!a.cdf_out.empty()) {
    auto f = open_output(a.cdf_out);
    write_cdf_csv(f, metrics.cdf);
  }
  out << fmt::format("policy={} legs={} distance_m={} time_s={} mean_power_w={}\n",
                     to_string(policy), tour.legs.size(), metrics.total_distance,
                     metrics.total_time, metrics.mean_power);
  return kOk;
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  const PhysicalParams params = params_or_default(a.params);
  const ScenarioConfig config = a.scenario.empty() ? ScenarioConfig{} : load_scenario(a.scenario);
  std::vector<CostPolicy> policies;
  for (const auto& name : a.policies) policies.push_back(policy_or_throw(name));
  const GeoGraph graph = read_graph_file(a.graph);

  const BatchResult result =
      run_batch(config, graph, policies, params, EvaluationOptions{a.clamp_power_zero});

  const fs::path dir(a.out_dir);
  {
    auto f = open_output(dir / "metrics.csv");
    write_metrics_csv(f, result);
  }
  {
    auto f = open_output(dir / "summary.csv");
    write_summary_csv(f, result);
  }
  for (const auto& [policy, cdf] : result.cdf) {
    auto f = open_output(dir / fmt::format("cdf_{}.csv", to_string(policy)));
    write_cdf_csv(f, cdf);
  }

  std::size_t ok = 0;
  for (const auto& s : result.summary) {
    ok += s.runs;
    out << fmt::format("{}: runs={} failures={} distance_m={} power_w={}\n", to_string(s.policy),
                       s.runs, s.failures, s.distance_m.mean, s.mean_power_w.mean);
  }
  if (ok == 0) {
    err << "error: every run failed; see metrics.csv\n";
    return kAllRunsFailed;
  }
  return kOk;
}

int cmd_params(const ParamsArgs& a, std::ostream& out) {
  const PhysicalParams params = params_or_default(a.params);
  out << params_to_json(params).dump(2) << '\n';
  return kOk;
}

int cmd_terrain(const TerrainArgs& a, std::ostream& out) {
  TerrainKind kind = TerrainKind::kSinusoidal;
  if (a.kind == "flat") {
    kind = TerrainKind::kFlat;
  } else if (a.kind == "ridge") {
    kind = TerrainKind::kRidge;
  } else if (a.kind != "sinusoidal") {
    throw InvalidArgument("unknown terrain kind '" + a.kind + "' (flat|ridge|sinusoidal)");
  }
  TerrainOptions opts;
  opts.spacing_m = a.spacing;
  opts.center_lat = a.center_lat;
  opts.center_lon = a.center_lon;
  opts.wavelength_m = a.wavelength;
  const SyntheticTerrain t = generate_synthetic_terrain(kind, a.size, a.amplitude, opts);
  {
    auto f = open_output(a.out);
    write_graph(f, t.graph);
  }
  if (!a.dem_out.empty()) {
    auto f = open_output(a.dem_out);
    write_ascii_grid(f, t.raster);
  }
  out << fmt::format("nodes={} edges={}\n", t.graph.node_count(), t.graph.edge_count());
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Route planning for human-powered collection carts", "cart-router"};
  app.require_subcommand(1);

  BuildGraphArgs bg;
  auto* build = app.add_subcommand("build-graph", "OSM extract + elevation -> graph text file");
  build->add_option("--osm", bg.osm, "OSM XML extract")->required()->check(CLI::ExistingFile);
  auto* dem = build->add_option("--dem", bg.dem, "ESRI ASCII grid (WGS84 degrees)");
  auto* csv = build->add_option("--elev-csv", bg.elev_csv, "node_id,elevation CSV");
  dem->excludes(csv);
  csv->excludes(dem);
  build->add_option("--out", bg.out, "output graph file")->required();
  build->add_option("--sampling", bg.sampling, "raster sampling")
      ->check(CLI::IsMember({"bilinear", "nearest"}))
      ->capture_default_str();
  build->add_option("--speed-threshold", bg.speed_threshold,
                    "one-way segments at or below this km/h get a reverse edge")
      ->capture_default_str();

  PlanArgs pl;
  auto* plan = app.add_subcommand("plan", "order stops and route them under one cost policy");
  plan->add_option("--graph", pl.graph)->required()->check(CLI::ExistingFile);
  plan->add_option("--stops", pl.stops, "stops JSON")->required()->check(CLI::ExistingFile);
  plan->add_option("--policy", pl.policy)
      ->check(CLI::IsMember({"work", "impedance", "distance"}))
      ->capture_default_str();
  plan->add_option("--initial-mass", pl.initial_mass, "kg; defaults to params empty_mass");
  plan->add_option("--out", pl.out, "GeoJSON route document")->required();
  plan->add_option("--metrics", pl.metrics, "metrics JSON");
  plan->add_option("--cdf-out", pl.cdf_out, "power CDF CSV");
  plan->add_option("--params", pl.params, "physical parameters JSON")->check(CLI::ExistingFile);
  plan->add_flag("--clamp-power-zero", pl.clamp_power_zero, "floor negative power at 0 W");

  BenchArgs bn;
  auto* bench = app.add_subcommand("bench", "multi-seed batch over several policies");
  bench->add_option("--graph", bn.graph)->required()->check(CLI::ExistingFile);
  bench->add_option("--scenario", bn.scenario, "scenario JSON")->check(CLI::ExistingFile);
  bench->add_option("--policies", bn.policies)->delimiter(',')->capture_default_str();
  bench->add_option("--out-dir", bn.out_dir)->required();
  bench->add_option("--params", bn.params)->check(CLI::ExistingFile);
  bench->add_flag("--clamp-power-zero", bn.clamp_power_zero);

  ParamsArgs pa;
  auto* params = app.add_subcommand("params", "print physical parameters");
  params->add_flag("--dump", pa.dump, "print the effective parameters as JSON")->required();
  params->add_option("--params", pa.params)->check(CLI::ExistingFile);

  TerrainArgs tr;
  auto* terrain = app.add_subcommand("terrain", "write a synthetic grid terrain");
  terrain->add_option("--kind", tr.kind)
      ->check(CLI::IsMember({"flat", "ridge", "sinusoidal"}))
      ->capture_default_str();
  terrain->add_option("--size", tr.size, "nodes per side")->capture_default_str();
  terrain->add_option("--amplitude", tr.amplitude, "meters")->capture_default_str();
  terrain->add_option("--spacing", tr.spacing, "meters between neighbors")->capture_default_str();
  terrain->add_option("--center-lat", tr.center_lat)->capture_default_str();
  terrain->add_option("--center-lon", tr.center_lon)->capture_default_str();
  terrain->add_option("--wavelength", tr.wavelength, "meters; 0 means the grid span");
  terrain->add_option("--out", tr.out, "graph file")->required();
  terrain->add_option("--dem-out", tr.dem_out, "ESRI ASCII grid of the elevation field");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*build) {
      if (bg.dem.empty() && bg.elev_csv.empty()) {
        err << "error: build-graph needs --dem or --elev-csv\n";
        return kUsage;
      }
      return cmd_build_graph(bg, out, err);
    }
    if (*plan) return cmd_plan(pl, out);
    if (*bench) return cmd_bench(bn, out, err);
    if (*params) return cmd_params(pa, out);
    if (*terrain) return cmd_terrain(tr, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const CoverageError& e) {
    err << "elevation coverage error: " << e.what() << '\n';
    return kCoverage;
  } catch (const NoPathError& e) {
    err << "unreachable: " << e.what() << '\n';
    return kUnreachable;
  } catch (const NegativeCycleError& e) {
    err << "negative cycle: " << e.what() << '\n';
    return kNegativeCycle;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("cart-router");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace cartroute::cli
