#include "cartroute/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>

#include "cartroute/error.hpp"
#include "cartroute/rng.hpp"

namespace cartroute {

std::vector<std::uint64_t> ScenarioConfig::default_seeds() {
  std::vector<std::uint64_t> seeds(30);
  std::iota(seeds.begin(), seeds.end(), std::uint64_t{0});
  return seeds;
}

void ScenarioConfig::validate() const {
  if (!(stddev > 0.0) || !std::isfinite(stddev)) throw InvalidArgument("stddev must be > 0");
  if (n_points < 1) throw InvalidArgument("n_points must be >= 1");
  if (!(max_mass_increment > 0.0)) throw InvalidArgument("max_mass_increment must be > 0");
  if (!(initial_mass > 0.0)) throw InvalidArgument("initial_mass must be > 0");
  if (!(mean_lat >= -90.0 && mean_lat <= 90.0) || !(mean_lon >= -180.0 && mean_lon <= 180.0)) {
    throw InvalidArgument("scenario mean lies outside WGS84 bounds");
  }
}

nlohmann::json scenario_to_json(const ScenarioConfig& c) {
  return {{"mean_lat", c.mean_lat},
          {"mean_lon", c.mean_lon},
          {"stddev", c.stddev},
          {"n_points", c.n_points},
          {"max_mass_increment", c.max_mass_increment},
          {"initial_mass", c.initial_mass},
          {"seeds", c.seeds}};
}

ScenarioConfig scenario_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidArgument("scenario: top level must be an object");
  ScenarioConfig c;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "mean_lat") {
        c.mean_lat = value.get<double>();
      } else if (key == "mean_lon") {
        c.mean_lon = value.get<double>();
      } else if (key == "stddev") {
        c.stddev = value.get<double>();
      } else if (key == "n_points") {
        c.n_points = value.get<int>();
      } else if (key == "max_mass_increment") {
        c.max_mass_increment = value.get<double>();
      } else if (key == "initial_mass") {
        c.initial_mass = value.get<double>();
      } else if (key == "seeds") {
        c.seeds = value.get<std::vector<std::uint64_t>>();
      } else {
        throw InvalidArgument("scenario: unknown key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::type_error& e) {
    throw InvalidArgument(std::string("scenario: ") + e.what());
  }
  c.validate();
  return c;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open scenario file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what(), ParseError::Location::kByteOffset,
                     static_cast<std::uint64_t>(e.byte));
  }
  return scenario_from_json(j);
}

std::vector<Waypoint> generate_scenario(const ScenarioConfig& config, std::uint64_t seed) {
  config.validate();
  SplitMix64 rng(seed);
  PolarNormal normal;

  std::vector<Waypoint> out;
  out.reserve(static_cast<std::size_t>(config.n_points) + 2);
  auto draw = [&](WaypointKind kind) {
    Waypoint wp;
    wp.kind = kind;
    wp.lat = std::clamp(config.mean_lat + config.stddev * normal(rng), -90.0, 90.0);
    wp.lon = std::clamp(config.mean_lon + config.stddev * normal(rng), -180.0, 180.0);
    if (kind == WaypointKind::kCollection) {
      wp.mass_increment = config.max_mass_increment * (1.0 - rng.uniform01());
    }
    out.push_back(wp);
  };

  draw(WaypointKind::kStart);
  for (int i = 0; i < config.n_points; ++i) draw(WaypointKind::kCollection);
  draw(WaypointKind::kDepot);
  return out;
}

SyntheticTerrain generate_synthetic_terrain(TerrainKind kind, int size, double amplitude_m,
                                            const TerrainOptions& options) {
  if (size < 2) throw InvalidArgument("terrain size must be >= 2");
  if (!(options.spacing_m > 0.0)) throw InvalidArgument("terrain spacing must be > 0");

  const auto n = static_cast<std::size_t>(size);
  const double span = options.spacing_m * static_cast<double>(size - 1);
  const double step_deg = options.spacing_m / kEarthRadiusM * (180.0 / std::numbers::pi);
  const double half = step_deg * static_cast<double>(size - 1) / 2.0;
  const double lat0 = options.center_lat - half;
  const double lon0 = options.center_lon - half;
  const double wavelength = options.wavelength_m > 0.0 ? options.wavelength_m : span;

  auto field = [&](double x, double y) {
    switch (kind) {
      case TerrainKind::kFlat:
        return 0.0;
      case TerrainKind::kRidge:
        return amplitude_m * (1.0 - std::abs(2.0 * x / span - 1.0));
      case TerrainKind::kSinusoidal:
        return amplitude_m * std::sin(2.0 * std::numbers::pi * x / wavelength) *
               std::sin(2.0 * std::numbers::pi * y / wavelength);
    }
    return 0.0;
  };

  SyntheticTerrain t;
  t.raster.origin_lat = lat0;
  t.raster.origin_lon = lon0;
  t.raster.cell_size = step_deg;
  t.raster.n_rows = n;
  t.raster.n_cols = n;
  t.raster.values.resize(n * n);

  GeoGraph grid;
  auto id_of = [&](std::size_t row, std::size_t col) {
    return static_cast<NodeId>(row * n + col + 1);
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double x = options.spacing_m * static_cast<double>(j);
      const double y = options.spacing_m * static_cast<double>(i);
      t.raster.values[i * n + j] = field(x, y);
      grid.add_node(GeoNode{id_of(i, j), lat0 + step_deg * static_cast<double>(i),
                            lon0 + step_deg * static_cast<double>(j), std::nullopt});
    }
  }

  auto link = [&](std::size_t r1, std::size_t c1, std::size_t r2, std::size_t c2) {
    const GeoNode& a = grid.node(grid.index_of(id_of(r1, c1)));
    const GeoNode& b = grid.node(grid.index_of(id_of(r2, c2)));
    const double length = haversine_m(a.lat, a.lon, b.lat, b.lon);
    grid.add_edge({a.id, b.id, length, 0.0, options.surface, options.maxspeed_kmh, false});
    grid.add_edge({b.id, a.id, length, 0.0, options.surface, options.maxspeed_kmh, false});
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j + 1 < n) link(i, j, i, j + 1);
      if (i + 1 < n) link(i, j, i + 1, j);
    }
  }

  t.graph = assign_grades(std::move(grid), t.raster);
  return t;
}

}  // namespace cartroute
