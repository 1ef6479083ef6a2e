#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include <nlohmann/json.hpp>

#include "cartroute/elevation.hpp"
#include "cartroute/geo_graph.hpp"

namespace cartroute {

struct ScenarioConfig {
  double mean_lat = -19.9202;  // Belo Horizonte study area
  double mean_lon = -43.9438;
  double stddev = 0.005;       // degrees, per axis
  int n_points = 8;
  double max_mass_increment = 50.0;  // kg
  double initial_mass = 110.0;       // kg
  std::vector<std::uint64_t> seeds = default_seeds();

  static std::vector<std::uint64_t> default_seeds();  // 0..29

  /// Throws InvalidArgument on stddev <= 0, n_points < 1, etc.
  void validate() const;
};

// JSON keys mirror the field names; absent keys keep their defaults.
nlohmann::json scenario_to_json(const ScenarioConfig& config);
ScenarioConfig scenario_from_json(const nlohmann::json& j);
ScenarioConfig load_scenario(const std::filesystem::path& path);

/// start, n_points collection points, depot. Coordinates are i.i.d.
/// Normal(mean, stddev) per axis; masses Uniform(0, max]. Draw order per
/// waypoint: lat, lon, then mass for collection points. Generator: SplitMix64
/// seeded with `seed`, normals by the polar method.
std::vector<Waypoint> generate_scenario(const ScenarioConfig& config, std::uint64_t seed);

enum class TerrainKind { kFlat, kRidge, kSinusoidal };

struct TerrainOptions {
  double spacing_m = 100.0;  // nominal north-south edge length
  double center_lat = -19.9202;
  double center_lon = -43.9438;
  /// Sinusoid wavelength; <= 0 means one full period across the grid span.
  /// Much shorter wavelengths produce grades steep enough for the work model
  /// to form negative cycles.
  double wavelength_m = 0.0;
  Surface surface = Surface::kAsphalt;
  double maxspeed_kmh = 30.0;
};

struct SyntheticTerrain {
  GeoGraph graph;  // grades assigned from `raster`
  ElevationRaster raster;
};

/// size x size street grid, every street two-way. Grid steps are equal in
/// degrees, so east-west edges shrink by cos(latitude). Elevation fields,
/// with x east and y north in nominal meters and L the grid span:
///   flat        0
///   ridge       A * (1 - |2x/L - 1|), a north-south crest down the middle
///   sinusoidal  A * sin(2 pi x / wavelength) * sin(2 pi y / wavelength)
/// The raster's cell centers coincide with the nodes.
SyntheticTerrain generate_synthetic_terrain(TerrainKind kind, int size, double amplitude_m,
                                            const TerrainOptions& options = {});

}  // namespace cartroute
