#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "cartroute/geo_graph.hpp"

namespace cartroute {

/// Regular lat/lon elevation grid. Row 0 is the southernmost row; `origin_*`
/// is the center of the south-west cell. The sampling extent reaches half a
/// cell beyond the outer cell centers.
struct ElevationRaster {
  double origin_lat = 0.0;
  double origin_lon = 0.0;
  double cell_size = 1.0;
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  std::vector<double> values;  // row-major, n_rows * n_cols
  double nodata = -9999.0;

  double at(std::size_t row, std::size_t col) const { return values[row * n_cols + col]; }
  bool is_nodata(double v) const { return v == nodata; }

  double min_lat() const { return origin_lat - cell_size / 2.0; }
  double max_lat() const { return origin_lat + (static_cast<double>(n_rows) - 0.5) * cell_size; }
  double min_lon() const { return origin_lon - cell_size / 2.0; }
  double max_lon() const { return origin_lon + (static_cast<double>(n_cols) - 0.5) * cell_size; }
  bool covers(double lat, double lon) const {
    return lat >= min_lat() && lat <= max_lat() && lon >= min_lon() && lon <= max_lon();
  }

  /// Throws InvalidArgument when the shape and values disagree.
  void validate() const;
};

using NodeElevationTable = std::unordered_map<NodeId, double>;
using ElevationSource = std::variant<ElevationRaster, NodeElevationTable>;

/// ESRI ASCII Grid. Header keys are case-insensitive; xll/yll may be given as
/// corner or center; NODATA_value is optional (default -9999).
ElevationRaster parse_ascii_grid(std::string_view text);
ElevationRaster load_ascii_grid(const std::filesystem::path& path);
void write_ascii_grid(std::ostream& out, const ElevationRaster& raster);

/// `node_id,elevation` per line; a non-numeric first line is a header.
NodeElevationTable parse_node_elevation_csv(std::string_view text);
NodeElevationTable load_node_elevation_csv(const std::filesystem::path& path);

/// Picks the grid or CSV reader from the file contents.
ElevationSource load_elevation(const std::filesystem::path& path);

enum class Sampling { kBilinear, kNearest };

struct ElevationSample {
  double meters = 0.0;
  bool used_fallback = false;  // a nodata neighbor forced nearest-valid lookup
};

/// Throws InvalidArgument outside the raster extent or when the raster holds
/// no valid cell at all.
ElevationSample sample_elevation_ex(const ElevationRaster& raster, double lat, double lon,
                                    Sampling mode = Sampling::kBilinear);
inline double sample_elevation(const ElevationRaster& raster, double lat, double lon,
                               Sampling mode = Sampling::kBilinear) {
  return sample_elevation_ex(raster, lat, lon, mode).meters;
}

struct GradeReport {
  std::size_t fallback_samples = 0;
};

/// Sets every node's elevation and every edge's grade angle
/// theta = atan2(elev(to) - elev(from), length).
/// Throws CoverageError listing every node the source does not cover.
GeoGraph assign_grades(GeoGraph graph, const ElevationSource& source,
                       Sampling mode = Sampling::kBilinear, GradeReport* report = nullptr);

}  // namespace cartroute
