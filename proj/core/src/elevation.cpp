#include "cartroute/elevation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <string>

#include <fmt/format.h>

#include "cartroute/error.hpp"

namespace cartroute {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Blank lines are skipped. With `csv` set, fields are comma separated and
// trimmed; otherwise whitespace separated.
std::vector<Line> tokenize_lines(std::string_view text, bool csv) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    ++number;
    const std::string_view raw = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    if (raw.empty()) continue;

    Line line{number, {}};
    if (csv) {
      std::size_t i = 0;
      while (true) {
        const std::size_t comma = raw.find(',', i);
        line.tokens.push_back(trim(raw.substr(i, comma == std::string_view::npos ? raw.npos : comma - i)));
        if (comma == std::string_view::npos) break;
        i = comma + 1;
      }
    } else {
      std::size_t i = 0;
      while (i < raw.size()) {
        while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
        const std::size_t start = i;
        while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
        if (i > start) line.tokens.push_back(raw.substr(start, i - start));
      }
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

template <typename T>
std::optional<T> to_number(std::string_view tok) {
  T value{};
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

[[noreturn]] void fail(std::string_view what, std::size_t line, const std::string& msg) {
  throw ParseError(fmt::format("{} line {}: {}", what, line, msg), ParseError::Location::kLine,
                   line);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

// Nearest valid cell center by squared index distance; ties by row-major order.
std::optional<double> nearest_valid(const ElevationRaster& r, double frow, double fcol) {
  std::optional<double> best;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < r.n_rows; ++i) {
    for (std::size_t j = 0; j < r.n_cols; ++j) {
      const double v = r.at(i, j);
      if (r.is_nodata(v)) continue;
      const double di = static_cast<double>(i) - frow;
      const double dj = static_cast<double>(j) - fcol;
      const double d = di * di + dj * dj;
      if (d < best_d) {
        best_d = d;
        best = v;
      }
    }
  }
  return best;
}

}  // namespace

void ElevationRaster::validate() const {
  if (n_rows == 0 || n_cols == 0) throw InvalidArgument("raster must have rows and columns");
  if (!(cell_size > 0.0)) throw InvalidArgument("raster cell size must be positive");
  if (values.size() != n_rows * n_cols) {
    throw InvalidArgument(fmt::format("raster expects {} values, has {}", n_rows * n_cols,
                                      values.size()));
  }
}

ElevationRaster parse_ascii_grid(std::string_view text) {
  constexpr std::string_view kWhat = "ASCII grid";
  const auto lines = tokenize_lines(text, false);

  std::map<std::string, double> header;
  std::size_t idx = 0;
  for (; idx < lines.size(); ++idx) {
    const auto& l = lines[idx];
    if (to_number<double>(l.tokens[0])) break;  // first data row
    if (l.tokens.size() != 2) fail(kWhat, l.number, "header lines need 'key value'");
    const auto value = to_number<double>(l.tokens[1]);
    if (!value) fail(kWhat, l.number, fmt::format("bad header value '{}'", l.tokens[1]));
    header[lower(l.tokens[0])] = *value;
  }
  const std::size_t data_line = idx < lines.size() ? lines[idx].number
                                : lines.empty()    ? 1
                                                   : lines.back().number + 1;

  auto require = [&](const char* key) {
    auto it = header.find(key);
    if (it == header.end()) fail(kWhat, data_line, fmt::format("missing header key '{}'", key));
    return it->second;
  };

  ElevationRaster r;
  const double ncols = require("ncols");
  const double nrows = require("nrows");
  if (ncols < 1 || nrows < 1 || ncols != std::floor(ncols) || nrows != std::floor(nrows)) {
    fail(kWhat, data_line, "ncols/nrows must be positive integers");
  }
  r.n_cols = static_cast<std::size_t>(ncols);
  r.n_rows = static_cast<std::size_t>(nrows);
  r.cell_size = require("cellsize");
  if (!(r.cell_size > 0.0)) fail(kWhat, data_line, "cellsize must be positive");

  auto corner_or_center = [&](const char* corner, const char* center) {
    if (auto it = header.find(corner); it != header.end()) return it->second + r.cell_size / 2.0;
    if (auto it = header.find(center); it != header.end()) return it->second;
    fail(kWhat, data_line, fmt::format("missing header key '{}'", corner));
  };
  r.origin_lon = corner_or_center("xllcorner", "xllcenter");
  r.origin_lat = corner_or_center("yllcorner", "yllcenter");
  if (auto it = header.find("nodata_value"); it != header.end()) r.nodata = it->second;

  const std::size_t data_rows = lines.size() - idx;
  if (data_rows != r.n_rows) {
    const std::size_t at = data_rows < r.n_rows ? data_line + data_rows : lines[idx + r.n_rows].number;
    fail(kWhat, at, fmt::format("expected {} data rows, found {}", r.n_rows, data_rows));
  }

  r.values.assign(r.n_rows * r.n_cols, 0.0);
  for (std::size_t k = 0; k < r.n_rows; ++k) {
    const auto& l = lines[idx + k];
    if (l.tokens.size() != r.n_cols) {
      fail(kWhat, l.number, fmt::format("expected {} values, found {}", r.n_cols, l.tokens.size()));
    }
    const std::size_t row = r.n_rows - 1 - k;  // file lists the northern row first
    for (std::size_t c = 0; c < r.n_cols; ++c) {
      const auto v = to_number<double>(l.tokens[c]);
      if (!v) fail(kWhat, l.number, fmt::format("bad value '{}'", l.tokens[c]));
      r.values[row * r.n_cols + c] = *v;
    }
  }
  return r;
}

ElevationRaster load_ascii_grid(const std::filesystem::path& path) {
  return parse_ascii_grid(read_file(path));
}

void write_ascii_grid(std::ostream& out, const ElevationRaster& raster) {
  raster.validate();
  // Center-registered header so the origin survives a round trip bit-for-bit.
  out << fmt::format("ncols {}\nnrows {}\nxllcenter {}\nyllcenter {}\ncellsize {}\nNODATA_value {}\n",
                     raster.n_cols, raster.n_rows, raster.origin_lon, raster.origin_lat,
                     raster.cell_size, raster.nodata);
  for (std::size_t k = 0; k < raster.n_rows; ++k) {
    const std::size_t row = raster.n_rows - 1 - k;
    for (std::size_t c = 0; c < raster.n_cols; ++c) {
      out << (c == 0 ? "" : " ") << fmt::format("{}", raster.at(row, c));
    }
    out << '\n';
  }
}

NodeElevationTable parse_node_elevation_csv(std::string_view text) {
  constexpr std::string_view kWhat = "elevation CSV";
  NodeElevationTable table;
  const auto lines = tokenize_lines(text, true);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() != 2) fail(kWhat, l.number, "expected 'node_id,elevation'");
    const auto id = to_number<NodeId>(l.tokens[0]);
    const auto elev = to_number<double>(l.tokens[1]);
    if (!id || !elev) {
      if (i == 0 && !id) continue;  // header
      fail(kWhat, l.number, "expected 'node_id,elevation'");
    }
    if (!std::isfinite(*elev)) fail(kWhat, l.number, "elevation must be finite");
    if (!table.emplace(*id, *elev).second) {
      fail(kWhat, l.number, fmt::format("duplicate node id {}", *id));
    }
  }
  return table;
}

NodeElevationTable load_node_elevation_csv(const std::filesystem::path& path) {
  return parse_node_elevation_csv(read_file(path));
}

ElevationSource load_elevation(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && lower(std::string_view(text).substr(first, 5)) == "ncols") {
    return parse_ascii_grid(text);
  }
  return parse_node_elevation_csv(text);
}

ElevationSample sample_elevation_ex(const ElevationRaster& r, double lat, double lon,
                                    Sampling mode) {
  if (!r.covers(lat, lon)) {
    throw InvalidArgument(fmt::format("({}, {}) lies outside the raster extent", lat, lon));
  }
  const double max_row = static_cast<double>(r.n_rows - 1);
  const double max_col = static_cast<double>(r.n_cols - 1);
  const double frow = std::clamp((lat - r.origin_lat) / r.cell_size, 0.0, max_row);
  const double fcol = std::clamp((lon - r.origin_lon) / r.cell_size, 0.0, max_col);

  auto fallback = [&]() {
    const auto v = nearest_valid(r, frow, fcol);
    if (!v) throw InvalidArgument("raster holds no valid elevation");
    return ElevationSample{*v, true};
  };

  if (mode == Sampling::kNearest) {
    const double v = r.at(static_cast<std::size_t>(std::lround(frow)),
                          static_cast<std::size_t>(std::lround(fcol)));
    if (r.is_nodata(v)) return fallback();
    return {v, false};
  }

  const auto r0 = static_cast<std::size_t>(std::floor(frow));
  const auto c0 = static_cast<std::size_t>(std::floor(fcol));
  const double t = frow - static_cast<double>(r0);
  const double u = fcol - static_cast<double>(c0);
  const std::size_t r1 = t > 0.0 ? r0 + 1 : r0;
  const std::size_t c1 = u > 0.0 ? c0 + 1 : c0;

  struct Corner {
    std::size_t row, col;
    double weight;
  };
  const Corner corners[4] = {{r0, c0, (1.0 - t) * (1.0 - u)},
                             {r0, c1, (1.0 - t) * u},
                             {r1, c0, t * (1.0 - u)},
                             {r1, c1, t * u}};

  double sum = 0.0;
  bool hole = false;
  for (const auto& k : corners) {
    if (k.weight == 0.0) continue;
    const double v = r.at(k.row, k.col);
    if (r.is_nodata(v)) {
      hole = true;
      break;
    }
    sum += k.weight * v;
  }
  if (!hole) return {sum, false};

  // Nearest valid among the surrounding centers, then anywhere in the grid.
  std::optional<double> best;
  double best_d = std::numeric_limits<double>::infinity();
  for (const auto& k : corners) {
    const double v = r.at(k.row, k.col);
    if (r.is_nodata(v)) continue;
    const double dr = static_cast<double>(k.row) - frow;
    const double dc = static_cast<double>(k.col) - fcol;
    if (dr * dr + dc * dc < best_d) {
      best_d = dr * dr + dc * dc;
      best = v;
    }
  }
  if (best) return {*best, true};
  return fallback();
}

GeoGraph assign_grades(GeoGraph graph, const ElevationSource& source, Sampling mode,
                       GradeReport* report) {
  GradeReport local;
  std::vector<NodeId> missing;
  std::vector<double> elev(graph.node_count(), 0.0);

  for (GeoGraph::Index i = 0; i < graph.node_count(); ++i) {
    const GeoNode& n = graph.node(i);
    if (const auto* raster = std::get_if<ElevationRaster>(&source)) {
      if (!raster->covers(n.lat, n.lon)) {
        missing.push_back(n.id);
        continue;
      }
      const auto s = sample_elevation_ex(*raster, n.lat, n.lon, mode);
      if (s.used_fallback) ++local.fallback_samples;
      elev[i] = s.meters;
    } else {
      const auto& table = std::get<NodeElevationTable>(source);
      const auto it = table.find(n.id);
      if (it == table.end()) {
        missing.push_back(n.id);
        continue;
      }
      elev[i] = it->second;
    }
  }

  if (!missing.empty()) {
    std::string ids;
    for (std::size_t k = 0; k < missing.size(); ++k) {
      if (k == 8) {
        ids += fmt::format(", ... ({} total)", missing.size());
        break;
      }
      ids += (k == 0 ? "" : ", ") + std::to_string(missing[k]);
    }
    throw CoverageError("elevation data does not cover nodes: " + ids, std::move(missing));
  }

  for (GeoGraph::Index i = 0; i < graph.node_count(); ++i) graph.set_elevation(i, elev[i]);
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const double dh = elev[graph.target_index(e)] - elev[graph.source_index(e)];
    graph.set_theta(e, std::atan2(dh, graph.edge(e).length));
  }

  if (report != nullptr) *report = local;
  return graph;
}

}  // namespace cartroute
