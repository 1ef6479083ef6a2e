#include "cartroute/params_io.hpp"

#include <fstream>
#include <string>

#include "cartroute/error.hpp"

namespace cartroute {

namespace {

double number_field(const nlohmann::json& j, const std::string& key) {
  if (!j.is_number()) throw InvalidArgument("params: '" + key + "' must be a number");
  return j.get<double>();
}

}  // namespace

nlohmann::json params_to_json(const PhysicalParams& params) {
  nlohmann::json rolling = nlohmann::json::object();
  for (std::size_t i = 0; i < kSurfaceCount; ++i) {
    rolling[std::string(to_string(static_cast<Surface>(i)))] = params.rolling[i];
  }
  return {
      {"gravity", params.gravity},
      {"air_density", params.air_density},
      {"drag_coefficient", params.drag_coefficient},
      {"frontal_area", params.frontal_area},
      {"walk_speed", params.walk_speed},
      {"empty_mass", params.empty_mass},
      {"impedance_angle_unit",
       params.impedance_angle_unit == AngleUnit::kDegrees ? "degrees" : "radians"},
      {"rolling_resistance", rolling},
  };
}

PhysicalParams params_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidArgument("params: top level must be an object");
  PhysicalParams p;
  for (const auto& [key, value] : j.items()) {
    if (key == "gravity") {
      p.gravity = number_field(value, key);
    } else if (key == "air_density") {
      p.air_density = number_field(value, key);
    } else if (key == "drag_coefficient") {
      p.drag_coefficient = number_field(value, key);
    } else if (key == "frontal_area") {
      p.frontal_area = number_field(value, key);
    } else if (key == "walk_speed") {
      p.walk_speed = number_field(value, key);
    } else if (key == "empty_mass") {
      p.empty_mass = number_field(value, key);
    } else if (key == "impedance_angle_unit") {
      const auto unit = value.is_string() ? value.get<std::string>() : std::string();
      if (unit == "degrees") {
        p.impedance_angle_unit = AngleUnit::kDegrees;
      } else if (unit == "radians") {
        p.impedance_angle_unit = AngleUnit::kRadians;
      } else {
        throw InvalidArgument("params: impedance_angle_unit must be 'degrees' or 'radians'");
      }
    } else if (key == "rolling_resistance") {
      if (!value.is_object()) throw InvalidArgument("params: rolling_resistance must be an object");
      for (const auto& [surface, coeff] : value.items()) {
        const auto s = surface_from_name(surface);
        if (!s) throw InvalidArgument("params: unknown surface '" + surface + "'");
        p.rolling[static_cast<std::size_t>(*s)] = number_field(coeff, surface);
      }
    } else {
      throw InvalidArgument("params: unknown key '" + key + "'");
    }
  }
  p.validate();
  return p;
}

PhysicalParams load_params(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open params file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what(), ParseError::Location::kByteOffset,
                     static_cast<std::uint64_t>(e.byte));
  }
  return params_from_json(j);
}

}  // namespace cartroute
