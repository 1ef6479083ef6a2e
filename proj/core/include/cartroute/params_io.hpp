#pragma once

#include <filesystem>

#include <nlohmann/json.hpp>

#include "cartroute/cost_policies.hpp"

namespace cartroute {

// JSON layout:
// {
//   "gravity": 9.80665, "air_density": 1.2, "drag_coefficient": 1.0,
//   "frontal_area": 1.0, "walk_speed": 1.0, "empty_mass": 110.0,
//   "impedance_angle_unit": "degrees",
//   "rolling_resistance": {"asphalt": 0.008, ..., "unknown": 0.012}
// }
// Every key is optional on input; absent keys keep their defaults.

nlohmann::json params_to_json(const PhysicalParams& params);

/// Throws InvalidArgument on unknown keys, wrong types or non-positive values.
PhysicalParams params_from_json(const nlohmann::json& j);
PhysicalParams load_params(const std::filesystem::path& path);

}  // namespace cartroute
