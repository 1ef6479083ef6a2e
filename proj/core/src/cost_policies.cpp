#include "cartroute/cost_policies.hpp"

#include <cmath>
#include <numbers>

#include "cartroute/error.hpp"

namespace cartroute {

std::string_view to_string(CostPolicy policy) {
  switch (policy) {
    case CostPolicy::kWork:
      return "work";
    case CostPolicy::kImpedance:
      return "impedance";
    case CostPolicy::kDistance:
      return "distance";
  }
  return "?";
}

std::optional<CostPolicy> policy_from_name(std::string_view name) {
  for (auto p : kAllPolicies) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

void PhysicalParams::validate() const {
  auto positive = [](double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw InvalidArgument(std::string(what) + " must be strictly positive");
    }
  };
  positive(gravity, "gravity");
  positive(air_density, "air_density");
  positive(drag_coefficient, "drag_coefficient");
  positive(frontal_area, "frontal_area");
  positive(walk_speed, "walk_speed");
  positive(empty_mass, "empty_mass");
  for (std::size_t i = 0; i < kSurfaceCount; ++i) {
    positive(rolling[i], "rolling resistance coefficient");
  }
}

double traction_force(const GeoEdge& edge, const PhysicalParams& params,
                      const VehicleState& state) {
  const double weight = state.mass * params.gravity;
  const double f_r = params.rolling_coefficient(edge.surface);
  return weight * f_r * std::cos(edge.theta) + weight * std::sin(edge.theta) +
         params.drag_force();
}

double work_cost(const GeoEdge& edge, const PhysicalParams& params, const VehicleState& state) {
  return traction_force(edge, params, state) * edge.length;
}

double impedance_cost(const GeoEdge& edge, AngleUnit unit) {
  const double angle =
      unit == AngleUnit::kDegrees ? edge.theta * (180.0 / std::numbers::pi) : edge.theta;
  if (angle > 0.0) return angle * angle * edge.length;
  return angle < 0.0 ? -angle * edge.length : 0.0;
}

double edge_cost(CostPolicy policy, const GeoEdge& edge, const PhysicalParams& params,
                 const VehicleState& state) {
  switch (policy) {
    case CostPolicy::kWork:
      return work_cost(edge, params, state);
    case CostPolicy::kImpedance:
      return impedance_cost(edge, params.impedance_angle_unit);
    case CostPolicy::kDistance:
      return distance_cost(edge);
  }
  return distance_cost(edge);
}

}  // namespace cartroute
