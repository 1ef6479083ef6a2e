#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "cartroute/geo_graph.hpp"

namespace cartroute {

enum class CostPolicy : std::uint8_t { kWork, kImpedance, kDistance };

inline constexpr std::array<CostPolicy, 3> kAllPolicies = {
    CostPolicy::kWork, CostPolicy::kImpedance, CostPolicy::kDistance};

/// "work" / "impedance" / "distance".
std::string_view to_string(CostPolicy policy);
std::optional<CostPolicy> policy_from_name(std::string_view name);

enum class AngleUnit : std::uint8_t { kDegrees, kRadians };

using RollingTable = std::array<double, kSurfaceCount>;

/// Rolling resistance coefficients indexed by Surface.
inline constexpr RollingTable kDefaultRollingTable = {
    0.008,  // asphalt
    0.010,  // concrete
    0.014,  // paving_stones
    0.020,  // cobblestone
    0.030,  // gravel
    0.040,  // dirt
    0.012,  // unknown
};

struct PhysicalParams {
  double gravity = 9.80665;        // m/s^2
  double air_density = 1.2;        // kg/m^3
  double drag_coefficient = 1.0;
  double frontal_area = 1.0;       // m^2
  double walk_speed = 1.0;         // m/s (3.6 km/h)
  double empty_mass = 110.0;       // kg
  RollingTable rolling = kDefaultRollingTable;
  AngleUnit impedance_angle_unit = AngleUnit::kDegrees;

  double rolling_coefficient(Surface s) const { return rolling[static_cast<std::size_t>(s)]; }

  /// Aerodynamic drag force at walking speed in still air, N.
  double drag_force() const {
    return 0.5 * air_density * drag_coefficient * frontal_area * walk_speed * walk_speed;
  }

  /// Throws InvalidArgument unless every quantity is strictly positive.
  void validate() const;
};

/// Vehicle mass in kg.
struct VehicleState {
  double mass = 110.0;
};

/// Resisting force along the edge, N:
/// m g f_r cos(theta) + m g sin(theta) + 1/2 rho C S v^2.
double traction_force(const GeoEdge& edge, const PhysicalParams& params, const VehicleState& state);

/// Mechanical work to push the vehicle across the edge, J. Negative downhill.
double work_cost(const GeoEdge& edge, const PhysicalParams& params, const VehicleState& state);

/// theta^2 * d uphill, -theta * d otherwise, theta in `unit`.
double impedance_cost(const GeoEdge& edge, AngleUnit unit = AngleUnit::kDegrees);

inline double distance_cost(const GeoEdge& edge) { return edge.length; }

/// Dispatch on policy. Impedance and distance ignore the vehicle state.
double edge_cost(CostPolicy policy, const GeoEdge& edge, const PhysicalParams& params,
                 const VehicleState& state);

}  // namespace cartroute
