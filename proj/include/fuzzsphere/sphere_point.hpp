#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Core>

namespace fuzzsphere {

/// Polar coordinates on the sphere. phi lives in [0, 2pi) for integer-spin
/// contexts and in [0, 4pi) on the doubled sphere used for half-integer spins.
struct SpherePoint {
  double theta = 0.0;
  double phi = 0.0;

  Eigen::Vector3d cartesian() const {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
  }

  /// Point with the given direction; phi is reported in [0, 2pi).
  static SpherePoint from_cartesian(const Eigen::Vector3d& v) {
    const double r = v.norm();
    const double z = std::clamp(v.z() / r, -1.0, 1.0);
    double phi = std::atan2(v.y(), v.x());
    if (phi < 0.0) phi += 2.0 * std::numbers::pi;
    return {std::acos(z), phi};
  }
};

/// phi period for a representation of twice-spin two_j.
inline double phi_period_for(int two_j) { return (two_j % 2 == 0) ? 2.0 * std::numbers::pi : 4.0 * std::numbers::pi; }

}  // namespace fuzzsphere
