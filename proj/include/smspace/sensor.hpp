#pragma once

#include "smspace/types.hpp"

#include <optional>

namespace smspace {

/// l_count sources drawn i.i.d. uniform over the region.
Environment random_environment(int l_count, const Rect& region, std::uint64_t seed);

/// Retinal coordinate of a point source, or nothing when the source lies
/// outside the field of view. Throws DegenerateGeometryError when the
/// source coincides with the lens.
std::optional<double> project_source(const RetinaPose& pose, const RetinaGeometry& geom,
                                     const Eigen::Vector2d& source);

/// Excitation of every retina cell: Gaussian footprint of each projected
/// source, attenuated by distance to the lens. Out-of-view sources
/// contribute nothing.
SensoryVector retina_response(const RetinaPose& pose, const RetinaGeometry& geom,
                              const Environment& env);

enum class ToyAgentKind {
  kOneMotor,  // rail position x = m1
  kTwoMotor,  // rail position x = m1 + m2
};

/// Rail position of a toy agent for a motor configuration of matching size.
double toy_position(ToyAgentKind kind, Eigen::Ref<const Eigen::VectorXd> m);

/// World positions of the two toy sensors for a rail position x.
std::array<Eigen::Vector2d, 2> toy_sensor_positions(double x);

/// Inverse-square light intensity at the two sensors of a T-shaped agent.
SensoryVector toy_response(ToyAgentKind kind, Eigen::Ref<const Eigen::VectorXd> m,
                           const Environment& env);

}  // namespace smspace
