#pragma once

#include "smspace/types.hpp"

namespace smspace {

/// Reduce an angle to [0, 2*pi).
double wrap_angle(double a);

/// Pose of the retina for joint angles m: the lens sits at the tip of the
/// three unit segments, the optical axis at the accumulated joint angle.
RetinaPose forward_kinematics(const MotorConfig& m);

/// 3x4 Jacobian with rows (d alpha/dm, d x/dm, d y/dm).
Eigen::Matrix<double, 3, kArmJoints> jacobian(const MotorConfig& m);

/// Closed-rectangle membership of the retina position; alpha is free.
bool in_working_space(const RetinaPose& pose, const WorkingSpace& ws);

/// Distance between poses: Euclidean over (x, y) plus the wrapped angle
/// gap. Used for drift diagnostics and the external-distance baseline.
double pose_distance(const RetinaPose& a, const RetinaPose& b);

/// One deterministic arm configuration reaching the given pose:
/// third segment pointed radially away from the base, elbow-up branch of
/// the remaining two-segment chain, joint 4 absorbing the residual angle.
/// Requires base distance strictly inside (1, 3).
MotorConfig inverse_kinematics(double x, double y, double alpha);

}  // namespace smspace
