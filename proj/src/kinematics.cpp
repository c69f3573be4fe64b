#include "smspace/kinematics.hpp"

#include "smspace/metric.hpp"

#include <cmath>
#include <stdexcept>

namespace smspace {

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;  // fmod result of -eps can round up to 2*pi
  return a;
}

RetinaPose forward_kinematics(const MotorConfig& m) {
  const double t1 = m[0];
  const double t12 = m[0] + m[1];
  const double t123 = m[0] + m[1] + m[2];
  RetinaPose pose;
  pose.x = std::cos(t1) + std::cos(t12) + std::cos(t123);
  pose.y = std::sin(t1) + std::sin(t12) + std::sin(t123);
  pose.alpha = wrap_angle(t123 + m[3]);
  return pose;
}

Eigen::Matrix<double, 3, kArmJoints> jacobian(const MotorConfig& m) {
  const double s1 = std::sin(m[0]);
  const double s12 = std::sin(m[0] + m[1]);
  const double s123 = std::sin(m[0] + m[1] + m[2]);
  const double c1 = std::cos(m[0]);
  const double c12 = std::cos(m[0] + m[1]);
  const double c123 = std::cos(m[0] + m[1] + m[2]);

  Eigen::Matrix<double, 3, kArmJoints> j;
  j << 1.0, 1.0, 1.0, 1.0,
      -s1 - s12 - s123, -s12 - s123, -s123, 0.0,
      c1 + c12 + c123, c12 + c123, c123, 0.0;
  return j;
}

bool in_working_space(const RetinaPose& pose, const WorkingSpace& ws) {
  return pose.x >= ws.x_min() && pose.x <= ws.x_max() &&
         pose.y >= ws.y_min() && pose.y <= ws.y_max();
}

double pose_distance(const RetinaPose& a, const RetinaPose& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  const double da = wrap_diff(wrap_angle(a.alpha) - wrap_angle(b.alpha));
  return std::sqrt(dx * dx + dy * dy + da * da);
}

MotorConfig inverse_kinematics(double x, double y, double alpha) {
  const double r = std::hypot(x, y);
  if (!(r > 1.0 && r < 3.0)) {
    throw std::domain_error("inverse_kinematics: base distance outside (1, 3)");
  }
  // Third segment radial: the wrist lands at distance r - 1 from the base.
  const double phi = std::atan2(y, x);
  const double wx = x - std::cos(phi);
  const double wy = y - std::sin(phi);
  const double w2 = wx * wx + wy * wy;  // = (r - 1)^2, in (0, 4)

  // Two unit segments reaching the wrist, elbow-up branch.
  const double c2 = std::min(1.0, std::max(-1.0, 0.5 * (w2 - 2.0)));
  const double m2 = std::acos(c2);
  const double m1 = std::atan2(wy, wx) - std::atan2(std::sin(m2), 1.0 + std::cos(m2));
  const double m3 = phi - m1 - m2;

  MotorConfig m;
  m[0] = wrap_angle(m1);
  m[1] = wrap_angle(m2);
  m[2] = wrap_angle(m3);
  m[3] = wrap_angle(alpha - phi);
  return m;
}

}  // namespace smspace
