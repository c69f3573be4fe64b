#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace smspace {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Number of arm joints (three position joints plus the retina joint).
inline constexpr int kArmJoints = 4;

/// Joint angles of the arm agent, radians, each meaningful modulo 2*pi.
using MotorConfig = Eigen::Vector4d;

/// External configuration of the retina: lens position and optical-axis
/// orientation. Ground truth for tests and diagnostics only; the learning
/// pipeline never reads it.
struct RetinaPose {
  double x = 0.0;
  double y = 0.0;
  double alpha = 0.0;  // [0, 2*pi)
};

/// Axis-aligned rectangle of retina positions the exploration is
/// restricted to.
struct WorkingSpace {
  double center_x = 1.75;
  double center_y = 0.0;
  double width = 1.5;   // x extent
  double height = 2.0;  // y extent

  double x_min() const { return center_x - 0.5 * width; }
  double x_max() const { return center_x + 0.5 * width; }
  double y_min() const { return center_y - 0.5 * height; }
  double y_max() const { return center_y + 0.5 * height; }
};

/// Axis-aligned rectangle, used for light-source regions.
struct Rect {
  double x_min = 0.0;
  double x_max = 1.0;
  double y_min = 0.0;
  double y_max = 1.0;

  bool empty() const { return x_max <= x_min || y_max <= y_min; }
};

/// Region the arm-experiment light sources are drawn from. Surrounds the
/// working space so that distinct poses are sensorially distinguishable.
inline Rect default_arm_region() { return Rect{-1.0, 4.0, -3.0, 3.0}; }

/// Band above the toy agents' rail.
inline Rect default_toy_region() { return Rect{-5.0, 5.0, 1.0, 3.0}; }

/// A set of point light sources.
struct Environment {
  std::uint64_t seed = 0;
  std::vector<Eigen::Vector2d> sources;
};

/// Pinhole retina: focal distance, 1-D cell positions on the retina line,
/// and the half-angle of the field of view.
struct RetinaGeometry {
  double focal_distance = 0.2;
  std::vector<double> cell_positions = {-0.5, -0.3, -0.1, 0.1, 0.3, 0.5};
  double fov_halfangle = 1.2;
};

using SensoryVector = Eigen::VectorXd;

/// One kernel manifold: the closed curve of motor configurations sharing a
/// retina pose, resampled to a fixed count. Samples are stored canonically
/// in [0, 2*pi) per joint.
struct KernelManifold {
  Eigen::Matrix<double, Eigen::Dynamic, kArmJoints> samples;
  MotorConfig seed_config = MotorConfig::Zero();
  int raw_count = 0;
};

/// Parameters of the null-space continuation.
struct ContinuationParams {
  double mu = 1e-3;        // step length
  double epsilon = 1e-2;   // loop-closure threshold
  int min_steps = 50;
  int max_steps = 0;       // 0: derived from mu, see default_max_steps()
  bool project_pose = false;  // optional per-step drift correction
};

/// Symmetric pairwise distances between kernel manifolds.
struct DistanceMatrix {
  Eigen::MatrixXd values;
  std::vector<std::int64_t> manifold_ids;

  int n() const { return static_cast<int>(values.rows()); }
};

/// Annealing schedule for the curvilinear projection. Zero radii mean
/// "derive from the distance distribution" (90th / 10th percentile).
struct CcaSchedule {
  int epochs = 50;
  double lambda_start = 0.0;
  double lambda_end = 0.0;
  double rate_start = 0.5;
  double rate_end = 0.01;
  std::uint64_t seed = 0;
};

struct EmbeddingResult {
  Eigen::MatrixXd coords;  // n x d, rows aligned with the DistanceMatrix
  CcaSchedule params;
  double final_stress = 0.0;
};

}  // namespace smspace
