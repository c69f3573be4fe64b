#pragma once

#include "smspace/metric.hpp"
#include "smspace/sensor.hpp"
#include "smspace/types.hpp"

#include <string>
#include <vector>

namespace smspace {

/// Sensory spread of each manifold in each environment, against the
/// tolerance tau derived from the sensory dynamic range.
struct InvarianceReport {
  // spreads[i][e]: max over samples of the inf-norm response difference
  // to the manifold seed, manifold i in environment e.
  std::vector<std::vector<double>> spreads;
  std::vector<double> tau_sense;           // per environment
  std::vector<double> mean_between;        // mean pairwise seed response distance
  double max_spread = 0.0;                 // across manifolds and environments
  bool spreads_ok = false;                 // all spreads <= tau
  bool richness_ok = false;                // mean_between >= 10 * tau
  bool pass = false;
};

/// tau factor: fraction of the per-environment sensory dynamic range that
/// within-manifold spreads must stay under.
inline constexpr double kTauSenseFraction = 1e-2;

InvarianceReport check_environment_invariance(const std::vector<KernelManifold>& manifolds,
                                              const std::vector<Environment>& environments,
                                              const RetinaGeometry& geom);

/// Closure scores of a probe family laid out in sweep order in the
/// distance matrix.
struct LoopScores {
  std::vector<double> consecutive;  // dm(i, i+1)
  double closing = 0.0;             // dm(last, first)
  double median_consecutive = 0.0;
  double closure_ratio = 0.0;       // closing / median_consecutive
};

/// Verify an alpha sweep at fixed position forms a closed curve under the
/// internal metric. The poses are the ground-truth probe poses; throws
/// std::invalid_argument when they are not a fixed-position alpha sweep.
LoopScores alpha_loop_diagnostic(const DistanceMatrix& dm, const std::vector<RetinaPose>& poses);

/// Spearman rank correlation between internal manifold distances and
/// external pose distances over all pairs. NaN when the external distances
/// are all equal (diagnostic not applicable).
double external_correlation(const DistanceMatrix& dm, const std::vector<RetinaPose>& poses);

/// Probe helpers: deterministic families generated through inverse
/// kinematics.
std::vector<RetinaPose> alpha_sweep_poses(double x, double y, int steps, double alpha_span = kTwoPi);
std::vector<RetinaPose> fixed_alpha_grid_poses(const WorkingSpace& ws, double alpha, int per_side);

/// --- Toy agents ------------------------------------------------------

/// One extracted level set of the two-motor toy agent: motor configurations
/// sharing one sensory input, traced from a seed using only sensor
/// evaluations (finite-difference kernel direction).
struct ToyLevelSet {
  Eigen::Matrix<double, Eigen::Dynamic, 2> points;
  Eigen::Vector2d seed = Eigen::Vector2d::Zero();
  double position = 0.0;            // rail position of the seed (ground truth)
  double max_sum_deviation = 0.0;   // max |(m1+m2) - (m1+m2)_seed|
  double line_fit_residual = 0.0;   // RMS orthogonal residual of the line fit
};

ToyLevelSet extract_toy_level_set(const Environment& env, const Eigen::Vector2d& seed,
                                  int steps_per_side = 400, double step = 5e-3);

/// Distance between two level sets under the unbounded-line model: each
/// set is replaced by its total-least-squares line, and the score is the
/// larger of the two max point-to-line distances.
double toy_set_distance(const ToyLevelSet& a, const ToyLevelSet& b);

struct ToyAgent1Report {
  std::vector<double> motor_samples;
  std::vector<Eigen::Matrix<double, Eigen::Dynamic, 2>> sensory_curves;  // one per environment
  double mean_discrepancy = 0.0;  // mean response gap between the first two environments
};

struct ToyAgent2Report {
  std::vector<ToyLevelSet> sets;
  Eigen::MatrixXd pairwise;        // line-model set distances
  Eigen::MatrixXd oracle;          // |dx| / sqrt(2) from ground-truth positions
  double max_sum_deviation = 0.0;
  double max_relative_error = 0.0;  // pairwise vs oracle
};

ToyAgent1Report toy_agent1_experiment(const std::vector<Environment>& environments,
                                      const std::vector<double>& motor_samples);

ToyAgent2Report toy_agent2_experiment(const Environment& env,
                                      const std::vector<Eigen::Vector2d>& seeds);

}  // namespace smspace
