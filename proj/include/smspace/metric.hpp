#pragma once

#include "smspace/types.hpp"

namespace smspace {

/// Wrapped angle difference. Input is a raw difference of angles in
/// [0, 2*pi), so it lies in (-2*pi, 2*pi); the result lies in [-pi, pi].
double wrap_diff(double u);

/// Torus distance between motor configurations: per-joint wrapped
/// differences under the Euclidean norm. Bounded by pi * sqrt(N).
double motor_distance(Eigen::Ref<const Eigen::VectorXd> a, Eigen::Ref<const Eigen::VectorXd> b);

/// Greatest shortest torus distance between the two sampled manifolds
/// (max of both directed max-min sweeps).
double hausdorff(const KernelManifold& a, const KernelManifold& b);

/// All pairwise manifold distances. Work is tiled over the upper triangle
/// and dispatched to `workers` threads (0 = hardware concurrency); the
/// result does not depend on the worker count.
DistanceMatrix distance_matrix(const std::vector<KernelManifold>& manifolds, int workers = 0);

}  // namespace smspace
