#pragma once

#include "smspace/types.hpp"

#include <vector>

namespace smspace {

/// Unit vector spanning the Jacobian kernel at m, via SVD. The sign is
/// fixed by making the first coordinate larger than 1e-6 in magnitude
/// positive. Throws SingularityError when the kernel is not 1-D.
Eigen::Vector4d null_direction(const MotorConfig& m);

/// Step budget for one loop: ten times the expected loop length 2*pi*sqrt(N)
/// divided by the step size.
int default_max_steps(const ContinuationParams& params);

/// Euler continuation along the Jacobian kernel from m0 until the trace
/// returns to within params.epsilon of its start (wrapped norm) after at
/// least params.min_steps steps. Returns the raw ordered samples,
/// starting at m0, in the unreduced motor chart.
std::vector<MotorConfig> trace_kernel(const MotorConfig& m0, const ContinuationParams& params);

/// Resample a closed raw trace to `count` points at equal wrapped
/// arc-length spacing (piecewise linear, sample 0 = raw[0]).
/// Output samples are canonicalized to [0, 2*pi) per joint.
KernelManifold resample_loop(const std::vector<MotorConfig>& raw, int count = 100);

/// trace_kernel followed by resample_loop.
KernelManifold sample_manifold(const MotorConfig& m0, const ContinuationParams& params,
                               int count = 100);

}  // namespace smspace
