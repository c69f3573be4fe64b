#pragma once

#include "smspace/types.hpp"

namespace smspace {

/// Classical scaling: double-centered Gram matrix, top-d eigenpairs.
EmbeddingResult classical_mds(const DistanceMatrix& x, int d);

/// Eigenvalue spectrum of the double-centered Gram matrix, descending.
/// Residual mass beyond the leading components measures curvature of the
/// configuration.
Eigen::VectorXd mds_spectrum(const DistanceMatrix& x);

/// Fill the zero fields of a schedule from the distance distribution:
/// lambda annealed from the 90th to the 10th percentile of off-diagonal
/// distances.
CcaSchedule resolve_cca_schedule(const DistanceMatrix& x, CcaSchedule schedule);

/// Curvilinear component analysis. Stochastic descent over point pairs:
/// each epoch visits every point in seeded random order and moves all
/// other points radially so their output distance approaches the input
/// distance, but only within the annealed neighborhood radius.
/// Deterministic given schedule.seed. Initialized from classical scaling
/// plus 1% noise.
EmbeddingResult cca(const DistanceMatrix& x, int d, const CcaSchedule& schedule);

/// Mean fraction of the k nearest neighbors (input metric) recovered among
/// the k nearest neighbors in the embedding. 1 = all neighborhoods intact,
/// k/(n-1) = chance. Ties break by index.
double neighborhood_preservation(const DistanceMatrix& x, const EmbeddingResult& e, int k);

}  // namespace smspace
