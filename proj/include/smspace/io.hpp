#pragma once

#include "smspace/types.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace smspace {

/// All kernel manifolds of one experiment, with the seed and continuation
/// parameters that produced them.
struct ManifoldSet {
  std::uint64_t experiment_seed = 0;
  ContinuationParams params;
  std::vector<KernelManifold> manifolds;
};

// Environments: {"seed": ..., "sources": [[x, y], ...]}. Doubles survive
// the JSON round trip exactly.
std::string environment_to_json(const Environment& env);
Environment environment_from_json(const std::string& text);

void save_manifold_set(const ManifoldSet& set, const std::filesystem::path& path);
ManifoldSet load_manifold_set(const std::filesystem::path& path);

// Distance matrices: compact binary of the upper triangle (header with
// format version and n), and CSV for interoperability. Both round-trip
// bit-exactly.
void save_distance_matrix(const DistanceMatrix& dm, const std::filesystem::path& path);
DistanceMatrix load_distance_matrix(const std::filesystem::path& path);
void save_distance_matrix_csv(const DistanceMatrix& dm, const std::filesystem::path& path);
DistanceMatrix load_distance_matrix_csv(const std::filesystem::path& path);

// Embeddings: plot-ready CSV (id, coord_1..coord_d) and JSON carrying the
// schedule.
void save_embedding_csv(const EmbeddingResult& e, const std::vector<std::int64_t>& ids,
                        const std::filesystem::path& path);
void save_embedding_json(const EmbeddingResult& e, const std::vector<std::int64_t>& ids,
                         const std::filesystem::path& path);
EmbeddingResult load_embedding_csv(const std::filesystem::path& path);

/// FNV-1a over the file bytes, hex encoded. Stage caching and
/// reproducibility checks only; not cryptographic.
std::string file_hash(const std::filesystem::path& path);
std::string bytes_hash(const std::string& bytes);

}  // namespace smspace
