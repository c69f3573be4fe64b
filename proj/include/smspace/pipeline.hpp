#pragma once

#include "smspace/analysis.hpp"
#include "smspace/io.hpp"
#include "smspace/types.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace smspace {

/// One experiment: exploration, metric, embedding, analysis, toys.
/// Every stage seed derives from master_seed, so a config fixes every
/// artifact byte for byte (embedding included, via its derived seed).
struct ExperimentConfig {
  std::uint64_t master_seed = 1;
  int configuration_count = 2500;  // M
  int resample_count = 100;
  WorkingSpace workspace;
  ContinuationParams continuation;

  int environment_count = 3;
  int light_count = 10;
  Rect environment_region = default_arm_region();
  RetinaGeometry retina;

  int embedding_dim = 3;
  CcaSchedule embedding;

  int workers = 0;  // 0 = hardware concurrency
  int trace_retry_budget = 5;

  // Probe families for the topology diagnostics.
  int alpha_sweep_steps = 12;
  int grid_per_side = 6;

  // Toy experiments.
  int toy_light_count = 5;
  int toy_level_sets = 8;

  // Acceptance thresholds for the analysis verdicts.
  double min_external_correlation = 0.8;
  double max_closure_ratio = 2.0;
  double max_grid_residual = 0.10;
  double min_neighborhood_preservation = 0.6;
  int neighborhood_k = 10;
};

ExperimentConfig config_from_json(const std::string& text);
std::string config_to_json(const ExperimentConfig& cfg);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Derived per-stage seeds (documented, stable): derive_seed(master, label, index).
std::uint64_t environment_seed(const ExperimentConfig& cfg, int index);
std::uint64_t exploration_seed(const ExperimentConfig& cfg);
std::uint64_t embedding_seed(const ExperimentConfig& cfg);

struct StageStatus {
  bool skipped = false;      // stage cache hit
  std::string output;        // artifact path
  double seconds = 0.0;
};

/// Pipeline runner: owns the output directory, the manifest and the stage
/// cache. Artifact layout:
///   manifest.json, config.json, manifolds.json, distances.bin,
///   distances.csv, embedding.csv, embedding.json, invariance_report.json,
///   topology_report.json, toy_report.json
class Pipeline {
 public:
  Pipeline(ExperimentConfig cfg, std::filesystem::path out_dir, bool use_cache = true);

  StageStatus run_exploration();
  StageStatus run_metric();
  StageStatus run_embedding();
  /// Returns failure via analysis_passed() so the caller picks the exit code.
  StageStatus run_analysis();
  StageStatus run_toy();

  bool analysis_passed() const { return analysis_passed_; }
  const ExperimentConfig& config() const { return cfg_; }
  const std::filesystem::path& out_dir() const { return out_dir_; }

  /// Accepted/rejected draw counts of the last exploration run.
  struct ExplorationStats {
    std::int64_t accepted = 0;
    std::int64_t rejected_workspace = 0;
    std::int64_t rejected_singular = 0;
    std::int64_t retried_traces = 0;
  };
  const ExplorationStats& exploration_stats() const { return exploration_stats_; }

 private:
  std::string stage_key(const std::string& stage, const std::vector<std::string>& upstream) const;
  bool cache_hit(const std::string& stage, const std::string& key,
                 const std::filesystem::path& artifact) const;
  void record_stage(const std::string& stage, const std::string& key,
                    const std::filesystem::path& artifact);
  void write_manifest() const;

  ExperimentConfig cfg_;
  std::filesystem::path out_dir_;
  bool use_cache_ = true;
  bool analysis_passed_ = true;
  ExplorationStats exploration_stats_;
};

/// Exit codes shared by the CLI and the pipeline helpers.
enum ExitCode : int {
  kExitOk = 0,
  kExitAnalysisFailed = 1,
  kExitUsage = 2,
  kExitNumerical = 3,
};

}  // namespace smspace
