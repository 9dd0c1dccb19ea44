#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "nfgmc/estimators.hpp"
#include "nfgmc/samplers.hpp"

namespace nfgmc {

struct ExperimentConfig {
  ModelSpec model;
  Representation rep = Representation::primal;
  EstimatorKind estimator = EstimatorKind::ot;
  std::int64_t samples = 10'000;
  int trials = 30;
  int burn_in = 0;
  std::vector<std::int64_t> checkpoints;  // empty -> geometric schedule up to samples
  std::uint64_t base_seed = 1;
  int jobs = 1;
};

struct TrialResult {
  int trial_index = 0;
  std::uint64_t seed = 0;
  /// Per-site model-level estimates log(Z-hat)/N at each checkpoint.
  EstimateSeries per_site;
};

struct SummaryRow {
  std::int64_t m = 0;
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation over trials
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<std::int64_t> schedule;
  std::vector<TrialResult> trials;
  std::vector<SummaryRow> summary;
};

/// {10, 10^1.5, 10^2, ...} clipped to [1, m], always ending at m.
std::vector<std::int64_t> geometric_schedule(std::int64_t m);

/// Trial t runs with seed base_seed + t and a fresh uniform initial
/// configuration. Trials execute concurrently up to config.jobs; results
/// do not depend on the job count.
ExperimentResult run_experiment(const ExperimentConfig& config);

struct SweepRow {
  std::string model;
  int q = 0;
  int L = 0;
  double beta = 0.0;
  Representation rep = Representation::primal;
  EstimatorKind estimator = EstimatorKind::ot;
  std::int64_t m = 0;
  double mean = 0.0;
  double stddev = 0.0;
  int trials = 0;
};

/// One run_experiment per (beta, representation, estimator); rows carry the
/// final-checkpoint mean/std so the primal-vs-dual crossing is visible.
/// When out_dir is non-empty, raw/summary CSVs are written per run.
std::vector<SweepRow> beta_sweep(const ExperimentConfig& base, const std::vector<double>& betas,
                                 const std::vector<Representation>& reps,
                                 const std::vector<EstimatorKind>& estimators,
                                 const std::filesystem::path& out_dir = {});

std::string kernel_kind_name(KernelKind kind);
std::string representation_name(Representation rep);
std::string estimator_name(EstimatorKind kind);

/// Writes raw_<tag>.csv (one row per trial x checkpoint) and
/// summary_<tag>.csv next to it; byte-identical across repeated runs of the
/// same config. Returns the two paths.
std::pair<std::filesystem::path, std::filesystem::path> emit_csv(
    const ExperimentResult& result, const std::filesystem::path& out_dir);

void emit_sweep_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& out_dir);

}  // namespace nfgmc
