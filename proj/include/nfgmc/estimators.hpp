#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "nfgmc/logsum.hpp"
#include "nfgmc/nfg_model.hpp"

namespace nfgmc {

enum class EstimatorKind { ot, uniform };

/// Harmonic-mean estimate in log domain:
///   log |X| + log M - logsumexp(-log f values).
/// Safe for |log f| up to a few thousand.
double ot_log_estimate(double log_support_size, std::span<const double> log_f_values);

/// Sample-mean estimate in log domain:
///   log |X| - log M + logsumexp(log f values).
double uniform_log_estimate(double log_support_size, std::span<const double> log_f_values);

/// Map a representation-level log estimate onto the model's log Z:
/// identity for primal, + N log q for dual.
double to_model_log_z(double estimate, Representation rep, const ModelSpec& spec);

struct EstimateSeries {
  Representation rep = Representation::primal;
  EstimatorKind kind = EstimatorKind::ot;
  std::vector<std::pair<std::int64_t, double>> checkpoints;  // (M, log Z-hat)
};

/// Feed log-f values one by one; log_estimate() matches the batch
/// estimator over the values seen so far.
class StreamingEstimator {
 public:
  StreamingEstimator(double log_support_size, EstimatorKind kind)
      : log_support_size_(log_support_size), kind_(kind) {}

  void add(double log_f_value) {
    acc_.add(kind_ == EstimatorKind::ot ? -log_f_value : log_f_value);
  }
  std::int64_t count() const { return static_cast<std::int64_t>(acc_.count()); }
  double log_estimate() const;

 private:
  double log_support_size_;
  EstimatorKind kind_;
  StreamingLogSumExp acc_;
};

/// Running estimates at each scheduled M; the checkpoint at M equals the
/// batch estimator applied to the first M values.
EstimateSeries streaming_curve(double log_support_size, EstimatorKind kind, Representation rep,
                               std::span<const double> log_f_values,
                               std::span<const std::int64_t> checkpoint_schedule);

}  // namespace nfgmc
