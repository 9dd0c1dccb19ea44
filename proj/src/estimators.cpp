#include "nfgmc/estimators.hpp"

#include <cmath>
#include <string>

#include "nfgmc/errors.hpp"

namespace nfgmc {

double StreamingEstimator::log_estimate() const {
  if (acc_.count() == 0) throw EmptySample("no values accumulated");
  const double log_m = std::log(static_cast<double>(acc_.count()));
  return kind_ == EstimatorKind::ot ? log_support_size_ + log_m - acc_.value()
                                    : log_support_size_ - log_m + acc_.value();
}

double ot_log_estimate(double log_support_size, std::span<const double> log_f_values) {
  StreamingEstimator est(log_support_size, EstimatorKind::ot);
  for (double v : log_f_values) est.add(v);
  return est.log_estimate();
}

double uniform_log_estimate(double log_support_size, std::span<const double> log_f_values) {
  StreamingEstimator est(log_support_size, EstimatorKind::uniform);
  for (double v : log_f_values) est.add(v);
  return est.log_estimate();
}

double to_model_log_z(double estimate, Representation rep, const ModelSpec& spec) {
  if (rep == Representation::primal) return estimate;
  return estimate + spec.n_sites() * std::log(static_cast<double>(spec.q));
}

EstimateSeries streaming_curve(double log_support_size, EstimatorKind kind, Representation rep,
                               std::span<const double> log_f_values,
                               std::span<const std::int64_t> checkpoint_schedule) {
  if (checkpoint_schedule.empty()) throw ConfigError("empty checkpoint schedule");
  EstimateSeries series;
  series.rep = rep;
  series.kind = kind;
  StreamingEstimator est(log_support_size, kind);
  std::size_t next = 0;
  for (std::size_t i = 0; i < log_f_values.size() && next < checkpoint_schedule.size(); ++i) {
    const std::int64_t m = checkpoint_schedule[next];
    if (m <= static_cast<std::int64_t>(i))
      throw ConfigError("checkpoint schedule must be strictly increasing and >= 1");
    est.add(log_f_values[i]);
    if (est.count() == m) {
      series.checkpoints.emplace_back(m, est.log_estimate());
      ++next;
    }
  }
  if (next < checkpoint_schedule.size())
    throw ConfigError("checkpoint schedule exceeds the number of values (" +
                      std::to_string(log_f_values.size()) + ")");
  return series;
}

}  // namespace nfgmc
