#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>

namespace nfgmc {

/// Running log(sum_i exp(x_i)) with max rescaling, so that inputs of order
/// +-5000 never overflow. Empty accumulator evaluates to -inf.
class StreamingLogSumExp {
 public:
  void add(double x) {
    ++count_;
    if (std::isinf(x) && x < 0.0) return;  // exp(-inf) adds nothing
    if (count_ == 1 || sum_ == 0.0) {
      max_ = x;
      sum_ = 1.0;
      return;
    }
    if (x <= max_) {
      sum_ += std::exp(x - max_);
    } else {
      sum_ = sum_ * std::exp(max_ - x) + 1.0;
      max_ = x;
    }
  }

  /// Fold in another accumulator (used to merge per-chunk partials).
  void merge(const StreamingLogSumExp& other) {
    if (other.sum_ == 0.0) {
      count_ += other.count_;
      return;
    }
    if (sum_ == 0.0) {
      max_ = other.max_;
      sum_ = other.sum_;
      count_ += other.count_;
      return;
    }
    if (other.max_ <= max_) {
      sum_ += other.sum_ * std::exp(other.max_ - max_);
    } else {
      sum_ = sum_ * std::exp(max_ - other.max_) + other.sum_;
      max_ = other.max_;
    }
    count_ += other.count_;
  }

  double value() const {
    if (sum_ == 0.0) return -std::numeric_limits<double>::infinity();
    return max_ + std::log(sum_);
  }

  std::size_t count() const { return count_; }

 private:
  double max_ = -std::numeric_limits<double>::infinity();
  double sum_ = 0.0;
  std::size_t count_ = 0;
};

inline double log_sum_exp(std::span<const double> xs) {
  StreamingLogSumExp acc;
  for (double x : xs) acc.add(x);
  return acc.value();
}

}  // namespace nfgmc
