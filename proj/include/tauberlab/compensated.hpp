#pragma once

#include <cmath>

namespace tauberlab {

/// Neumaier's variant of Kahan summation. Unlike plain Kahan it stays accurate
/// when an incoming term is larger in magnitude than the running sum, which is
/// the normal situation for alternating divergent series.
class NeumaierSum {
 public:
  NeumaierSum() = default;
  explicit NeumaierSum(double initial) : sum_(initial) {}

  NeumaierSum& operator+=(double value) noexcept {
    const double t = sum_ + value;
    if (std::fabs(sum_) >= std::fabs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  NeumaierSum& operator+=(const NeumaierSum& other) noexcept {
    *this += other.sum_;
    *this += other.compensation_;
    return *this;
  }

  double value() const noexcept { return sum_ + compensation_; }
  bool finite() const noexcept { return std::isfinite(sum_) && std::isfinite(compensation_); }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace tauberlab
