#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace brw {

/// Neumaier compensated summation.
class CompensatedSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Sum of f(i) for i in [0, n), compensated, accumulated over fixed-size
/// blocks whose partials are combined in index order. Block partials do not
/// depend on how threads are scheduled, so the result is byte-identical for
/// any worker count. Caller may parallelize over blocks.
constexpr std::size_t k_sum_block = 4096;

double deterministic_sum(std::span<const double> xs);
double deterministic_dot(std::span<const double> a, std::span<const double> b);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double slope_stderr = 0.0;
  std::size_t n = 0;
};

LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

struct MeanStderr {
  double mean = 0.0;
  double stderr_ = 0.0;
  std::size_t n = 0;
};

MeanStderr mean_stderr(std::span<const double> xs);

}  // namespace brw
