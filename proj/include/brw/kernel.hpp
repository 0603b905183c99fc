#pragma once

#include <span>
#include <vector>

#include "brw/ball.hpp"
#include "brw/driving.hpp"

namespace brw {

/// Sparse distribution p^(n)(x, ·) restricted to a ball.
struct DistributionVector {
  std::vector<double> mass;  // indexed by ball vertex
  int steps = 0;
  double total_mass = 0.0;
};

/// Ball-restricted transition kernel of the walk p(x,y) = q(x^-1 y).
/// Substochastic: mass stepping outside the ball is killed (Dirichlet
/// truncation). The kernel matrix is symmetric because q is.
///
/// apply() is the OpenMP inner loop; apply_serial() is the reference kept for
/// testing. Both produce bitwise-identical output: each output entry is an
/// independent fixed-order inner sum, so the parallel schedule cannot change
/// rounding.
class TransitionKernel {
 public:
  TransitionKernel(const CayleyBall& ball, const DrivingMeasure& q);

  const CayleyBall& ball() const { return *ball_; }

  /// out[v] = q(e) in[v] + sum_s q(s) in[v s], restricted to the first
  /// `limit` vertices (a sub-ball prefix); pass 0 for the whole ball.
  void apply(std::span<const double> in, std::span<double> out, std::uint32_t limit = 0) const;
  void apply_serial(std::span<const double> in, std::span<double> out,
                    std::uint32_t limit = 0) const;

  /// Exact p^(n)(x, ·) as long as radius >= d(o,x) + n; otherwise the
  /// Dirichlet-truncated distribution (total mass < 1).
  DistributionVector n_step(std::uint32_t start, int n, std::uint32_t limit = 0) const;

 private:
  const CayleyBall* ball_;
  std::vector<double> weight_;  // per generator
  double identity_weight_;
};

/// Full-precision n-step distribution with the no-truncation precondition of
/// the spec operation: throws if the ball cannot hold every path.
DistributionVector n_step_distribution(const TransitionKernel& kernel, std::uint32_t start, int n);

}  // namespace brw
