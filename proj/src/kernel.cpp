#include "brw/kernel.hpp"

#include <stdexcept>

#include "brw/numeric.hpp"

namespace brw {

TransitionKernel::TransitionKernel(const CayleyBall& ball, const DrivingMeasure& q)
    : ball_(&ball), weight_(q.generator_weight), identity_weight_(q.identity_weight) {
  if (static_cast<int>(weight_.size()) != ball.generator_count())
    throw std::invalid_argument("driving measure does not match the presentation");
}

void TransitionKernel::apply(std::span<const double> in, std::span<double> out,
                             std::uint32_t limit) const {
  const std::uint32_t n = limit ? limit : ball_->size();
  const int ngen = ball_->generator_count();
#pragma omp parallel for schedule(static)
  for (long long v = 0; v < static_cast<long long>(n); ++v) {
    double acc = identity_weight_ * in[v];
    for (int g = 0; g < ngen; ++g) {
      std::uint32_t u = ball_->neighbor(static_cast<std::uint32_t>(v), static_cast<Gen>(g));
      if (u != k_no_vertex && u < n) acc += weight_[g] * in[u];
    }
    out[v] = acc;
  }
}

void TransitionKernel::apply_serial(std::span<const double> in, std::span<double> out,
                                    std::uint32_t limit) const {
  const std::uint32_t n = limit ? limit : ball_->size();
  const int ngen = ball_->generator_count();
  for (std::uint32_t v = 0; v < n; ++v) {
    double acc = identity_weight_ * in[v];
    for (int g = 0; g < ngen; ++g) {
      std::uint32_t u = ball_->neighbor(v, static_cast<Gen>(g));
      if (u != k_no_vertex && u < n) acc += weight_[g] * in[u];
    }
    out[v] = acc;
  }
}

DistributionVector TransitionKernel::n_step(std::uint32_t start, int n, std::uint32_t limit) const {
  const std::uint32_t size = limit ? limit : ball_->size();
  if (start >= size) throw std::invalid_argument("start vertex not in ball");
  std::vector<double> cur(size, 0.0), next(size, 0.0);
  cur[start] = 1.0;
  for (int step = 0; step < n; ++step) {
    apply(cur, next, size);
    cur.swap(next);
  }
  DistributionVector d;
  d.steps = n;
  d.total_mass = deterministic_sum(cur);
  d.mass = std::move(cur);
  return d;
}

DistributionVector n_step_distribution(const TransitionKernel& kernel, std::uint32_t start, int n) {
  const CayleyBall& ball = kernel.ball();
  if (n < 0) throw std::invalid_argument("step count must be nonnegative");
  if (ball.distance_from_root(start) + n > ball.radius())
    throw std::invalid_argument("ball too small: distribution would be silently truncated");
  DistributionVector d = kernel.n_step(start, n);
  if (std::abs(d.total_mass - 1.0) > 1e-10)
    throw std::logic_error("mass conservation violated");
  return d;
}

}  // namespace brw
