#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "brw/canonical.hpp"
#include "brw/kernel.hpp"
#include "brw/numeric.hpp"

namespace brw {

/// Truncated Green function value sum_{n<=N} p^(n)(x,y) r^n.
struct GreenEstimate {
  double value = 0.0;
  int truncation = 0;
  double r = 1.0;
  /// (r rho)^(N+1) / (1 - r rho) when r rho < 1 (p^(n) <= rho^n for the
  /// symmetric kernel); unset when the geometric bound degenerates.
  std::optional<double> tail_bound;
  bool exact_dp = false;  // no path of length <= N could leave the ball
};

/// G_r(x, ·) over all ball vertices in one DP sweep. Accumulation per vertex
/// is compensated. N < 0 selects the largest exact truncation
/// radius - d(o,x).
std::vector<double> green_vector(const TransitionKernel& kernel, std::uint32_t x, double r, int N);

GreenEstimate green_function(const TransitionKernel& kernel, std::uint32_t x, std::uint32_t y,
                             double r, int N = -1, double rho_upper = 0.0);

/// Pluggable Green evaluator: the generic ball-DP route and the closed-form
/// tree route implement the same surface, so ratio/fit pipelines can run on
/// either. Free-group controls with sub-1e-6 tolerances need the closed form;
/// truncation bias of the DP route at desk radii is of order 1e-2.
class GreenBackend {
 public:
  virtual ~GreenBackend() = default;
  virtual std::vector<double> green_many(const Word& x, std::span<const Word> ys,
                                         double r) const = 0;
  /// values[ri][yi]; DP backends amortize one sweep over the whole r grid.
  virtual std::vector<std::vector<double>> green_many_grid(const Word& x,
                                                           std::span<const Word> ys,
                                                           std::span<const double> rs) const;
  double green(const Word& x, const Word& y, double r) const;
};

/// Targeted multi-radius Green sums from one DP sweep: out[ri][ti] =
/// sum_{n<=N} p^(n)(x, targets[ti]) rs[ri]^n, compensated accumulation.
std::vector<std::vector<double>> green_targets_grid(const TransitionKernel& kernel,
                                                    std::uint32_t x,
                                                    std::span<const std::uint32_t> targets,
                                                    std::span<const double> rs, int N);

class BallGreenBackend final : public GreenBackend {
 public:
  BallGreenBackend(const TransitionKernel& kernel, const Canonicalizer& canon, int truncation);
  std::vector<double> green_many(const Word& x, std::span<const Word> ys, double r) const override;
  std::vector<std::vector<double>> green_many_grid(const Word& x, std::span<const Word> ys,
                                                   std::span<const double> rs) const override;

 private:
  const TransitionKernel* kernel_;
  const Canonicalizer* canon_;
  int truncation_;
};

/// Closed-form Green functions of the uniform (optionally lazy) walk on the
/// free group: first-passage generating function per unit distance from the
/// one-step recursion, G_r(x,y) = F_r^d(x,y) G_r(e,e).
class TreeGreenBackend final : public GreenBackend {
 public:
  TreeGreenBackend(const Canonicalizer& canon, const DrivingMeasure& q);

  double first_passage(double r) const;
  double green_at_distance(int d, double r) const;
  double radius_of_convergence() const { return radius_of_convergence_; }
  std::vector<double> green_many(const Word& x, std::span<const Word> ys, double r) const override;

 private:
  const Canonicalizer* canon_;
  int degree_;
  double q_gen_;
  double q_id_;
  double radius_of_convergence_;
};

/// Per-distance maxima of G_r(o, ·); the qualitative vanishing check passes
/// when the maxima strictly decrease beyond distance 2.
struct VanishingTable {
  double r = 1.0;
  int truncation = 0;
  std::vector<double> max_by_distance;
  bool pass = false;
};

VanishingTable check_green_vanishing(const TransitionKernel& kernel, double r, int N = -1);

struct DecayFit {
  double C1_hat = 0.0;
  double rho_hat_decay = 1.0;
  double r_squared = 0.0;
  int distances_used = 0;
};

/// Least squares of log G against distance, one pooled point per distance
/// (mean of log over the sphere, zeros excluded). Requires >= 5 distances.
DecayFit fit_green_decay(const CayleyBall& ball, std::span<const double> green_values, int d_min,
                         int d_max);

/// Same fit fed by a backend (one value per distance along a geodesic ray).
DecayFit fit_green_decay(const GreenBackend& backend, const Canonicalizer& canon, double r,
                         int d_min, int d_max);

}  // namespace brw
