#pragma once

#include <vector>

#include "brw/kernel.hpp"

namespace brw {

/// Spectral radius estimate of the walk kernel.
///
/// lower_bound is the top eigenvalue of the kernel restricted to B(o, radius)
/// (power iteration), a certified lower bound that is nondecreasing in the
/// radius. Its truncation error decays like 1/radius^2, too slowly for tight
/// work at desk radii, so the headline rho_hat extrapolates the eigenvalues at
/// radii (r-4, r-2, r) through the model lambda(r) = rho - a/r^2 - b/r^3.
/// return_prob_root keeps the raw (p^(2n)(e,e))^(1/2n) diagnostic at the
/// largest even step count the ball makes exact (2*radius).
struct SpectralRadiusEstimate {
  double lower_bound = 0.0;
  double rho_hat = 0.0;
  double rho_hat_uncertainty = 0.0;  // extrapolation spread + residual
  double return_prob_root = 0.0;
  int return_prob_steps = 0;
  int ball_radius = 0;
  int power_iterations = 0;
  double power_residual = 0.0;
  std::vector<double> sub_ball_eigenvalues;  // at the radii used, ascending
  std::vector<int> sub_ball_radii;
};

SpectralRadiusEstimate estimate_spectral_radius(const TransitionKernel& kernel,
                                                double residual_tol = 1e-10,
                                                int max_iterations = 20000);

/// Top eigenvalue of the kernel restricted to B(o, sub_radius).
double truncated_eigenvalue(const TransitionKernel& kernel, int sub_radius,
                            double residual_tol = 1e-10, int max_iterations = 20000,
                            int* iterations_out = nullptr, double* residual_out = nullptr);

/// p^(k)(e,e) for k = 0..2*radius, exact: a returning path of length k never
/// leaves B(o, radius) when k <= 2*radius + 1.
std::vector<double> return_probabilities(const TransitionKernel& kernel, int max_steps);

}  // namespace brw
