#include "brw/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "brw/numeric.hpp"

namespace brw {

double truncated_eigenvalue(const TransitionKernel& kernel, int sub_radius, double residual_tol,
                            int max_iterations, int* iterations_out, double* residual_out) {
  const CayleyBall& ball = kernel.ball();
  if (sub_radius < 0 || sub_radius > ball.radius())
    throw std::invalid_argument("sub-ball radius out of range");
  const std::uint32_t n = ball.ball_size(sub_radius);

  // Power iteration on P^2: P is symmetric, so ||P|| = sqrt(lambda_max(P^2)),
  // and P^2 is positive semidefinite, which keeps the iteration convergent for
  // period-2 walks (q(e) = 0 makes the ball bipartite with spectrum +-lambda).
  std::vector<double> v(n, 0.0), w(n, 0.0), t(n, 0.0);
  v[0] = 1.0;
  double lambda_sq = 0.0;
  double residual = 1.0;
  int iter = 0;
  for (; iter < max_iterations; ++iter) {
    kernel.apply(v, t, n);
    kernel.apply(t, w, n);
    double norm = std::sqrt(deterministic_dot(w, w));
    if (norm == 0.0) throw std::runtime_error("power iteration collapsed to zero");
    for (std::uint32_t i = 0; i < n; ++i) w[i] /= norm;
    // Rayleigh quotient and residual of P^2 on the normalized iterate
    kernel.apply(w, t, n);
    kernel.apply(t, v, n);
    lambda_sq = deterministic_dot(w, v);
    CompensatedSum rs;
    for (std::uint32_t i = 0; i < n; ++i) {
      double d = v[i] - lambda_sq * w[i];
      rs.add(d * d);
    }
    residual = std::sqrt(rs.value());
    if (residual <= residual_tol) {
      ++iter;
      break;
    }
    v.swap(w);
  }
  if (residual > residual_tol)
    throw std::runtime_error("power iteration did not reach the residual tolerance");
  if (iterations_out) *iterations_out = iter;
  if (residual_out) *residual_out = residual;
  return std::sqrt(std::max(0.0, lambda_sq));
}

std::vector<double> return_probabilities(const TransitionKernel& kernel, int max_steps) {
  const std::uint32_t n = kernel.ball().size();
  std::vector<double> cur(n, 0.0), next(n, 0.0);
  cur[0] = 1.0;
  std::vector<double> probs{1.0};
  for (int k = 1; k <= max_steps; ++k) {
    kernel.apply(cur, next, n);
    cur.swap(next);
    probs.push_back(cur[0]);
  }
  return probs;
}

SpectralRadiusEstimate estimate_spectral_radius(const TransitionKernel& kernel,
                                                double residual_tol, int max_iterations) {
  const CayleyBall& ball = kernel.ball();
  const int r = ball.radius();
  if (r < 2) throw std::invalid_argument("spectral estimate needs ball radius >= 2");

  SpectralRadiusEstimate est;
  est.ball_radius = r;

  std::vector<int> radii;
  if (r >= 6)
    radii = {r - 4, r - 2, r};
  else if (r >= 4)
    radii = {r - 2, r};
  else
    radii = {r};
  for (int rr : radii) {
    int iters = 0;
    double res = 0.0;
    double lam = truncated_eigenvalue(kernel, rr, residual_tol, max_iterations, &iters, &res);
    est.sub_ball_radii.push_back(rr);
    est.sub_ball_eigenvalues.push_back(lam);
    if (rr == r) {
      est.lower_bound = lam;
      est.power_iterations = iters;
      est.power_residual = res;
    }
  }

  if (radii.size() == 3) {
    // lambda(r) = rho - a/r^2 - b/r^3 through three points
    double r0 = radii[0], r1 = radii[1], r2 = radii[2];
    double l0 = est.sub_ball_eigenvalues[0], l1 = est.sub_ball_eigenvalues[1],
           l2 = est.sub_ball_eigenvalues[2];
    auto solve3 = [&](double x0, double y0, double x1, double y1, double x2, double y2) {
      // unknowns (rho, a, b) in y = rho - a x^-2 - b x^-3, Cramer
      double a00 = 1, a01 = -1 / (x0 * x0), a02 = -1 / (x0 * x0 * x0);
      double a10 = 1, a11 = -1 / (x1 * x1), a12 = -1 / (x1 * x1 * x1);
      double a20 = 1, a21 = -1 / (x2 * x2), a22 = -1 / (x2 * x2 * x2);
      double det = a00 * (a11 * a22 - a12 * a21) - a01 * (a10 * a22 - a12 * a20) +
                   a02 * (a10 * a21 - a11 * a20);
      double det0 = y0 * (a11 * a22 - a12 * a21) - a01 * (y1 * a22 - a12 * y2) +
                    a02 * (y1 * a21 - a11 * y2);
      return det0 / det;
    };
    double rho3 = solve3(r0, l0, r1, l1, r2, l2);
    // two-point variant lambda(r) = rho - a/r^2 on the outer pair for a spread
    double rho2 = (l2 * r2 * r2 - l1 * r1 * r1) / (r2 * r2 - r1 * r1);
    est.rho_hat = rho3;
    est.rho_hat_uncertainty = std::abs(rho3 - rho2) + residual_tol;
  } else if (radii.size() == 2) {
    double r1 = radii[0], r2 = radii[1];
    double l1 = est.sub_ball_eigenvalues[0], l2 = est.sub_ball_eigenvalues[1];
    double rho2 = (l2 * r2 * r2 - l1 * r1 * r1) / (r2 * r2 - r1 * r1);
    est.rho_hat = rho2;
    est.rho_hat_uncertainty = std::abs(rho2 - l2) + residual_tol;
  } else {
    est.rho_hat = est.sub_ball_eigenvalues[0];
    est.lower_bound = est.rho_hat;
    est.rho_hat_uncertainty = 0.1;  // a bare truncated eigenvalue is crude
  }

  // raw return-probability diagnostic at the largest exact even step count
  auto probs = return_probabilities(kernel, 2 * r);
  est.return_prob_steps = 2 * r;
  est.return_prob_root = std::pow(probs[2 * r], 1.0 / (2.0 * r));
  return est;
}

}  // namespace brw
