#include "doctest.h"

#include <cmath>

#include "brw/spectral.hpp"

using namespace brw;

namespace {
const double k_rho_free = 2.0 * std::sqrt(3.0) / 4.0;  // 4-regular tree SRW
}

TEST_CASE("truncated eigenvalues match the radial-reduction oracle") {
  // the radial projection of the tree ball is a small tridiagonal matrix whose
  // top eigenvalue was computed independently; frozen to 12 digits
  auto pres = GroupPresentation::free_rank2();
  Canonicalizer canon(pres);
  auto ball = CayleyBall::build(canon, 8);
  auto q = DrivingMeasure::uniform_srw(pres);
  TransitionKernel kernel(ball, q);
  CHECK(truncated_eigenvalue(kernel, 4) == doctest::Approx(0.772228158689).epsilon(1e-9));
  CHECK(truncated_eigenvalue(kernel, 6) == doctest::Approx(0.811361919695).epsilon(1e-9));
  CHECK(truncated_eigenvalue(kernel, 8) == doctest::Approx(0.830014897579).epsilon(1e-9));

  auto lazy = DrivingMeasure::uniform_lazy(pres, 0.2);
  TransitionKernel lazy_kernel(ball, lazy);
  CHECK(truncated_eigenvalue(lazy_kernel, 8) == doctest::Approx(0.864011918063).epsilon(1e-9));
}

TEST_CASE("free-group spectral radius estimate at desk radius") {
  auto pres = GroupPresentation::free_rank2();
  Canonicalizer canon(pres);
  auto ball = CayleyBall::build(canon, 8);
  auto q = DrivingMeasure::uniform_srw(pres);
  TransitionKernel kernel(ball, q);
  auto est = estimate_spectral_radius(kernel);
  // extrapolation through radii (4,6,8) lands within 1% even here
  CHECK(std::abs(est.rho_hat - k_rho_free) / k_rho_free < 0.01);
  CHECK(est.lower_bound < k_rho_free);
  CHECK(est.lower_bound > 0.0);
  CHECK(est.rho_hat < 1.0);  // nonamenability: never 1

  SUBCASE("lazy spectral mapping rho(alpha) = alpha + (1-alpha) rho") {
    for (double alpha : {0.1, 0.2}) {
      auto lazy = DrivingMeasure::uniform_lazy(pres, alpha);
      TransitionKernel lk(ball, lazy);
      auto lest = estimate_spectral_radius(lk);
      double target = alpha + (1 - alpha) * k_rho_free;
      CHECK(std::abs(lest.rho_hat - target) / target < 0.01);
      CHECK(lest.rho_hat < 1.0);
    }
  }
}

TEST_CASE("lower bound is nondecreasing in the radius") {
  auto pres = GroupPresentation::free_rank2();
  Canonicalizer canon(pres);
  auto ball = CayleyBall::build(canon, 8);
  auto q = DrivingMeasure::uniform_lazy(pres, 0.2);
  TransitionKernel kernel(ball, q);
  double prev = 0.0;
  for (int r = 2; r <= 8; r += 2) {
    double lam = truncated_eigenvalue(kernel, r);
    CHECK(lam >= prev);
    prev = lam;
  }
}

TEST_CASE("surface spectral radius is below 1 and above the tree bound") {
  auto pres = GroupPresentation::surface_genus2();
  Canonicalizer canon(pres);
  auto ball = CayleyBall::build(canon, 5);
  auto q = DrivingMeasure::uniform_srw(pres);
  TransitionKernel kernel(ball, q);
  auto est = estimate_spectral_radius(kernel);
  CHECK(est.rho_hat < 1.0);
  // the 8-regular tree minimizes the spectral radius among 8-regular graphs;
  // the truncated lower bound must stay below the true value but the
  // extrapolation should sit in the plausible band
  CHECK(est.rho_hat > 0.55);
  CHECK(est.lower_bound < est.rho_hat);
}

TEST_CASE("return probabilities are exact to 2*radius") {
  auto pres = GroupPresentation::free_rank2();
  Canonicalizer canon(pres);
  auto small = CayleyBall::build(canon, 4);
  auto large = CayleyBall::build(canon, 8);
  auto q = DrivingMeasure::uniform_lazy(pres, 0.2);
  TransitionKernel ks(small, q), kl(large, q);
  auto ps = return_probabilities(ks, 8);
  auto pl = return_probabilities(kl, 8);
  for (int k = 0; k <= 8; ++k) CHECK(ps[k] == doctest::Approx(pl[k]).epsilon(1e-14));
}
