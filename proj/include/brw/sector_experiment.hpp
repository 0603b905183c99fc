#pragma once

#include <array>
#include <optional>
#include <vector>

#include "brw/geometry.hpp"
#include "brw/green.hpp"
#include "brw/offspring.hpp"

namespace brw {

/// The three-sector hitting experiment: pick basepoints x_i at prescribed
/// distance K from the ray union, bound the expected number of visits to the
/// rays by the truncated Green sum, and compare against hitting frequencies
/// of ball-confined ensembles started at the x_i. The analytic tail
/// sum_{n>=K} C1 C2 n rho^n is evaluated with fitted constants.
struct SectorExperimentConfig {
  std::vector<int> k_values{2, 4, 6, 8};
  int depth = 12;
  int runs_per_point = 400;
  std::uint64_t master_seed = 1;
  double decay_r = 1.0;          // r for the (C1, rho) fit, typically 1/rho_lower
  int decay_d_min = 1;
  int decay_d_max = 6;
  std::uint64_t population_cap = 1'000'000;
};

struct SectorPointReport {
  int sector = 0;  // 1..3
  int k = 0;
  Word basepoint;
  double exact_bound = 0.0;      // sum over gamma of truncated G_m(x_i, .)
  double empirical_prob = 0.0;   // P[trace meets gamma]
  double empirical_se = 0.0;
  double mean_hits = 0.0;        // mean |trace ∩ gamma|
  bool prob_within_bound = false;
};

struct SectorExperimentReport {
  double m = 0.0;
  double c1_hat = 0.0;
  double rho_hat_decay = 0.0;
  double c2_hat = 0.0;
  std::vector<int> k_values;
  std::vector<double> tail_form;  // per K, with the fitted constants
  std::vector<SectorPointReport> points;
  bool bounds_decreasing = true;  // exact bound strictly decreasing in K per sector
  bool tail_decreasing = true;
  bool all_within_bound = true;
};

SectorExperimentReport run_sector_experiment(const CayleyBall& ball, const Canonicalizer& canon,
                                             const DrivingMeasure& q, const OffspringLaw& law,
                                             const SectorExperimentConfig& config);

/// Closed form of sum_{n>=k} n rho^n for rho in (0,1).
double weighted_geometric_tail(int k, double rho);

}  // namespace brw
