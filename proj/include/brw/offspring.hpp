#pragma once

#include <utility>
#include <vector>

#include "brw/rng.hpp"

namespace brw {

/// Finite-support offspring distribution. The standing assumptions are
/// mu_0 = 0, mu_1 > 0, mean > 1; the relaxed mode (test laws such as delta_2)
/// skips the mu_1 > 0 and mean > 1 requirements.
class OffspringLaw {
 public:
  static constexpr double k_sum_tolerance = 1e-12;

  static OffspringLaw validate(const std::vector<std::pair<int, double>>& probabilities,
                               bool strict = true);
  static OffspringLaw unit_atom(int k);  // delta_k, relaxed
  /// The two-atom law {1, k} with the requested mean (k minimal).
  static OffspringLaw from_mean(double m);

  double mean() const { return mean_; }
  int max_offspring() const { return static_cast<int>(prob_.size()) - 1; }
  double probability(int k) const {
    return (k >= 0 && k <= max_offspring()) ? prob_[k] : 0.0;
  }
  const std::vector<double>& probabilities() const { return prob_; }

  /// Inverse-CDF sample (platform-stable).
  int sample(Rng& rng) const;

  /// Root degree of the unimodular biasing: P(D = k+1) proportional to
  /// mu_k / (k+1).
  int sample_biased_root_degree(Rng& rng) const;
  double biased_root_degree_probability(int degree) const;

 private:
  std::vector<double> prob_;      // index k
  std::vector<double> cdf_;
  std::vector<double> root_cdf_;  // over degrees k+1
  double mean_ = 0.0;
};

}  // namespace brw
