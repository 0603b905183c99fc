#include "brw/offspring.hpp"

#include <cmath>
#include <stdexcept>

#include "brw/numeric.hpp"

namespace brw {

OffspringLaw OffspringLaw::validate(const std::vector<std::pair<int, double>>& probabilities,
                                    bool strict) {
  OffspringLaw law;
  int max_k = 0;
  for (const auto& [k, p] : probabilities) {
    if (k < 0) throw std::invalid_argument("offspring count must be nonnegative");
    if (p < 0) throw std::invalid_argument("offspring probability must be nonnegative");
    max_k = std::max(max_k, k);
  }
  law.prob_.assign(max_k + 1, 0.0);
  for (const auto& [k, p] : probabilities) law.prob_[k] += p;

  if (law.prob_[0] != 0.0) throw std::invalid_argument("mu_0 must be 0 (no deaths)");
  CompensatedSum total, mean;
  for (int k = 0; k <= max_k; ++k) {
    total.add(law.prob_[k]);
    mean.add(k * law.prob_[k]);
  }
  if (std::abs(total.value() - 1.0) > k_sum_tolerance)
    throw std::invalid_argument("offspring probabilities must sum to 1");
  law.mean_ = mean.value();
  if (strict) {
    if (law.prob_.size() < 2 || law.prob_[1] <= 0.0)
      throw std::invalid_argument("mu_1 must be positive");
    if (law.mean_ <= 1.0) throw std::invalid_argument("offspring mean must exceed 1");
  }

  law.cdf_.resize(law.prob_.size());
  double run = 0.0;
  for (std::size_t k = 0; k < law.prob_.size(); ++k) {
    run += law.prob_[k];
    law.cdf_[k] = run;
  }
  law.cdf_.back() = 1.0;

  // biased root degree: P(D = k+1) proportional to mu_k / (k+1)
  std::vector<double> w(law.prob_.size(), 0.0);
  double z = 0.0;
  for (std::size_t k = 0; k < law.prob_.size(); ++k) {
    w[k] = law.prob_[k] / static_cast<double>(k + 1);
    z += w[k];
  }
  law.root_cdf_.resize(w.size());
  run = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    run += w[k] / z;
    law.root_cdf_[k] = run;
  }
  law.root_cdf_.back() = 1.0;
  return law;
}

OffspringLaw OffspringLaw::unit_atom(int k) { return validate({{k, 1.0}}, false); }

OffspringLaw OffspringLaw::from_mean(double m) {
  if (m <= 1.0) throw std::invalid_argument("no supercritical law with mean <= 1");
  // two atoms {1, k}: p*1 + (1-p)*k = m with the smallest k > m
  int k = static_cast<int>(std::floor(m)) + 1;
  double p = (k - m) / (k - 1.0);
  return validate({{1, p}, {k, 1.0 - p}});
}

int OffspringLaw::sample(Rng& rng) const {
  double u = rng.uniform01();
  for (std::size_t k = 0; k < cdf_.size(); ++k)
    if (u < cdf_[k]) return static_cast<int>(k);
  return max_offspring();
}

int OffspringLaw::sample_biased_root_degree(Rng& rng) const {
  double u = rng.uniform01();
  for (std::size_t k = 0; k < root_cdf_.size(); ++k)
    if (u < root_cdf_[k]) return static_cast<int>(k) + 1;
  return max_offspring() + 1;
}

double OffspringLaw::biased_root_degree_probability(int degree) const {
  int k = degree - 1;
  if (k < 0 || k > max_offspring()) return 0.0;
  double z = 0.0;
  for (int j = 0; j <= max_offspring(); ++j) z += prob_[j] / (j + 1.0);
  return (prob_[k] / degree) / z;
}

}  // namespace brw
