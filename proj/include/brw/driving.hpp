#pragma once

#include <string>
#include <utility>
#include <vector>

#include "brw/presentation.hpp"

namespace brw {

/// Symmetric step distribution q on S ∪ {e}: q(s) = q(s^-1), weights sum to 1.
/// The standing assumption additionally requires full support including the
/// identity; validation enforces it unless the caller explicitly opts into the
/// relaxed mode used by calibration oracles (plain SRW with q(e) = 0).
struct DrivingMeasure {
  std::vector<double> generator_weight;  // indexed by Gen
  double identity_weight = 0.0;

  static constexpr double k_sum_tolerance = 1e-12;

  static DrivingMeasure validate(const GroupPresentation& pres,
                                 const std::vector<std::pair<std::string, double>>& weights,
                                 bool require_full_support = true);

  /// Uniform on S ∪ {e} minus the requested identity mass: q(e) = identity_mass,
  /// q(s) = (1 - identity_mass)/|S|.
  static DrivingMeasure uniform_lazy(const GroupPresentation& pres, double identity_mass);

  /// Plain SRW, q(e) = 0; violates the full-support assumption on purpose
  /// (closed-form calibration oracles are stated for this walk).
  static DrivingMeasure uniform_srw(const GroupPresentation& pres);

  double total() const;
};

}  // namespace brw
