#include "brw/driving.hpp"

#include <cmath>
#include <stdexcept>

#include "brw/numeric.hpp"

namespace brw {

double DrivingMeasure::total() const {
  CompensatedSum s;
  for (double w : generator_weight) s.add(w);
  s.add(identity_weight);
  return s.value();
}

DrivingMeasure DrivingMeasure::validate(const GroupPresentation& pres,
                                        const std::vector<std::pair<std::string, double>>& weights,
                                        bool require_full_support) {
  DrivingMeasure q;
  q.generator_weight.assign(pres.generator_count(), 0.0);
  for (const auto& [name, w] : weights) {
    if (w < 0) throw std::invalid_argument("negative weight for " + name);
    if (name == "e")
      q.identity_weight = w;
    else
      q.generator_weight[pres.gen(name)] = w;
  }
  for (int g = 0; g < pres.generator_count(); g += 2) {
    if (q.generator_weight[g] != q.generator_weight[g + 1])
      throw std::invalid_argument("driving measure asymmetric: q(" + pres.generator_names()[g] +
                                  ") != q(" + pres.generator_names()[g + 1] + ")");
  }
  if (require_full_support) {
    if (q.identity_weight <= 0.0)
      throw std::invalid_argument("support must include e");
    for (int g = 0; g < pres.generator_count(); ++g)
      if (q.generator_weight[g] <= 0.0)
        throw std::invalid_argument("support must include every generator");
  }
  if (std::abs(q.total() - 1.0) > k_sum_tolerance)
    throw std::invalid_argument("driving measure weights do not sum to 1");
  return q;
}

DrivingMeasure DrivingMeasure::uniform_lazy(const GroupPresentation& pres, double identity_mass) {
  if (identity_mass <= 0.0 || identity_mass >= 1.0)
    throw std::invalid_argument("identity mass must lie in (0,1)");
  DrivingMeasure q;
  q.identity_weight = identity_mass;
  q.generator_weight.assign(pres.generator_count(),
                            (1.0 - identity_mass) / pres.generator_count());
  return q;
}

DrivingMeasure DrivingMeasure::uniform_srw(const GroupPresentation& pres) {
  DrivingMeasure q;
  q.identity_weight = 0.0;
  q.generator_weight.assign(pres.generator_count(), 1.0 / pres.generator_count());
  return q;
}

}  // namespace brw
