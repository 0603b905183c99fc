#pragma once

#include <vector>

#include "brw/green.hpp"
#include "brw/rng.hpp"

namespace brw {

/// Multiplicativity ratio G_r(x,z) G_r(y,y) / (G_r(x,y) G_r(y,z)) for y on a
/// geodesic from x to z. Exactly 1 on trees; bounded by the Ancona constant
/// on hyperbolic presets, uniformly in r up to the radius of convergence.
struct AnconaReport {
  double C_hat = 0.0;                    // max ratio over every triple and r
  std::vector<double> r_grid;
  std::vector<double> max_ratio_by_r;
  int pairs = 0;
  int triples = 0;
  int sphere_radius = 0;
  int min_separation = 0;
};

struct AnconaParams {
  double sphere_fraction = 0.8;   // basepoints sampled on the sphere of this fraction of the radius
  double min_separation_fraction = 0.5;
  int y_per_pair = 8;             // evenly spaced interior geodesic positions
  int resample_cap = 200;
};

AnconaReport check_ancona(const CayleyBall& ball, const Canonicalizer& canon,
                          const GreenBackend& backend, std::span<const double> r_grid,
                          int n_pairs, Rng rng, const AnconaParams& params = {});

}  // namespace brw
