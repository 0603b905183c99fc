#include "brw/ancona.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "brw/geometry.hpp"

namespace brw {

AnconaReport check_ancona(const CayleyBall& ball, const Canonicalizer& canon,
                          const GreenBackend& backend, std::span<const double> r_grid,
                          int n_pairs, Rng rng, const AnconaParams& params) {
  AnconaReport report;
  report.r_grid.assign(r_grid.begin(), r_grid.end());
  report.max_ratio_by_r.assign(r_grid.size(), 0.0);
  report.sphere_radius =
      std::max(1, static_cast<int>(std::lround(params.sphere_fraction * ball.radius())));
  report.min_separation =
      std::max(1, static_cast<int>(std::lround(params.min_separation_fraction * ball.radius())));

  const std::uint32_t s_lo = ball.sphere_begin(report.sphere_radius);
  const std::uint32_t s_hi = ball.sphere_begin(report.sphere_radius + 1);
  if (s_hi <= s_lo) throw std::invalid_argument("sampling sphere is empty");

  struct Pair {
    Word x, z;
    std::vector<Word> ys;
  };
  std::vector<Pair> pairs;
  for (int p = 0; p < n_pairs; ++p) {
    Word x, z;
    bool found = false;
    for (int attempt = 0; attempt < params.resample_cap; ++attempt) {
      std::uint32_t xi = s_lo + static_cast<std::uint32_t>(rng.below(s_hi - s_lo));
      std::uint32_t zi = s_lo + static_cast<std::uint32_t>(rng.below(s_hi - s_lo));
      auto xw = ball.word(xi);
      auto zw = ball.word(zi);
      x.assign(xw.begin(), xw.end());
      z.assign(zw.begin(), zw.end());
      if (canon.distance(x, z) >= report.min_separation) {
        found = true;
        break;
      }
    }
    if (!found) throw std::runtime_error("could not sample separated basepoints on the sphere");
    auto path = geodesic_segment(canon, x, z);
    Pair pr;
    pr.x = std::move(x);
    pr.z = std::move(z);
    const int len = static_cast<int>(path.size()) - 1;
    const int ny = std::min(params.y_per_pair, std::max(1, len - 1));
    for (int j = 1; j <= ny; ++j) {
      int pos = j * len / (ny + 1);
      pos = std::clamp(pos, 1, len - 1);
      pr.ys.push_back(path[pos]);
    }
    pairs.push_back(std::move(pr));
  }

  // per-(pair, r) maxima filled in parallel, reduced in index order; one DP
  // sweep per basepoint serves the whole r grid
  std::vector<std::vector<double>> pair_max(pairs.size(),
                                            std::vector<double>(r_grid.size(), 0.0));
#pragma omp parallel for schedule(dynamic)
  for (long long p = 0; p < static_cast<long long>(pairs.size()); ++p) {
    const Pair& pr = pairs[p];
    std::vector<Word> from_x = pr.ys;
    from_x.push_back(pr.z);
    auto gx = backend.green_many_grid(pr.x, from_x, r_grid);
    std::vector<std::vector<std::vector<double>>> gy(pr.ys.size());
    for (std::size_t j = 0; j < pr.ys.size(); ++j) {
      Word targets[2] = {pr.z, pr.ys[j]};
      gy[j] = backend.green_many_grid(pr.ys[j], std::span<const Word>(targets, 2), r_grid);
    }
    for (std::size_t ri = 0; ri < r_grid.size(); ++ri) {
      const double g_xz = gx[ri].back();
      for (std::size_t j = 0; j < pr.ys.size(); ++j) {
        const double g_yz = gy[j][ri][0], g_yy = gy[j][ri][1];
        const double g_xy = gx[ri][j];
        if (g_xy <= 0.0 || g_yz <= 0.0) continue;
        double ratio = g_xz * g_yy / (g_xy * g_yz);
        pair_max[p][ri] = std::max(pair_max[p][ri], ratio);
      }
    }
  }
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (std::size_t ri = 0; ri < r_grid.size(); ++ri)
      report.max_ratio_by_r[ri] = std::max(report.max_ratio_by_r[ri], pair_max[p][ri]);

  report.C_hat = *std::max_element(report.max_ratio_by_r.begin(), report.max_ratio_by_r.end());
  report.pairs = static_cast<int>(pairs.size());
  for (const auto& pr : pairs) report.triples += static_cast<int>(pr.ys.size());
  return report;
}

}  // namespace brw
