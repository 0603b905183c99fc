#include "brw/sector_experiment.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "brw/brw_run.hpp"
#include "brw/kernel.hpp"
#include "brw/numeric.hpp"

namespace brw {

double weighted_geometric_tail(int k, double rho) {
  if (rho <= 0.0 || rho >= 1.0) throw std::invalid_argument("rho must lie in (0,1)");
  // sum_{n>=k} n rho^n = rho^k (k (1 - rho) + rho) / (1 - rho)^2
  return std::pow(rho, k) * (k * (1.0 - rho) + rho) / ((1.0 - rho) * (1.0 - rho));
}

namespace {

// ball-metric distances to the ray union (lower-bounded by the word metric;
// exact verification against extended rays happens at selection time)
std::vector<int> ball_distance_to_gamma(const CayleyBall& ball,
                                        std::span<const std::uint32_t> gamma) {
  std::vector<int> dist(ball.size(), -1);
  std::deque<std::uint32_t> q;
  for (auto v : gamma) {
    dist[v] = 0;
    q.push_back(v);
  }
  while (!q.empty()) {
    auto v = q.front();
    q.pop_front();
    for (int g = 0; g < ball.generator_count(); ++g) {
      auto u = ball.neighbor(v, static_cast<Gen>(g));
      if (u != k_no_vertex && dist[u] < 0) {
        dist[u] = dist[v] + 1;
        q.push_back(u);
      }
    }
  }
  return dist;
}

}  // namespace

SectorExperimentReport run_sector_experiment(const CayleyBall& ball, const Canonicalizer& canon,
                                             const DrivingMeasure& q, const OffspringLaw& law,
                                             const SectorExperimentConfig& config) {
  SectorExperimentReport report;
  report.m = law.mean();
  report.k_values = config.k_values;
  const int radius = ball.radius();
  const int k_max = *std::max_element(config.k_values.begin(), config.k_values.end());
  if (k_max >= radius)
    throw std::invalid_argument("largest K must stay below the ball radius");

  auto rays = geodesic_rays(ball, canon, radius);
  auto sectors = sector_partition(ball, rays);

  // gamma inside the ball, plus extended ray words for exact distance checks
  std::vector<std::uint32_t> gamma_idx;
  std::vector<Word> gamma_words;
  for (const auto& ray : rays)
    for (const auto& w : ray.vertices) {
      auto v = *ball.find(w);
      if (std::find(gamma_idx.begin(), gamma_idx.end(), v) == gamma_idx.end()) {
        gamma_idx.push_back(v);
        gamma_words.push_back(w);
      }
    }
  std::vector<Word> gamma_extended = gamma_words;
  for (const auto& ray : rays) {
    Word w = ray.vertices.back();
    for (int p = radius + 1; p <= radius + k_max + 1; ++p) {
      w = canon.multiply(w, ray.direction);
      gamma_extended.push_back(w);
    }
  }
  auto exact_gamma_distance = [&](const Word& x) {
    int best = std::numeric_limits<int>::max();
    for (const Word& y : gamma_extended) best = std::min(best, canon.distance(x, y));
    return best;
  };

  auto dist_gamma = ball_distance_to_gamma(ball, gamma_idx);

  // fitted decay constants at the requested r
  TransitionKernel kernel(ball, q);
  {
    auto values = green_vector(kernel, ball.root(), config.decay_r, radius);
    auto fit = fit_green_decay(ball, values, config.decay_d_min, config.decay_d_max);
    report.c1_hat = fit.C1_hat;
    report.rho_hat_decay = fit.rho_hat_decay;
  }

  // basepoint selection: nearest-to-root vertex of each sector at exact
  // gamma-distance K (ties by BFS order, i.e. shortlex within a sphere)
  std::vector<std::vector<std::uint32_t>> base(3);
  for (int si = 0; si < 3; ++si) base[si].assign(config.k_values.size(), k_no_vertex);
  for (std::size_t ki = 0; ki < config.k_values.size(); ++ki) {
    const int k = config.k_values[ki];
    for (int si = 0; si < 3; ++si) {
      const auto want = static_cast<SectorLabel>(si + 1);
      for (std::uint32_t v = 0; v < ball.size() && base[si][ki] == k_no_vertex; ++v) {
        if (sectors.label[v] != want) continue;
        if (dist_gamma[v] < k || dist_gamma[v] > k + 2) continue;  // cheap prefilter
        auto w = ball.word(v);
        if (exact_gamma_distance(Word(w.begin(), w.end())) == k) base[si][ki] = v;
      }
      if (base[si][ki] == k_no_vertex)
        throw std::runtime_error("no basepoint at gamma-distance " + std::to_string(k) +
                                 " in sector " + std::to_string(si + 1) +
                                 " (K too large for this ball)");
    }
  }

  // C2: sphere-gamma intersection envelope at the selected basepoints
  double c2 = 0.0;
  for (int si = 0; si < 3; ++si)
    for (std::size_t ki = 0; ki < config.k_values.size(); ++ki) {
      auto w = ball.word(base[si][ki]);
      Word x(w.begin(), w.end());
      int reach = radius - ball.distance_from_root(base[si][ki]);
      for (int n = 1; n <= reach; ++n) {
        int cnt = sphere_intersection_count(canon, x, n, gamma_words);
        c2 = std::max(c2, static_cast<double>(cnt) / n);
      }
    }
  report.c2_hat = c2;
  for (int k : config.k_values)
    report.tail_form.push_back(report.c1_hat * c2 * weighted_geometric_tail(k, report.rho_hat_decay));
  for (std::size_t i = 1; i < report.tail_form.size(); ++i)
    if (!(report.tail_form[i] < report.tail_form[i - 1])) report.tail_decreasing = false;

  // per-point: exact truncated bound and confined ensemble
  const double m = law.mean();
  double rs[1] = {m};
  for (int si = 0; si < 3; ++si) {
    double prev_bound = std::numeric_limits<double>::infinity();
    for (std::size_t ki = 0; ki < config.k_values.size(); ++ki) {
      SectorPointReport point;
      point.sector = si + 1;
      point.k = config.k_values[ki];
      auto bw = ball.word(base[si][ki]);
      point.basepoint.assign(bw.begin(), bw.end());

      auto grid = green_targets_grid(kernel, base[si][ki], gamma_idx,
                                     std::span<const double>(rs, 1), config.depth);
      CompensatedSum bound;
      for (double g : grid[0]) bound.add(g);
      point.exact_bound = bound.value();
      if (!(point.exact_bound < prev_bound)) report.bounds_decreasing = false;
      prev_bound = point.exact_bound;

      // confined ensemble from the basepoint
      std::vector<double> hit(config.runs_per_point), hits(config.runs_per_point);
      std::vector<std::uint8_t> in_gamma(ball.size(), 0);
      for (auto v : gamma_idx) in_gamma[v] = 1;
#pragma omp parallel for schedule(dynamic)
      for (long long run_i = 0; run_i < config.runs_per_point; ++run_i) {
        Rng rng = substream(config.master_seed,
                            "sector-" + std::to_string(si) + "-" + std::to_string(point.k),
                            static_cast<std::uint64_t>(run_i));
        auto tree = sample_gw_tree(law, config.depth, rng, config.population_cap);
        auto run = run_tree_indexed_walk(std::move(tree), canon, q, point.basepoint, rng, &ball);
        // count distinct gamma vertices visited
        std::uint32_t count = 0;
        std::vector<std::uint8_t> seen(gamma_idx.size(), 0);
        for (std::uint32_t v = 0; v < run.tree.size(); ++v) {
          if (!run.alive[v]) continue;
          auto idx = ball.find(run.position[v]);
          if (!idx || !in_gamma[*idx]) continue;
          for (std::size_t gi = 0; gi < gamma_idx.size(); ++gi)
            if (gamma_idx[gi] == *idx && !seen[gi]) {
              seen[gi] = 1;
              ++count;
            }
        }
        hit[run_i] = count > 0 ? 1.0 : 0.0;
        hits[run_i] = count;
      }
      auto ph = mean_stderr(hit);
      auto mh = mean_stderr(hits);
      point.empirical_prob = ph.mean;
      point.empirical_se = ph.stderr_;
      point.mean_hits = mh.mean;
      point.prob_within_bound = point.empirical_prob <= point.exact_bound + 3.0 * ph.stderr_;
      if (!point.prob_within_bound) report.all_within_bound = false;
      report.points.push_back(std::move(point));
    }
  }
  return report;
}

}  // namespace brw
