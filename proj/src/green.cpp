#include "brw/green.hpp"

#include <cmath>
#include <stdexcept>

namespace brw {

std::vector<double> green_vector(const TransitionKernel& kernel, std::uint32_t x, double r,
                                 int N) {
  const CayleyBall& ball = kernel.ball();
  if (r <= 0) throw std::invalid_argument("green radius r must be positive");
  if (N < 0) N = ball.radius() - ball.distance_from_root(x);
  const std::uint32_t n = ball.size();
  std::vector<double> cur(n, 0.0), next(n, 0.0);
  std::vector<double> acc(n, 0.0), comp(n, 0.0);
  cur[x] = 1.0;
  double rn = 1.0;
  for (int step = 0;; ++step) {
    // acc += rn * cur, Neumaier per vertex
#pragma omp parallel for schedule(static)
    for (long long v = 0; v < static_cast<long long>(n); ++v) {
      double val = rn * cur[v];
      double t = acc[v] + val;
      if (std::abs(acc[v]) >= std::abs(val))
        comp[v] += (acc[v] - t) + val;
      else
        comp[v] += (val - t) + acc[v];
      acc[v] = t;
    }
    if (step == N) break;
    kernel.apply(cur, next);
    cur.swap(next);
    rn *= r;
  }
#pragma omp parallel for schedule(static)
  for (long long v = 0; v < static_cast<long long>(n); ++v) acc[v] += comp[v];
  return acc;
}

GreenEstimate green_function(const TransitionKernel& kernel, std::uint32_t x, std::uint32_t y,
                             double r, int N, double rho_upper) {
  const CayleyBall& ball = kernel.ball();
  if (r <= 0) throw std::invalid_argument("green radius r must be positive");
  // sweep from the endpoint closer to the root: p^(n)(x,y) = p^(n)(y,x)
  std::uint32_t from = x, to = y;
  if (ball.distance_from_root(y) < ball.distance_from_root(x)) std::swap(from, to);
  int max_exact = ball.radius() - ball.distance_from_root(from);
  if (N < 0) N = max_exact;
  GreenEstimate est;
  est.r = r;
  est.truncation = N;
  est.exact_dp = N <= max_exact;
  est.value = green_vector(kernel, from, r, N)[to];
  if (rho_upper > 0.0 && r * rho_upper < 1.0) {
    double rr = r * rho_upper;
    est.tail_bound = std::pow(rr, N + 1) / (1.0 - rr);
  }
  return est;
}

double GreenBackend::green(const Word& x, const Word& y, double r) const {
  Word ys[1] = {y};
  return green_many(x, std::span<const Word>(ys, 1), r)[0];
}

std::vector<std::vector<double>> GreenBackend::green_many_grid(const Word& x,
                                                               std::span<const Word> ys,
                                                               std::span<const double> rs) const {
  std::vector<std::vector<double>> out;
  out.reserve(rs.size());
  for (double r : rs) out.push_back(green_many(x, ys, r));
  return out;
}

std::vector<std::vector<double>> green_targets_grid(const TransitionKernel& kernel,
                                                    std::uint32_t x,
                                                    std::span<const std::uint32_t> targets,
                                                    std::span<const double> rs, int N) {
  const CayleyBall& ball = kernel.ball();
  if (N < 0) N = ball.radius() - ball.distance_from_root(x);
  const std::uint32_t n = ball.size();
  std::vector<double> cur(n, 0.0), next(n, 0.0);
  cur[x] = 1.0;
  std::vector<std::vector<CompensatedSum>> acc(rs.size(),
                                               std::vector<CompensatedSum>(targets.size()));
  std::vector<double> rn(rs.size(), 1.0);
  for (int step = 0;; ++step) {
    for (std::size_t ri = 0; ri < rs.size(); ++ri)
      for (std::size_t ti = 0; ti < targets.size(); ++ti)
        acc[ri][ti].add(rn[ri] * cur[targets[ti]]);
    if (step == N) break;
    kernel.apply(cur, next);
    cur.swap(next);
    for (std::size_t ri = 0; ri < rs.size(); ++ri) rn[ri] *= rs[ri];
  }
  std::vector<std::vector<double>> out(rs.size(), std::vector<double>(targets.size()));
  for (std::size_t ri = 0; ri < rs.size(); ++ri)
    for (std::size_t ti = 0; ti < targets.size(); ++ti) out[ri][ti] = acc[ri][ti].value();
  return out;
}

BallGreenBackend::BallGreenBackend(const TransitionKernel& kernel, const Canonicalizer& canon,
                                   int truncation)
    : kernel_(&kernel), canon_(&canon), truncation_(truncation) {}

std::vector<double> BallGreenBackend::green_many(const Word& x, std::span<const Word> ys,
                                                 double r) const {
  double rs[1] = {r};
  return green_many_grid(x, ys, std::span<const double>(rs, 1))[0];
}

std::vector<std::vector<double>> BallGreenBackend::green_many_grid(
    const Word& x, std::span<const Word> ys, std::span<const double> rs) const {
  const CayleyBall& ball = kernel_->ball();
  auto xi = ball.find(canon_->canonical(x));
  if (!xi) throw std::invalid_argument("green basepoint outside the ball");
  std::vector<std::uint32_t> targets;
  targets.reserve(ys.size());
  for (const Word& y : ys) {
    auto yi = ball.find(canon_->canonical(y));
    if (!yi) throw std::invalid_argument("green target outside the ball");
    targets.push_back(*yi);
  }
  return green_targets_grid(*kernel_, *xi, targets, rs, truncation_);
}

TreeGreenBackend::TreeGreenBackend(const Canonicalizer& canon, const DrivingMeasure& q)
    : canon_(&canon) {
  if (!canon.presentation().relators().empty())
    throw std::invalid_argument("closed-form tree Green functions require a free presentation");
  degree_ = canon.presentation().generator_count();
  q_id_ = q.identity_weight;
  q_gen_ = q.generator_weight.at(0);
  for (double w : q.generator_weight)
    if (w != q_gen_)
      throw std::invalid_argument("closed-form tree Green functions require uniform weights");
  // r R solves (1 - r q_e)^2 = 4 (d-1) (r q_s)^2, smallest positive root
  radius_of_convergence_ = 1.0 / (q_id_ + 2.0 * std::sqrt(static_cast<double>(degree_ - 1)) * q_gen_);
}

double TreeGreenBackend::first_passage(double r) const {
  const double d = degree_;
  const double disc = (1.0 - r * q_id_) * (1.0 - r * q_id_) - 4.0 * (d - 1.0) * (r * q_gen_) * (r * q_gen_);
  if (disc < -1e-12) throw std::invalid_argument("r beyond the radius of convergence");
  return ((1.0 - r * q_id_) - std::sqrt(std::max(0.0, disc))) / (2.0 * (d - 1.0) * r * q_gen_);
}

double TreeGreenBackend::green_at_distance(int dist, double r) const {
  const double f = first_passage(r);
  const double green_diag = 1.0 / (1.0 - r * q_id_ - degree_ * r * q_gen_ * f);
  return std::pow(f, dist) * green_diag;
}

std::vector<double> TreeGreenBackend::green_many(const Word& x, std::span<const Word> ys,
                                                 double r) const {
  std::vector<double> out;
  out.reserve(ys.size());
  for (const Word& y : ys) out.push_back(green_at_distance(canon_->distance(x, y), r));
  return out;
}

VanishingTable check_green_vanishing(const TransitionKernel& kernel, double r, int N) {
  const CayleyBall& ball = kernel.ball();
  if (N < 0) N = ball.radius();
  auto values = green_vector(kernel, ball.root(), r, N);
  VanishingTable table;
  table.r = r;
  table.truncation = N;
  table.max_by_distance.assign(ball.radius() + 1, 0.0);
  for (std::uint32_t v = 0; v < ball.size(); ++v) {
    int d = ball.distance_from_root(v);
    table.max_by_distance[d] = std::max(table.max_by_distance[d], values[v]);
  }
  table.pass = true;
  for (int d = 2; d < ball.radius(); ++d)
    if (!(table.max_by_distance[d] > table.max_by_distance[d + 1])) table.pass = false;
  return table;
}

namespace {

DecayFit fit_from_points(std::span<const double> dist, std::span<const double> logs) {
  if (dist.size() < 5) throw std::invalid_argument("decay fit needs at least 5 distinct distances");
  auto fit = linear_fit(dist, logs);
  DecayFit out;
  out.C1_hat = std::exp(fit.intercept);
  out.rho_hat_decay = std::exp(fit.slope);
  out.r_squared = fit.r_squared;
  out.distances_used = static_cast<int>(dist.size());
  return out;
}

}  // namespace

DecayFit fit_green_decay(const CayleyBall& ball, std::span<const double> green_values, int d_min,
                         int d_max) {
  std::vector<double> dist, logs;
  for (int d = d_min; d <= d_max && d <= ball.radius(); ++d) {
    CompensatedSum s;
    std::size_t count = 0;
    for (std::uint32_t v = ball.sphere_begin(d); v < ball.sphere_begin(d + 1); ++v) {
      if (green_values[v] > 0.0) {
        s.add(std::log(green_values[v]));
        ++count;
      }
    }
    if (count == 0) continue;
    dist.push_back(d);
    logs.push_back(s.value() / static_cast<double>(count));
  }
  return fit_from_points(dist, logs);
}

DecayFit fit_green_decay(const GreenBackend& backend, const Canonicalizer& canon, double r,
                         int d_min, int d_max) {
  // one representative per distance along a geodesic ray of generator powers
  std::vector<Word> targets;
  Word w;
  for (int d = 0; d <= d_max; ++d) {
    if (d >= d_min) targets.push_back(w);
    w = canon.multiply(w, static_cast<Gen>(0));
  }
  auto values = backend.green_many(Word{}, targets, r);
  std::vector<double> dist, logs;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (values[i] <= 0.0) continue;
    dist.push_back(static_cast<double>(d_min + static_cast<int>(i)));
    logs.push_back(std::log(values[i]));
  }
  return fit_from_points(dist, logs);
}

}  // namespace brw
