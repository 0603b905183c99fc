#include "brw/numeric.hpp"

#include <algorithm>

namespace brw {

namespace {

template <class BlockFn>
double blocked_sum(std::size_t n, BlockFn&& block_partial) {
  const std::size_t nblocks = (n + k_sum_block - 1) / k_sum_block;
  std::vector<double> partial(nblocks, 0.0);
#pragma omp parallel for schedule(static)
  for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
    std::size_t lo = static_cast<std::size_t>(b) * k_sum_block;
    std::size_t hi = std::min(n, lo + k_sum_block);
    partial[b] = block_partial(lo, hi);
  }
  CompensatedSum total;
  for (double p : partial) total.add(p);
  return total.value();
}

}  // namespace

double deterministic_sum(std::span<const double> xs) {
  return blocked_sum(xs.size(), [&](std::size_t lo, std::size_t hi) {
    CompensatedSum s;
    for (std::size_t i = lo; i < hi; ++i) s.add(xs[i]);
    return s.value();
  });
}

double deterministic_dot(std::span<const double> a, std::span<const double> b) {
  return blocked_sum(a.size(), [&](std::size_t lo, std::size_t hi) {
    CompensatedSum s;
    for (std::size_t i = lo; i < hi; ++i) s.add(a[i] * b[i]);
    return s.value();
  });
}

LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
  LinearFit f;
  f.n = x.size();
  if (x.size() < 2) return f;
  CompensatedSum sx, sy;
  for (double v : x) sx.add(v);
  for (double v : y) sy.add(v);
  const double n = static_cast<double>(x.size());
  const double mx = sx.value() / n, my = sy.value() / n;
  CompensatedSum sxx, sxy, syy;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx.add((x[i] - mx) * (x[i] - mx));
    sxy.add((x[i] - mx) * (y[i] - my));
    syy.add((y[i] - my) * (y[i] - my));
  }
  const double vxx = sxx.value(), vxy = sxy.value(), vyy = syy.value();
  if (vxx == 0.0) return f;
  f.slope = vxy / vxx;
  f.intercept = my - f.slope * mx;
  CompensatedSum ssr;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double r = y[i] - (f.intercept + f.slope * x[i]);
    ssr.add(r * r);
  }
  f.r_squared = (vyy == 0.0) ? 1.0 : 1.0 - ssr.value() / vyy;
  if (x.size() > 2) f.slope_stderr = std::sqrt(ssr.value() / (n - 2.0) / vxx);
  return f;
}

MeanStderr mean_stderr(std::span<const double> xs) {
  MeanStderr m;
  m.n = xs.size();
  if (xs.empty()) return m;
  CompensatedSum s;
  for (double v : xs) s.add(v);
  m.mean = s.value() / static_cast<double>(xs.size());
  if (xs.size() < 2) return m;
  CompensatedSum q;
  for (double v : xs) q.add((v - m.mean) * (v - m.mean));
  double var = q.value() / static_cast<double>(xs.size() - 1);
  m.stderr_ = std::sqrt(var / static_cast<double>(xs.size()));
  return m;
}

}  // namespace brw
