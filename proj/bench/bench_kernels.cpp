// Timing comparison of the OpenMP kernels against their serial reference
// implementations: kernel application, power iteration, and ensemble runs.
#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "brw/brw_run.hpp"
#include "brw/kernel.hpp"
#include "brw/spectral.hpp"

using namespace brw;
namespace chrono = std::chrono;

namespace {

double ms_since(chrono::steady_clock::time_point t0) {
  return chrono::duration<double, std::milli>(chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  auto pres = GroupPresentation::free_rank2();
  Canonicalizer canon(pres);
  std::printf("building free_rank2 ball radius 11...\n");
  auto ball = CayleyBall::build(canon, 11);
  std::printf("  %u vertices\n", ball.size());
  auto q = DrivingMeasure::uniform_lazy(pres, 0.2);
  TransitionKernel kernel(ball, q);

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (no OpenMP)\n");
#endif

  std::vector<double> in(ball.size(), 1.0 / ball.size()), out(ball.size());
  const int reps = 20;

  auto t0 = chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) kernel.apply_serial(in, out);
  double serial_ms = ms_since(t0) / reps;

  t0 = chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) kernel.apply(in, out);
  double parallel_ms = ms_since(t0) / reps;

  std::printf("kernel apply:   serial %8.2f ms   parallel %8.2f ms   speedup %.2fx\n", serial_ms,
              parallel_ms, serial_ms / parallel_ms);

  // bitwise agreement sanity
  std::vector<double> out2(ball.size());
  kernel.apply_serial(in, out2);
  kernel.apply(in, out);
  bool same = out == out2;
  std::printf("bitwise equal:  %s\n", same ? "yes" : "NO");

  t0 = chrono::steady_clock::now();
  double lam = truncated_eigenvalue(kernel, ball.radius());
  std::printf("power iteration: %8.2f ms (lambda = %.6f)\n", ms_since(t0), lam);

  // ensemble runner: replica-parallel branching runs
  auto pres2 = GroupPresentation::surface_genus2();
  Canonicalizer canon2(pres2);
  auto q2 = DrivingMeasure::uniform_lazy(pres2, 0.02);
  auto law = OffspringLaw::validate({{1, 0.6}, {2, 0.4}});
  const int n_runs = 200;

  t0 = chrono::steady_clock::now();
  std::vector<std::uint32_t> sizes_serial(n_runs);
  for (int i = 0; i < n_runs; ++i) {
    Rng rng = substream(1, "bench", i);
    auto tree = sample_gw_tree(law, 20, rng);
    auto run = run_tree_indexed_walk(std::move(tree), canon2, q2, {}, rng);
    sizes_serial[i] = extract_trace(run).size();
  }
  double ens_serial = ms_since(t0);

  t0 = chrono::steady_clock::now();
  std::vector<std::uint32_t> sizes_parallel(n_runs);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n_runs; ++i) {
    Rng rng = substream(1, "bench", i);
    auto tree = sample_gw_tree(law, 20, rng);
    auto run = run_tree_indexed_walk(std::move(tree), canon2, q2, {}, rng);
    sizes_parallel[i] = extract_trace(run).size();
  }
  double ens_parallel = ms_since(t0);

  std::printf("ensemble (%d runs): serial %8.2f ms   parallel %8.2f ms   speedup %.2fx\n", n_runs,
              ens_serial, ens_parallel, ens_serial / ens_parallel);
  std::printf("replica results identical: %s\n", sizes_serial == sizes_parallel ? "yes" : "NO");
  return same && sizes_serial == sizes_parallel ? 0 : 1;
}
