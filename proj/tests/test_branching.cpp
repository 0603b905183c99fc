#include "doctest.h"

#include <cmath>
#include <map>
#include <stdexcept>

#include "brw/brw_run.hpp"
#include "brw/kernel.hpp"
#include "brw/numeric.hpp"

using namespace brw;

TEST_CASE("offspring law validation") {
  CHECK_THROWS_AS(OffspringLaw::validate({{0, 0.5}, {2, 0.5}}), std::invalid_argument);
  CHECK_THROWS_AS(OffspringLaw::validate({{1, 0.7}, {2, 0.2}}), std::invalid_argument);
  CHECK_THROWS_AS(OffspringLaw::validate({{1, 1.0}}), std::invalid_argument);  // mean 1
  CHECK_THROWS_AS(OffspringLaw::validate({{2, 1.0}}), std::invalid_argument);  // mu_1 = 0
  auto law = OffspringLaw::validate({{1, 0.5}, {2, 0.5}});
  CHECK(law.mean() == doctest::Approx(1.5));
  auto delta2 = OffspringLaw::unit_atom(2);  // relaxed mode admits it
  CHECK(delta2.mean() == doctest::Approx(2.0));
  auto m = OffspringLaw::from_mean(1.37);
  CHECK(m.mean() == doctest::Approx(1.37).epsilon(1e-12));
  CHECK(m.probability(1) > 0.0);
}

TEST_CASE("galton-watson trees: degenerate laws") {
  Rng rng(substream(7, "gw-degenerate", 0));
  auto path = sample_gw_tree(OffspringLaw::unit_atom(1), 5, rng);
  CHECK(path.size() == 6);
  CHECK(path.depth() == 5);
  for (int g = 0; g <= 5; ++g) CHECK(path.generation_size(g) == 1);

  auto binary = sample_gw_tree(OffspringLaw::unit_atom(2), 6, rng);
  for (int g = 0; g <= 6; ++g) CHECK(binary.generation_size(g) == (1u << g));
}

TEST_CASE("generation sizes match the analytic mean") {
  auto law = OffspringLaw::validate({{1, 0.5}, {2, 0.5}});
  const int depth = 10, runs = 10000;
  std::vector<double> sizes;
  for (int i = 0; i < runs; ++i) {
    Rng rng(substream(7, "gw-mean", i));
    sizes.push_back(sample_gw_tree(law, depth, rng).generation_size(depth));
  }
  auto ms = mean_stderr(sizes);
  double expect = std::pow(1.5, depth);
  CHECK(std::abs(ms.mean - expect) <= 3.0 * ms.stderr_);
}

TEST_CASE("population cap reports the generation reached") {
  Rng rng(substream(7, "gw-cap", 0));
  try {
    sample_gw_tree(OffspringLaw::unit_atom(2), 30, rng, 1000);
    FAIL("expected cap");
  } catch (const PopulationCapExceeded& e) {
    CHECK(e.generation_reached > 0);
    CHECK(e.generation_reached <= 10);
  }
}

TEST_CASE("unimodular biasing of the root degree") {
  auto law1 = OffspringLaw::unit_atom(1);
  Rng rng(substream(7, "ugw-root", 0));
  for (int i = 0; i < 50; ++i) {
    auto t = sample_ugw_tree(law1, 2, rng);
    CHECK(t.generation_size(1) == 2);  // single atom biasing: always 2 children
    CHECK(t.flavor == TreeFlavor::ugw);
  }

  auto law = OffspringLaw::validate({{1, 0.5}, {2, 0.5}});
  CHECK(law.biased_root_degree_probability(2) == doctest::Approx(3.0 / 5));
  CHECK(law.biased_root_degree_probability(3) == doctest::Approx(2.0 / 5));
  int deg2 = 0, n = 20000;
  for (int i = 0; i < n; ++i) {
    Rng r2(substream(7, "ugw-root-mc", i));
    if (sample_ugw_tree(law, 1, r2).generation_size(1) == 2) ++deg2;
  }
  double frac = static_cast<double>(deg2) / n;
  double se = std::sqrt(0.6 * 0.4 / n);
  CHECK(std::abs(frac - 0.6) <= 3.0 * se);
}

TEST_CASE("non-root offspring follow the base law") {
  auto law = OffspringLaw::validate({{1, 0.5}, {2, 0.5}});
  std::map<int, int> hist;
  int total = 0;
  for (int i = 0; i < 4000; ++i) {
    Rng rng(substream(7, "ugw-offspring", i));
    auto t = sample_ugw_tree(law, 4, rng);
    // offspring counts of generation-1..2 vertices (all interior and non-root)
    std::vector<int> kids(t.size(), 0);
    for (std::uint32_t v = 1; v < t.size(); ++v) ++kids[t.parent[v]];
    for (std::uint32_t v = t.level_begin[1]; v < t.level_begin[3]; ++v) {
      ++hist[kids[v]];
      ++total;
    }
  }
  for (int k : {1, 2}) {
    double frac = static_cast<double>(hist[k]) / total;
    double se = std::sqrt(0.25 / total);
    CHECK(std::abs(frac - 0.5) <= 4.0 * se);
  }
  CHECK(hist[0] == 0);
  CHECK(hist[3] == 0);
}

TEST_CASE("ugw subtrees couple to plain gw populations") {
  auto law = OffspringLaw::validate({{1, 0.5}, {2, 0.5}});
  // conditioned on the root degree, each root subtree is an ordinary GW tree;
  // its depth-3 generation mean must match m^3 regardless of the root degree
  std::vector<double> sub_sizes;
  for (int i = 0; i < 8000; ++i) {
    Rng rng(substream(7, "ugw-coupling", i));
    auto t = sample_ugw_tree(law, 4, rng);
    // descendants of the first child at depth 4 = its own depth-3 generation
    std::uint32_t first_child = t.level_begin[1];
    std::uint32_t count = 0;
    std::vector<std::uint8_t> in_sub(t.size(), 0);
    in_sub[first_child] = 1;
    for (std::uint32_t v = t.level_begin[1] + 1; v < t.size(); ++v)
      in_sub[v] = in_sub[t.parent[v]];
    for (std::uint32_t v = t.level_begin[4]; v < t.level_begin[5]; ++v) count += in_sub[v];
    sub_sizes.push_back(count);
  }
  auto ms = mean_stderr(sub_sizes);
  CHECK(std::abs(ms.mean - std::pow(1.5, 3)) <= 3.0 * ms.stderr_);
}

TEST_CASE("tree-indexed walk fundamentals") {
  auto pres = GroupPresentation::free_rank2();
  Canonicalizer canon(pres);
  auto q = DrivingMeasure::uniform_lazy(pres, 0.2);
  auto law = OffspringLaw::validate({{1, 0.5}, {2, 0.5}});

  SUBCASE("root keeps the start position") {
    for (int i = 0; i < 20; ++i) {
      Rng rng(substream(7, "walk-root", i));
      auto tree = sample_gw_tree(law, 3, rng);
      auto run = run_tree_indexed_walk(std::move(tree), canon, q, pres.parse_word("ab"), rng);
      CHECK(run.position[0] == pres.parse_word("ab"));
      CHECK(run.alive_count() == run.tree.size());
    }
  }
  SUBCASE("depth-1 children distribute as q") {
    int stay = 0, total = 0;
    for (int i = 0; i < 20000; ++i) {
      Rng rng(substream(7, "walk-step", i));
      auto tree = sample_gw_tree(OffspringLaw::unit_atom(1), 1, rng);
      auto run = run_tree_indexed_walk(std::move(tree), canon, q, {}, rng);
      if (run.position[1].empty()) ++stay;
      ++total;
    }
    double frac = static_cast<double>(stay) / total;
    CHECK(std::abs(frac - 0.2) <= 3.0 * std::sqrt(0.2 * 0.8 / total));
  }
  SUBCASE("positions compose along tree edges") {
    Rng rng(substream(7, "walk-compose", 0));
    auto tree = sample_gw_tree(law, 5, rng);
    auto run = run_tree_indexed_walk(std::move(tree), canon, q, {}, rng);
    for (std::uint32_t v = 1; v < run.tree.size(); ++v) {
      const Word& parent = run.position[run.tree.parent[v]];
      if (run.label[v] == k_identity_label)
        CHECK(run.position[v] == parent);
      else
        CHECK(run.position[v] == canon.multiply(parent, static_cast<Gen>(run.label[v])));
    }
  }
}

TEST_CASE("generation marginals match the exact kernel power") {
  auto pres = GroupPresentation::free_rank2();
  Canonicalizer canon(pres);
  auto ball = CayleyBall::build(canon, 5);
  auto q = DrivingMeasure::uniform_lazy(pres, 0.2);
  TransitionKernel kernel(ball, q);
  const int n = 3;
  auto exact = n_step_distribution(kernel, ball.root(), n);

  std::vector<double> empirical(ball.size(), 0.0);
  double samples = 0;
  for (int i = 0; i < 10000; ++i) {
    Rng rng(substream(7, "walk-marginal", i));
    auto tree = sample_gw_tree(OffspringLaw::validate({{1, 0.5}, {2, 0.5}}), n, rng);
    auto run = run_tree_indexed_walk(std::move(tree), canon, q, {}, rng);
    for (std::uint32_t v = run.tree.level_begin[n]; v < run.tree.level_begin[n + 1]; ++v) {
      empirical[*ball.find(run.position[v])] += 1.0;
      samples += 1.0;
    }
  }
  double tv = 0.0;
  for (std::uint32_t v = 0; v < ball.size(); ++v)
    tv += std::abs(empirical[v] / samples - exact.mass[v]);
  CHECK(tv / 2.0 <= 0.02);
}

TEST_CASE("trace extraction") {
  auto pres = GroupPresentation::free_rank2();
  Canonicalizer canon(pres);
  auto q = DrivingMeasure::uniform_lazy(pres, 0.2);

  SUBCASE("single-path trace is the walk range and stays connected") {
    Rng rng(substream(7, "trace-path", 3));
    auto tree = sample_gw_tree(OffspringLaw::unit_atom(1), 40, rng);
    auto run = run_tree_indexed_walk(std::move(tree), canon, q, {}, rng);
    auto trace = extract_trace(run);
    CHECK(trace.index_of(Word{}).has_value());
    // connectivity by BFS over the CSR adjacency
    std::vector<std::uint8_t> seen(trace.size(), 0);
    std::vector<std::uint32_t> stack{*trace.index_of(Word{})};
    seen[stack[0]] = 1;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto i = trace.adj_begin[v]; i < trace.adj_begin[v + 1]; ++i)
        if (!seen[trace.adj[i]]) {
          seen[trace.adj[i]] = 1;
          stack.push_back(trace.adj[i]);
        }
    }
    for (auto s : seen) CHECK(s == 1);
    // multiplicities add up to the number of particles
    std::uint64_t visits = 0;
    for (auto m : trace.multiplicity) visits += m;
    CHECK(visits == run.tree.size());
  }

  SUBCASE("identity labels add multiplicity, not edges") {
    // a one-child tree whose only step is lazy: trace has 1 vertex, no edges
    FamilyTree tree;
    tree.parent = {0, 0};
    tree.level_begin = {0, 1, 2};
    BRWRun run;
    run.tree = tree;
    run.label = {k_identity_label, k_identity_label};
    run.position = {Word{}, Word{}};
    run.alive = {1, 1};
    run.start = {};
    auto trace = extract_trace(run);
    CHECK(trace.size() == 1);
    CHECK(trace.edges.empty());
    CHECK(trace.multiplicity[0] == 2);
  }
}

TEST_CASE("regime classification") {
  const double rho = 2.0 * std::sqrt(3.0) / 4.0;
  auto c1 = classify_regime(1.1, rho);
  CHECK(c1.regime == Regime::transient);
  CHECK(c1.m_rho == doctest::Approx(0.9526).epsilon(1e-3));
  auto c2 = classify_regime(1.0 / rho, rho);
  CHECK(c2.regime == Regime::transient);  // boundary case is transient
  CHECK(c2.critical);
  auto c3 = classify_regime(1.3, rho);
  CHECK(c3.regime == Regime::recurrent);
  CHECK(c3.m_rho == doctest::Approx(1.1258).epsilon(1e-3));
}

TEST_CASE("visit profile on an empty target is all zeros") {
  auto pres = GroupPresentation::free_rank2();
  Canonicalizer canon(pres);
  auto q = DrivingMeasure::uniform_lazy(pres, 0.2);
  Rng rng(substream(7, "profile-empty", 0));
  auto tree = sample_gw_tree(OffspringLaw::validate({{1, 0.5}, {2, 0.5}}), 5, rng);
  std::vector<BRWRun> runs;
  runs.push_back(run_tree_indexed_walk(std::move(tree), canon, q, {}, rng));
  auto profile = visit_profile(runs, {});
  for (auto c : profile.counts[0]) CHECK(c == 0);
  CHECK(profile.last_visit_generation[0] == -1);
  CHECK(profile.vacated[0] == 1);
}

TEST_CASE("expected visits identity against the exact kernel series") {
  auto pres = GroupPresentation::free_rank2();
  Canonicalizer canon(pres);
  auto ball = CayleyBall::build(canon, 7);
  auto q = DrivingMeasure::uniform_lazy(pres, 0.2);
  TransitionKernel kernel(ball, q);
  const int depth = 6;
  const double m = 1.2;
  auto law = OffspringLaw::validate({{1, 0.8}, {2, 0.2}});
  REQUIRE(law.mean() == doctest::Approx(m));

  std::vector<Word> targets{Word{}, pres.parse_word("a"), pres.parse_word("ab")};
  // exact truncated Green at r = m
  std::vector<double> expect(targets.size(), 0.0);
  {
    std::vector<double> cur(ball.size(), 0.0), next(ball.size(), 0.0);
    cur[0] = 1.0;
    double mn = 1.0;
    for (int n = 0; n <= depth; ++n) {
      for (std::size_t t = 0; t < targets.size(); ++t)
        expect[t] += mn * cur[*ball.find(targets[t])];
      kernel.apply(cur, next);
      cur.swap(next);
      mn *= m;
    }
  }

  const int runs_n = 4000;
  std::vector<std::vector<double>> counts(targets.size(), std::vector<double>(runs_n, 0.0));
  for (int i = 0; i < runs_n; ++i) {
    Rng rng(substream(7, "visits-identity", i));
    auto tree = sample_gw_tree(law, depth, rng);
    auto run = run_tree_indexed_walk(std::move(tree), canon, q, {}, rng);
    for (std::uint32_t v = 0; v < run.tree.size(); ++v)
      for (std::size_t t = 0; t < targets.size(); ++t)
        if (run.position[v] == targets[t]) counts[t][i] += 1.0;
  }
  for (std::size_t t = 0; t < targets.size(); ++t) {
    auto ms = mean_stderr(counts[t]);
    CHECK(std::abs(ms.mean - expect[t]) <= 3.0 * ms.stderr_);
  }
}

TEST_CASE("identical seeds reproduce identical runs") {
  auto pres = GroupPresentation::surface_genus2();
  Canonicalizer canon(pres);
  auto q = DrivingMeasure::uniform_lazy(pres, 0.1);
  auto law = OffspringLaw::validate({{1, 0.6}, {2, 0.4}});
  auto make = [&]() {
    Rng rng(substream(99, "determinism", 5));
    auto tree = sample_gw_tree(law, 8, rng);
    return run_tree_indexed_walk(std::move(tree), canon, q, {}, rng);
  };
  auto r1 = make();
  auto r2 = make();
  REQUIRE(r1.tree.size() == r2.tree.size());
  CHECK(r1.position == r2.position);
  CHECK(r1.label == r2.label);
}
