#include "brw/brw_run.hpp"

#include <algorithm>
#include <stdexcept>

namespace brw {

std::uint32_t BRWRun::alive_count() const {
  std::uint32_t n = 0;
  for (auto a : alive) n += a;
  return n;
}

BRWRun run_tree_indexed_walk(FamilyTree tree, const Canonicalizer& canon, const DrivingMeasure& q,
                             const Word& start, Rng& rng, const CayleyBall* confine) {
  BRWRun run;
  run.start = canon.canonical(start);
  const std::uint32_t n = tree.size();
  run.label.assign(n, k_identity_label);
  run.position.assign(n, Word{});
  run.alive.assign(n, 1);
  run.position[0] = run.start;
  if (confine && !confine->find(run.start))
    throw std::invalid_argument("start position outside the confinement ball");

  // step distribution over S + {e}, inverse CDF in generator order
  const int ngen = static_cast<int>(q.generator_weight.size());
  std::vector<double> cdf(ngen + 1);
  double acc = 0.0;
  for (int g = 0; g < ngen; ++g) {
    acc += q.generator_weight[g];
    cdf[g] = acc;
  }
  cdf[ngen] = 1.0;  // identity takes the rest

  run.tree = std::move(tree);
  for (std::uint32_t v = 1; v < n; ++v) {
    std::uint32_t p = run.tree.parent[v];
    if (!run.alive[p]) {
      run.alive[v] = 0;
      continue;
    }
    double u = rng.uniform01();
    int g = 0;
    while (g < ngen && u >= cdf[g]) ++g;
    if (g == ngen) {
      run.label[v] = k_identity_label;
      run.position[v] = run.position[p];
    } else {
      run.label[v] = static_cast<std::uint8_t>(g);
      run.position[v] = canon.multiply(run.position[p], static_cast<Gen>(g));
      if (confine && !confine->find(run.position[v])) {
        run.alive[v] = 0;
        run.position[v].clear();
      }
    }
  }
  return run;
}

int Trace::max_distance() const {
  int m = 0;
  for (int d : dist_root) m = std::max(m, d);
  return m;
}

std::optional<std::uint32_t> Trace::index_of(const Word& w) const {
  auto it = std::lower_bound(vertex_words.begin(), vertex_words.end(), w, shortlex_less);
  if (it == vertex_words.end() || *it != w) return std::nullopt;
  return static_cast<std::uint32_t>(it - vertex_words.begin());
}

Trace extract_trace(const BRWRun& run) {
  Trace trace;
  // collect visited positions (alive particles only)
  std::vector<const Word*> visits;
  visits.reserve(run.position.size());
  for (std::uint32_t v = 0; v < run.position.size(); ++v)
    if (run.alive[v]) visits.push_back(&run.position[v]);
  std::vector<Word> sorted;
  sorted.reserve(visits.size());
  for (auto* w : visits) sorted.push_back(*w);
  std::sort(sorted.begin(), sorted.end(), shortlex_less);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  trace.vertex_words = std::move(sorted);
  trace.multiplicity.assign(trace.size(), 0);
  trace.dist_root.resize(trace.size());
  for (std::uint32_t i = 0; i < trace.size(); ++i)
    trace.dist_root[i] = static_cast<int>(trace.vertex_words[i].size());
  for (auto* w : visits) ++trace.multiplicity[*trace.index_of(*w)];

  // traversed Cayley edges: tree edges with a non-identity label
  for (std::uint32_t v = 1; v < run.position.size(); ++v) {
    if (!run.alive[v] || run.label[v] == k_identity_label) continue;
    auto a = *trace.index_of(run.position[run.tree.parent[v]]);
    auto b = *trace.index_of(run.position[v]);
    if (a == b) continue;
    trace.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(trace.edges.begin(), trace.edges.end());
  trace.edges.erase(std::unique(trace.edges.begin(), trace.edges.end()), trace.edges.end());

  // CSR adjacency
  std::vector<std::uint32_t> deg(trace.size(), 0);
  for (auto [a, b] : trace.edges) {
    ++deg[a];
    ++deg[b];
  }
  trace.adj_begin.assign(trace.size() + 1, 0);
  for (std::uint32_t i = 0; i < trace.size(); ++i) trace.adj_begin[i + 1] = trace.adj_begin[i] + deg[i];
  trace.adj.resize(trace.edges.size() * 2);
  std::vector<std::uint32_t> fill(trace.adj_begin.begin(), trace.adj_begin.end() - 1);
  for (auto [a, b] : trace.edges) {
    trace.adj[fill[a]++] = b;
    trace.adj[fill[b]++] = a;
  }
  return trace;
}

RegimeClassification classify_regime(double m, double rho_hat, double rho_uncertainty) {
  if (m <= 1.0) throw std::invalid_argument("classification requires m > 1");
  if (rho_hat <= 0.0 || rho_hat >= 1.0)
    throw std::invalid_argument("classification requires rho in (0,1)");
  RegimeClassification c;
  c.m_rho = m * rho_hat;
  c.margin = m * rho_uncertainty;
  c.regime = (c.m_rho <= 1.0) ? Regime::transient : Regime::recurrent;
  c.critical = std::abs(c.m_rho - 1.0) <= c.margin;
  return c;
}

double OccupancyProfile::vacated_fraction() const {
  if (vacated.empty()) return 0.0;
  double s = 0.0;
  for (auto v : vacated) s += v;
  return s / static_cast<double>(vacated.size());
}

OccupancyProfile visit_profile(std::span<const BRWRun> runs, std::span<const Word> target_set,
                               int trailing_window) {
  OccupancyProfile profile;
  profile.window = trailing_window;
  std::vector<Word> targets(target_set.begin(), target_set.end());
  std::sort(targets.begin(), targets.end(), shortlex_less);
  auto in_target = [&](const Word& w) {
    auto it = std::lower_bound(targets.begin(), targets.end(), w, shortlex_less);
    return it != targets.end() && *it == w;
  };
  for (const BRWRun& run : runs) {
    int depth = run.tree.depth();
    profile.depth = std::max(profile.depth, depth);
    std::vector<std::uint32_t> counts(depth + 1, 0);
    for (std::uint32_t v = 0; v < run.tree.size(); ++v) {
      if (!run.alive[v]) continue;
      if (in_target(run.position[v])) ++counts[run.tree.generation_of(v)];
    }
    int last = -1;
    for (int g = 0; g <= depth; ++g)
      if (counts[g] > 0) last = g;
    bool vac = last < std::max(0, depth - trailing_window + 1);
    profile.counts.push_back(std::move(counts));
    profile.last_visit_generation.push_back(last);
    profile.vacated.push_back(vac ? 1 : 0);
  }
  return profile;
}

}  // namespace brw
