#include "brw/mtp.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

#include "brw/numeric.hpp"

namespace brw {

const char* mtp_functional_name(MtpFunctional f) {
  switch (f) {
    case MtpFunctional::edge_indicator: return "edge_indicator";
    case MtpFunctional::inverse_degree_transport: return "inverse_degree_transport";
    case MtpFunctional::degree_pair_23: return "degree_pair_23";
  }
  return "unknown";
}

std::pair<double, double> mtp_sides_on_tree(const FamilyTree& tree, MtpFunctional functional) {
  // degrees: root = child count, others = child count + 1
  const std::uint32_t root_children = tree.generation_size(1);
  auto child_count = [&](std::uint32_t v) {
    std::uint32_t c = 0;
    // children of v are contiguous in the next generation; count by scan over
    // that generation's parents (generations are small at the horizons used)
    int g = tree.generation_of(v);
    if (g + 1 > tree.depth()) return c;
    for (std::uint32_t u = tree.level_begin[g + 1]; u < tree.level_begin[g + 2]; ++u)
      if (tree.parent[u] == v) ++c;
    return c;
  };
  auto degree = [&](std::uint32_t v) {
    return v == 0 ? child_count(0) : child_count(v) + 1;
  };

  double left = 0.0, right = 0.0;
  const double deg_o = degree(0);
  // neighbours of the root are exactly its children
  for (std::uint32_t x = tree.level_begin[1]; x < tree.level_begin[2]; ++x) {
    const double deg_x = degree(x);
    switch (functional) {
      case MtpFunctional::edge_indicator:
        left += 1.0;
        right += 1.0;
        break;
      case MtpFunctional::inverse_degree_transport:
        left += 1.0 / deg_o;
        right += 1.0 / deg_x;
        break;
      case MtpFunctional::degree_pair_23:
        if (deg_o == 2 && deg_x == 3) left += 1.0;
        if (deg_x == 2 && deg_o == 3) right += 1.0;
        break;
    }
  }
  (void)root_children;
  return {left, right};
}

MTPTestReport mtp_test(const OffspringLaw& law, MtpFunctional functional, int horizon,
                       std::uint64_t samples, std::uint64_t master_seed, double confidence) {
  if (horizon < 2)
    throw std::invalid_argument("functional range exceeds horizon: need horizon >= 2");
  MTPTestReport report;
  report.functional = mtp_functional_name(functional);
  report.samples = samples;
  // two-sided normal quantile; the 99% default uses z = 2.5758
  if (std::abs(confidence - 0.99) < 1e-9)
    report.z = 2.5758293035489004;
  else if (std::abs(confidence - 0.95) < 1e-9)
    report.z = 1.959963984540054;
  else
    throw std::invalid_argument("unsupported confidence level");

  std::vector<double> lefts(samples), rights(samples), diffs(samples);
  bool exact = true;
#pragma omp parallel for schedule(static) reduction(&& : exact)
  for (long long i = 0; i < static_cast<long long>(samples); ++i) {
    Rng rng = substream(master_seed, "mtp", static_cast<std::uint64_t>(i));
    auto tree = sample_ugw_tree(law, horizon, rng);
    auto [l, r] = mtp_sides_on_tree(tree, functional);
    lefts[i] = l;
    rights[i] = r;
    diffs[i] = l - r;
    exact = exact && (l == r);
  }
  auto ml = mean_stderr(lefts);
  auto mr = mean_stderr(rights);
  auto md = mean_stderr(diffs);
  report.left = ml.mean;
  report.right = mr.mean;
  report.left_se = ml.stderr_;
  report.right_se = mr.stderr_;
  report.diff = md.mean;
  report.diff_se = md.stderr_;
  report.exact = exact;
  report.pass = exact || std::abs(md.mean) <= report.z * md.stderr_;
  return report;
}

TransportDiagnostic prop31_transport_diagnostic(std::span<const Trace> traces, int diameter_bound,
                                                const TrifurcationParams& params) {
  TransportDiagnostic diag;
  diag.traces_total = static_cast<int>(traces.size());
  CompensatedSum sent, received;
  for (const Trace& trace : traces) {
    auto report = find_trifurcation_sets(trace, diameter_bound, params);
    if (report.found.empty()) continue;
    ++diag.traces_with_sets;
    // the found sets stand in for the (budget-capped) diameter-bound union
    std::vector<std::uint8_t> in_a(trace.size(), 0);
    for (const auto& s : report.found)
      for (auto v : s) in_a[v] = 1;
    // multi-source BFS: distance to the nearest transport target
    std::vector<int> dist(trace.size(), -1);
    std::deque<std::uint32_t> q;
    for (std::uint32_t v = 0; v < trace.size(); ++v)
      if (in_a[v]) {
        dist[v] = 0;
        q.push_back(v);
      }
    while (!q.empty()) {
      auto v = q.front();
      q.pop_front();
      for (std::uint32_t i = trace.adj_begin[v]; i < trace.adj_begin[v + 1]; ++i)
        if (dist[trace.adj[i]] < 0) {
          dist[trace.adj[i]] = dist[v] + 1;
          q.push_back(trace.adj[i]);
        }
    }
    auto root = trace.index_of(Word{});
    // sent mass from the root is 1 by construction when A is nonempty
    sent.add(1.0);
    if (!root) continue;
    // received at the root: sum over x of 1{root in C(x)}/|C(x)|; C(x) = the
    // set of nearest A-vertices to x
    if (!in_a[*root]) {
      received.add(0.0);
      continue;
    }
    double rec = 0.0;
    for (std::uint32_t x = 0; x < trace.size(); ++x) {
      if (dist[x] < 0) continue;
      // count nearest A-vertices of x and whether root is among them
      // BFS ring at distance dist[x] around x
      std::deque<std::pair<std::uint32_t, int>> bq{{x, 0}};
      std::vector<std::uint8_t> seen(trace.size(), 0);
      seen[x] = 1;
      int nearest = 0;
      bool hits_root = false;
      while (!bq.empty()) {
        auto [v, d] = bq.front();
        bq.pop_front();
        if (d == dist[x]) {
          if (in_a[v]) {
            ++nearest;
            if (v == *root) hits_root = true;
          }
          continue;
        }
        for (std::uint32_t i = trace.adj_begin[v]; i < trace.adj_begin[v + 1]; ++i)
          if (!seen[trace.adj[i]]) {
            seen[trace.adj[i]] = 1;
            bq.emplace_back(trace.adj[i], d + 1);
          }
      }
      if (hits_root && nearest > 0) rec += 1.0 / nearest;
    }
    received.add(rec);
    diag.max_received = std::max(diag.max_received, rec);
  }
  if (diag.traces_with_sets > 0) {
    diag.mean_sent = sent.value() / diag.traces_with_sets;
    diag.mean_received = received.value() / diag.traces_with_sets;
  }
  return diag;
}

}  // namespace brw
