#include "brw/trifurcation.hpp"

#include <algorithm>
#include <deque>

namespace brw {

namespace {

// trace-metric BFS truncated at depth `bound`; returns (vertex, distance)
void bounded_bfs(const Trace& trace, std::uint32_t src, int bound,
                 std::vector<std::pair<std::uint32_t, int>>& out,
                 std::vector<int>& scratch_dist) {
  out.clear();
  std::deque<std::uint32_t> q{src};
  scratch_dist[src] = 0;
  out.emplace_back(src, 0);
  while (!q.empty()) {
    std::uint32_t v = q.front();
    q.pop_front();
    if (scratch_dist[v] == bound) continue;
    for (std::uint32_t i = trace.adj_begin[v]; i < trace.adj_begin[v + 1]; ++i) {
      std::uint32_t u = trace.adj[i];
      if (scratch_dist[u] >= 0) continue;
      scratch_dist[u] = scratch_dist[v] + 1;
      out.emplace_back(u, scratch_dist[u]);
      q.push_back(u);
    }
  }
  for (auto [v, d] : out) scratch_dist[v] = -1;
}

}  // namespace

int punctured_component_count(const Trace& trace, std::span<const std::uint32_t> removed,
                              int horizon) {
  std::vector<std::uint8_t> blocked(trace.size(), 0);
  for (auto v : removed) blocked[v] = 1;
  std::vector<std::uint8_t> seen(trace.size(), 0);
  std::vector<std::uint32_t> stack;
  int reaching = 0;
  for (std::uint32_t seed = 0; seed < trace.size(); ++seed) {
    if (blocked[seed] || seen[seed]) continue;
    bool reaches = false;
    seen[seed] = 1;
    stack.assign(1, seed);
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      if (trace.dist_root[v] >= horizon) reaches = true;
      for (std::uint32_t i = trace.adj_begin[v]; i < trace.adj_begin[v + 1]; ++i) {
        auto u = trace.adj[i];
        if (blocked[u] || seen[u]) continue;
        seen[u] = 1;
        stack.push_back(u);
      }
    }
    if (reaches) ++reaching;
  }
  return reaching;
}

TrifurcationReport find_trifurcation_sets(const Trace& trace, int n,
                                          const TrifurcationParams& params) {
  if (n < 0) throw std::invalid_argument("diameter bound must be nonnegative");
  TrifurcationReport report;
  report.diameter_bound = n;
  report.horizon = params.horizon < 0 ? trace.max_distance() : params.horizon;
  report.exhaustive = true;

  std::vector<int> scratch(trace.size(), -1);
  std::vector<std::pair<std::uint32_t, int>> ball, around;
  std::vector<int> local(trace.size(), -1);

  auto verify = [&](std::span<const std::uint32_t> candidate) {
    return punctured_component_count(trace, candidate, report.horizon) >= params.min_components;
  };

  bool stop = false;  // budget blown or enough sets collected
  for (std::uint32_t seed = 0; seed < trace.size() && !stop; ++seed) {
    bounded_bfs(trace, seed, n, ball, scratch);
    std::vector<std::uint32_t> members;
    for (auto [v, d] : ball)
      if (v >= seed) members.push_back(v);
    std::sort(members.begin(), members.end());
    for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> dist(members.size(), std::vector<int>(members.size(), n + 1));
    for (std::size_t i = 0; i < members.size(); ++i) {
      bounded_bfs(trace, members[i], n, around, scratch);
      for (auto [v, d] : around)
        if (local[v] >= 0 && v >= seed) dist[i][local[v]] = d;
    }

    std::vector<std::uint32_t> subset{seed};
    std::vector<std::uint32_t> ext;
    std::vector<std::uint8_t> in_subset(members.size(), 0), in_ext(members.size(), 0);
    in_subset[local[seed]] = 1;
    for (std::uint32_t i = trace.adj_begin[seed]; i < trace.adj_begin[seed + 1]; ++i) {
      auto u = trace.adj[i];
      if (u > seed && local[u] >= 0 && !in_ext[local[u]]) {
        ext.push_back(u);
        in_ext[local[u]] = 1;
      }
    }

    auto consider = [&](std::span<const std::uint32_t> s) {
      if (++report.candidates_examined > params.budget) {
        report.exhaustive = false;
        stop = true;
        return;
      }
      if (verify(s)) {
        report.found.emplace_back(s.begin(), s.end());
        if (report.found.size() >= params.max_found) {
          report.exhaustive = false;  // collection stopped early
          stop = true;
        }
      }
    };

    consider(subset);

    auto extend = [&](auto&& self, std::size_t start) -> void {
      if (stop) return;
      for (std::size_t i = start; i < ext.size() && !stop; ++i) {
        std::uint32_t v = ext[i];
        int lv = local[v];
        bool fits = true;
        for (auto u : subset)
          if (dist[lv][local[u]] > n) {
            fits = false;
            break;
          }
        if (!fits) continue;
        subset.push_back(v);
        in_subset[lv] = 1;
        std::size_t mark = ext.size();
        for (std::uint32_t e = trace.adj_begin[v]; e < trace.adj_begin[v + 1]; ++e) {
          auto u = trace.adj[e];
          if (u > seed && local[u] >= 0 && !in_subset[local[u]] && !in_ext[local[u]]) {
            ext.push_back(u);
            in_ext[local[u]] = 1;
          }
        }
        consider(subset);
        self(self, i + 1);
        while (ext.size() > mark) {
          in_ext[local[ext.back()]] = 0;
          ext.pop_back();
        }
        subset.pop_back();
        in_subset[lv] = 0;
      }
    };
    extend(extend, 0);

    for (auto m : members) local[m] = -1;
  }
  return report;
}

}  // namespace brw
