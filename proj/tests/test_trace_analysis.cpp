#include "doctest.h"

#include <stdexcept>

#include "brw/components.hpp"
#include "brw/trifurcation.hpp"

using namespace brw;

namespace {

// hand-built trace from explicit words and edges (free-group convention:
// distance = word length)
Trace make_trace(std::vector<Word> words, const std::vector<std::pair<Word, Word>>& edge_words) {
  Trace t;
  std::sort(words.begin(), words.end(), shortlex_less);
  words.erase(std::unique(words.begin(), words.end()), words.end());
  t.vertex_words = std::move(words);
  t.multiplicity.assign(t.vertex_words.size(), 1);
  t.dist_root.resize(t.vertex_words.size());
  for (std::uint32_t i = 0; i < t.size(); ++i)
    t.dist_root[i] = static_cast<int>(t.vertex_words[i].size());
  for (const auto& [a, b] : edge_words) {
    auto ia = *t.index_of(a);
    auto ib = *t.index_of(b);
    t.edges.emplace_back(std::min(ia, ib), std::max(ia, ib));
  }
  std::sort(t.edges.begin(), t.edges.end());
  t.edges.erase(std::unique(t.edges.begin(), t.edges.end()), t.edges.end());
  std::vector<std::uint32_t> deg(t.size(), 0);
  for (auto [a, b] : t.edges) {
    ++deg[a];
    ++deg[b];
  }
  t.adj_begin.assign(t.size() + 1, 0);
  for (std::uint32_t i = 0; i < t.size(); ++i) t.adj_begin[i + 1] = t.adj_begin[i] + deg[i];
  t.adj.resize(t.edges.size() * 2);
  std::vector<std::uint32_t> fill(t.adj_begin.begin(), t.adj_begin.end() - 1);
  for (auto [a, b] : t.edges) {
    t.adj[fill[a]++] = b;
    t.adj[fill[b]++] = a;
  }
  return t;
}

// a single ray of a-powers, length len
Trace ray_trace(int len) {
  std::vector<Word> words;
  std::vector<std::pair<Word, Word>> edges;
  Word w;
  words.push_back(w);
  for (int i = 1; i <= len; ++i) {
    Word next = w;
    next.push_back(0);
    words.push_back(next);
    edges.emplace_back(w, next);
    w = next;
  }
  return make_trace(std::move(words), edges);
}

// three rays from the identity along generators a (0), b (2), a^-1 (1)
Trace three_ray_trace(int len) {
  std::vector<Word> words{Word{}};
  std::vector<std::pair<Word, Word>> edges;
  for (Gen dir : {Gen{0}, Gen{2}, Gen{1}}) {
    Word w;
    for (int i = 1; i <= len; ++i) {
      Word next = w;
      next.push_back(dir);
      words.push_back(next);
      edges.emplace_back(w, next);
      w = next;
    }
  }
  return make_trace(std::move(words), edges);
}

// complete binary trace over positive letters {a, b}, depth levels
Trace binary_trace(int depth) {
  std::vector<Word> words;
  std::vector<std::pair<Word, Word>> edges;
  std::vector<Word> frontier{Word{}};
  words.push_back(Word{});
  for (int d = 0; d < depth; ++d) {
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (Gen g : {Gen{0}, Gen{2}}) {
        Word c = w;
        c.push_back(g);
        words.push_back(c);
        edges.emplace_back(w, c);
        next.push_back(c);
      }
    frontier = std::move(next);
  }
  return make_trace(std::move(words), edges);
}

}  // namespace

TEST_CASE("decompose a single ray") {
  auto trace = ray_trace(6);
  for (int r = 0; r < 6; ++r) {
    auto dec = decompose(trace, r);
    CHECK(dec.components.size() == 1);
    CHECK(dec.horizon_reaching[0] == 1);
    CHECK(dec.components[0].size() == static_cast<std::size_t>(6 - r));
  }
  CHECK_THROWS_AS(decompose(trace, 6), std::invalid_argument);
}

TEST_CASE("decompose three rays") {
  auto trace = three_ray_trace(5);
  auto dec = decompose(trace, 1);
  CHECK(dec.components.size() == 3);
  CHECK(dec.horizon_reaching_count() == 3);

  // partition property: components plus the removed ball cover the trace
  std::size_t covered = 0;
  for (const auto& c : dec.components) covered += c.size();
  std::size_t inside = 0;
  for (std::uint32_t v = 0; v < trace.size(); ++v)
    if (trace.dist_root[v] <= 1) ++inside;
  CHECK(covered + inside == trace.size());

  // no trace edge joins two distinct components
  std::vector<int> comp_of(trace.size(), -1);
  for (std::size_t c = 0; c < dec.components.size(); ++c)
    for (auto v : dec.components[c]) comp_of[v] = static_cast<int>(c);
  for (auto [a, b] : trace.edges)
    if (comp_of[a] >= 0 && comp_of[b] >= 0) CHECK(comp_of[a] == comp_of[b]);
}

TEST_CASE("end structure of a single ray is a path") {
  auto trace = ray_trace(10);
  std::vector<int> radii{2, 4, 6};
  auto s = end_structure(trace, radii);
  for (int level = 0; level < 3; ++level) CHECK(s.count_at(level) == 1);
  CHECK(s.parent[1][0] == 0);
  CHECK(s.parent[2][0] == 0);
}

TEST_CASE("end structure of a binary trace doubles per level") {
  auto trace = binary_trace(6);
  std::vector<int> radii{1, 2, 3};
  auto s = end_structure(trace, radii);
  // one component per depth-(r+1) subtree root
  CHECK(s.count_at(0) == 4);
  CHECK(s.count_at(1) == 8);
  CHECK(s.count_at(2) == 16);
  // every node has exactly one parent at the previous level
  for (int level = 1; level < 3; ++level)
    for (int node = 0; node < s.count_at(level); ++node) {
      CHECK(s.parent[level][node] >= 0);
      CHECK(s.parent[level][node] < s.count_at(level - 1));
    }
}

TEST_CASE("end census candidates") {
  SUBCASE("single ray has exactly one isolated-end candidate") {
    auto trace = ray_trace(10);
    std::vector<int> radii{2, 4, 6};
    auto census = end_census(end_structure(trace, radii), 3);
    CHECK(census.isolated_candidates == 1);
  }
  SUBCASE("a complete binary structure has none") {
    auto trace = binary_trace(6);
    std::vector<int> radii{1, 2, 3};
    auto census = end_census(end_structure(trace, radii), 3);
    CHECK(census.isolated_candidates == 0);
  }
  SUBCASE("candidate count is nonincreasing in the window") {
    // two rays: one splits near the end, one stays a chain
    auto trace = three_ray_trace(8);
    std::vector<int> radii{1, 3, 5, 7};
    auto s = end_structure(trace, radii);
    int prev = -1;
    for (int w = 1; w <= 4; ++w) {
      auto census = end_census(s, w);
      if (prev >= 0) CHECK(census.isolated_candidates <= prev);
      prev = census.isolated_candidates;
    }
  }
  SUBCASE("window larger than the structure is rejected") {
    auto trace = ray_trace(10);
    std::vector<int> radii{2, 4};
    CHECK_THROWS_AS(end_census(end_structure(trace, radii), 3), std::invalid_argument);
  }
}

TEST_CASE("trifurcation sets at the junction") {
  auto trace = three_ray_trace(5);
  auto report = find_trifurcation_sets(trace, 0);
  REQUIRE(report.found.size() >= 1);
  // n = 0 allows only singletons; the junction is the only cut vertex
  CHECK(report.found.size() == 1);
  CHECK(report.found[0] == std::vector<std::uint32_t>{*trace.index_of(Word{})});
  CHECK(report.exhaustive);

  // independent re-verification of the defining property
  for (const auto& a : report.found)
    CHECK(punctured_component_count(trace, a, report.horizon) >= 3);
}

TEST_CASE("trifurcation sets respect the diameter bound") {
  auto trace = three_ray_trace(6);
  auto report = find_trifurcation_sets(trace, 2);
  REQUIRE(!report.found.empty());
  for (const auto& a : report.found) {
    // brute-force trace diameter of the set
    for (auto u : a)
      for (auto v : a) {
        // BFS distance
        std::vector<int> d(trace.size(), -1);
        std::vector<std::uint32_t> q{u};
        d[u] = 0;
        for (std::size_t i = 0; i < q.size(); ++i) {
          auto x = q[i];
          for (std::uint32_t e = trace.adj_begin[x]; e < trace.adj_begin[x + 1]; ++e)
            if (d[trace.adj[e]] < 0) {
              d[trace.adj[e]] = d[x] + 1;
              q.push_back(trace.adj[e]);
            }
        }
        CHECK(d[v] <= 2);
      }
  }
}

TEST_CASE("a single ray has no trifurcation sets and the search is exhaustive") {
  auto trace = ray_trace(12);
  auto report = find_trifurcation_sets(trace, 3);
  CHECK(report.found.empty());
  CHECK(report.exhaustive);
  CHECK(report.candidates_examined > 0);
}
