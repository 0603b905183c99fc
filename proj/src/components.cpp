#include "brw/components.hpp"

#include <algorithm>
#include <stdexcept>

namespace brw {

int ComponentDecomposition::horizon_reaching_count() const {
  int c = 0;
  for (auto f : horizon_reaching) c += f;
  return c;
}

ComponentDecomposition decompose(const Trace& trace, int r, int horizon) {
  if (r < 0) throw std::invalid_argument("removal radius must be nonnegative");
  const int max_d = trace.max_distance();
  if (max_d <= r) throw std::invalid_argument("trace too shallow: max distance <= removal radius");
  ComponentDecomposition dec;
  dec.removed_radius = r;
  dec.horizon = horizon < 0 ? max_d : horizon;

  std::vector<std::int32_t> comp(trace.size(), -1);
  std::vector<std::uint32_t> stack;
  for (std::uint32_t seed = 0; seed < trace.size(); ++seed) {
    if (trace.dist_root[seed] <= r || comp[seed] >= 0) continue;
    const auto id = static_cast<std::int32_t>(dec.components.size());
    dec.components.emplace_back();
    bool reaches = false;
    comp[seed] = id;
    stack.assign(1, seed);
    while (!stack.empty()) {
      std::uint32_t v = stack.back();
      stack.pop_back();
      dec.components[id].push_back(v);
      if (trace.dist_root[v] >= dec.horizon) reaches = true;
      for (std::uint32_t i = trace.adj_begin[v]; i < trace.adj_begin[v + 1]; ++i) {
        std::uint32_t u = trace.adj[i];
        if (trace.dist_root[u] <= r || comp[u] >= 0) continue;
        comp[u] = id;
        stack.push_back(u);
      }
    }
    dec.horizon_reaching.push_back(reaches ? 1 : 0);
  }
  return dec;
}

EndStructureTree end_structure(const Trace& trace, std::span<const int> radii, int horizon) {
  if (radii.empty()) throw std::invalid_argument("radii schedule is empty");
  for (std::size_t i = 1; i < radii.size(); ++i)
    if (radii[i] <= radii[i - 1]) throw std::invalid_argument("radii must be strictly increasing");

  EndStructureTree tree;
  tree.radii.assign(radii.begin(), radii.end());
  tree.horizon = horizon < 0 ? trace.max_distance() : horizon;

  // vertex -> node id per level, for containment lookups
  std::vector<std::int32_t> prev_owner(trace.size(), -1);
  for (std::size_t level = 0; level < radii.size(); ++level) {
    auto dec = decompose(trace, radii[level], tree.horizon);
    std::vector<int> parents;
    std::vector<std::uint32_t> sizes;
    std::vector<std::int32_t> owner(trace.size(), -1);
    for (std::size_t c = 0; c < dec.components.size(); ++c) {
      if (!dec.horizon_reaching[c]) continue;
      int id = static_cast<int>(parents.size());
      int parent = -1;
      if (level > 0) {
        parent = prev_owner[dec.components[c].front()];
        if (parent < 0)
          throw std::logic_error("horizon-reaching component not contained in a parent node");
      }
      for (auto v : dec.components[c]) owner[v] = id;
      parents.push_back(parent);
      sizes.push_back(static_cast<std::uint32_t>(dec.components[c].size()));
    }
    tree.parent.push_back(std::move(parents));
    tree.node_size.push_back(std::move(sizes));
    prev_owner = std::move(owner);
  }
  return tree;
}

EndCensus end_census(const EndStructureTree& structure, int window) {
  if (window < 1) throw std::invalid_argument("stability window must be positive");
  if (structure.levels() < window)
    throw std::invalid_argument("structure has fewer levels than the stability window");
  EndCensus census;
  census.radii = structure.radii;
  census.window = window;
  for (int level = 0; level < structure.levels(); ++level)
    census.horizon_reaching_counts.push_back(structure.count_at(level));

  // candidates: nodes at the first window level whose subtree is a chain
  const int first = structure.levels() - window;
  const int last = structure.levels() - 1;
  int candidates = 0;
  const int base_count = structure.count_at(first);
  for (int b = 0; b < base_count; ++b) {
    // count descendants per level; a candidate has exactly one at each
    std::vector<int> current{b};
    bool chain = true;
    for (int level = first + 1; level <= last && chain; ++level) {
      std::vector<int> next;
      for (int node = 0; node < structure.count_at(level); ++node)
        if (std::find(current.begin(), current.end(), structure.parent[level][node]) !=
            current.end())
          next.push_back(node);
      if (next.size() != 1) chain = false;
      current = std::move(next);
    }
    if (chain) ++candidates;
  }
  census.isolated_candidates = candidates;
  return census;
}

}  // namespace brw
