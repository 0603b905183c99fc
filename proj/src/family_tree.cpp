#include "brw/family_tree.hpp"

#include <algorithm>

namespace brw {

int FamilyTree::generation_of(std::uint32_t v) const {
  auto it = std::upper_bound(level_begin.begin(), level_begin.end(), v);
  return static_cast<int>(it - level_begin.begin()) - 1;
}

namespace {

FamilyTree sample_tree(const OffspringLaw& law, int depth, Rng& rng,
                       std::uint64_t population_cap, bool biased_root) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  if (biased_root && depth < 1) throw std::invalid_argument("unimodular trees need depth >= 1");
  FamilyTree tree;
  tree.flavor = biased_root ? TreeFlavor::ugw : TreeFlavor::gw;
  tree.parent.push_back(0);
  tree.level_begin = {0, 1};
  std::uint32_t lo = 0, hi = 1;
  for (int g = 0; g < depth; ++g) {
    for (std::uint32_t v = lo; v < hi; ++v) {
      int k = (g == 0 && biased_root) ? law.sample_biased_root_degree(rng) : law.sample(rng);
      for (int c = 0; c < k; ++c) {
        tree.parent.push_back(v);
        if (tree.parent.size() > population_cap) throw PopulationCapExceeded(g + 1);
      }
    }
    lo = hi;
    hi = tree.size();
    tree.level_begin.push_back(hi);
  }
  return tree;
}

}  // namespace

FamilyTree sample_gw_tree(const OffspringLaw& law, int depth, Rng& rng,
                          std::uint64_t population_cap) {
  return sample_tree(law, depth, rng, population_cap, false);
}

FamilyTree sample_ugw_tree(const OffspringLaw& law, int depth, Rng& rng,
                           std::uint64_t population_cap) {
  return sample_tree(law, depth, rng, population_cap, true);
}

}  // namespace brw
