#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "brw/offspring.hpp"

namespace brw {

enum class TreeFlavor { gw, ugw };

/// A sampled family tree in generation (BFS) order: children of generation g
/// vertices are contiguous in generation g+1.
struct FamilyTree {
  std::vector<std::uint32_t> parent;       // parent[0] is unused (root)
  std::vector<std::uint32_t> level_begin;  // per generation, plus end sentinel
  TreeFlavor flavor = TreeFlavor::gw;

  std::uint32_t size() const { return static_cast<std::uint32_t>(parent.size()); }
  int depth() const { return static_cast<int>(level_begin.size()) - 2; }
  int generation_of(std::uint32_t v) const;
  std::uint32_t generation_size(int g) const { return level_begin[g + 1] - level_begin[g]; }
};

struct PopulationCapExceeded : std::runtime_error {
  int generation_reached;
  explicit PopulationCapExceeded(int gen)
      : std::runtime_error("population cap exceeded at generation " + std::to_string(gen)),
        generation_reached(gen) {}
};

FamilyTree sample_gw_tree(const OffspringLaw& law, int depth, Rng& rng,
                          std::uint64_t population_cap = 1'000'000);
FamilyTree sample_ugw_tree(const OffspringLaw& law, int depth, Rng& rng,
                           std::uint64_t population_cap = 1'000'000);

}  // namespace brw
