#pragma once

#include <vector>

#include "brw/brw_run.hpp"

namespace brw {

/// Connected components of the trace outside B(o, r). "Infinite component" is
/// undecidable at finite scale; the surrogate flag marks components containing
/// a vertex at distance >= horizon (default: the trace's maximum distance).
struct ComponentDecomposition {
  int removed_radius = 0;
  int horizon = 0;
  std::vector<std::vector<std::uint32_t>> components;  // trace vertex indices
  std::vector<std::uint8_t> horizon_reaching;
  int horizon_reaching_count() const;
};

ComponentDecomposition decompose(const Trace& trace, int r, int horizon = -1);

/// Containment forest of horizon-reaching components across a growing radii
/// schedule. Node (level k, index i) is a horizon-reaching component of
/// Tr \ B(o, radii[k]); its parent is the unique containing component one
/// level down.
struct EndStructureTree {
  std::vector<int> radii;
  int horizon = 0;
  // per level: parent index of each node at the previous level (-1 at level 0)
  std::vector<std::vector<int>> parent;
  std::vector<std::vector<std::uint32_t>> node_size;

  int levels() const { return static_cast<int>(radii.size()); }
  int count_at(int level) const { return static_cast<int>(parent[level].size()); }
};

EndStructureTree end_structure(const Trace& trace, std::span<const int> radii, int horizon = -1);

/// Finite-scale end census. An isolated-end candidate is a chain through the
/// final `window` levels with no branching.
struct EndCensus {
  std::vector<int> radii;
  std::vector<int> horizon_reaching_counts;
  int window = 0;
  int isolated_candidates = 0;
};

EndCensus end_census(const EndStructureTree& structure, int window);

}  // namespace brw
