#pragma once

#include <vector>

#include "brw/components.hpp"

namespace brw {

/// Search for vertex sets A of trace-diameter <= n whose removal leaves at
/// least 3 horizon-reaching components. Candidates are connected subsets
/// enumerated from each seed vertex (restricted to the seed's trace-ball of
/// radius n); the enumeration is exhaustive when it finishes under budget,
/// otherwise the report is a sound under-approximation. Every reported set is
/// re-verified by an independent decompose call on the punctured trace.
struct TrifurcationReport {
  int diameter_bound = 0;
  int horizon = 0;
  std::vector<std::vector<std::uint32_t>> found;  // trace vertex indices
  bool exhaustive = false;
  std::uint64_t candidates_examined = 0;
};

struct TrifurcationParams {
  std::uint64_t budget = 200'000;
  int horizon = -1;           // -1: trace max distance
  int min_components = 3;
  std::size_t max_found = 16;  // stop collecting after this many verified sets
};

TrifurcationReport find_trifurcation_sets(const Trace& trace, int n,
                                          const TrifurcationParams& params = {});

/// Independent verification: components of the trace minus `removed`,
/// horizon-reaching counted with the same surrogate as decompose.
int punctured_component_count(const Trace& trace, std::span<const std::uint32_t> removed,
                              int horizon);

}  // namespace brw
