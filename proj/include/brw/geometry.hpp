#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "brw/ball.hpp"
#include "brw/canonical.hpp"

namespace brw {

/// Geodesic path between two elements, the lexicographically least one
/// (greedy first generator in declaration order that reduces the distance).
std::vector<Word> geodesic_segment(const Canonicalizer& canon, const Word& x, const Word& y);

/// A geodesic ray from the identity along powers of one generator.
struct GeodesicRay {
  Gen direction;
  std::vector<Word> vertices;  // vertices[i] = direction^i, i = 0..length

  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

/// Three rays from the root out to the ball radius, pairwise divergent.
/// Directions are taken from planar_order slots {0, floor(k/3), floor(2k/3)}
/// (for free_rank2 this is a, b, a^-1). Divergence is certified at build time:
/// the tail separation must reach at least radius/2, otherwise throws.
std::array<GeodesicRay, 3> geodesic_rays(const CayleyBall& ball, const Canonicalizer& canon,
                                         int length);

enum class SectorLabel : std::uint8_t { on_gamma = 0, s12 = 1, s23 = 2, s31 = 3 };

/// Assignment of every ball vertex to a ray or to one of the three sectors
/// between consecutive rays in the planar rotation order.
struct SectorPartition {
  std::vector<SectorLabel> label;  // per ball vertex
  std::array<std::uint32_t, 4> counts{};  // indexed by SectorLabel
};

SectorPartition sector_partition(const CayleyBall& ball, const std::array<GeodesicRay, 3>& rays);

/// |S(x, n) ∩ target| computed with exact word-metric distances.
int sphere_intersection_count(const Canonicalizer& canon, const Word& x, int n,
                              std::span<const Word> target);

}  // namespace brw
