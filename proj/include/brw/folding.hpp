#pragma once

#include <cstdint>
#include <vector>

#include "brw/presentation.hpp"

namespace brw {

/// Ball construction that never touches the word-problem layer: vertices are
/// anonymous ids, edges are created freely during BFS, and every relator loop
/// traced from every vertex must close. A loop that fails to close merges its
/// endpoints (union-find with coincidence propagation); a loop with a single
/// missing edge deduces it. The inner ball stabilizes once the construction
/// horizon exceeds the requested radius by a small margin; build() grows the
/// horizon until two consecutive horizons agree on the inner sphere sizes.
///
/// This is the cross-check route for CayleyBall::build; the two constructions
/// share no code beyond the presentation.
class FoldedBall {
 public:
  static FoldedBall build(const GroupPresentation& pres, int radius, int initial_margin = 2,
                          std::uint64_t max_vertices = 100'000'000ull);

  int radius() const { return radius_; }
  int horizon_used() const { return horizon_; }
  /// Sphere sizes 0..radius of the stabilized inner ball.
  const std::vector<std::uint64_t>& sphere_sizes() const { return spheres_; }
  std::uint64_t ball_size() const;

  std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(dist_.size()); }
  int distance(std::uint32_t v) const { return dist_[v]; }
  std::uint32_t neighbor(std::uint32_t v, Gen g) const {
    return adj_[static_cast<std::size_t>(v) * ngen_ + g];
  }
  int degree(std::uint32_t v) const;

 private:
  FoldedBall() = default;
  int radius_ = 0;
  int horizon_ = 0;
  int ngen_ = 0;
  std::vector<std::uint64_t> spheres_;
  std::vector<std::uint32_t> adj_;
  std::vector<std::uint16_t> dist_;
};

}  // namespace brw
