#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "brw/canonical.hpp"
#include "brw/presentation.hpp"

namespace brw {

/// Finite ball B(o, radius) of a Cayley graph. Vertices are canonical words,
/// stored in BFS order (sorted by distance from the root, then discovery
/// order, which is deterministic). Vertex 0 is the identity. Immutable after
/// construction; safe to share across threads.
///
/// Adjacency holds one slot per generator; k_no_vertex marks a neighbour
/// outside the ball. Edges between two vertices of the outermost sphere are
/// included, so the ball is the full induced subgraph.
class CayleyBall {
 public:
  static CayleyBall build(const Canonicalizer& canon, int radius,
                          std::uint64_t max_vertices = 100'000'000ull);

  const GroupPresentation& presentation() const { return *pres_; }
  int radius() const { return radius_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(word_begin_.size() - 1); }
  std::uint32_t root() const { return 0; }

  int distance_from_root(std::uint32_t v) const { return dist_[v]; }
  std::uint32_t neighbor(std::uint32_t v, Gen g) const {
    return adj_[static_cast<std::size_t>(v) * ngen_ + g];
  }
  int generator_count() const { return ngen_; }

  /// Vertices with distance_from_root == d form the contiguous index range
  /// [sphere_begin(d), sphere_begin(d+1)).
  std::uint32_t sphere_begin(int d) const { return sphere_begin_[d]; }
  std::uint32_t sphere_size(int d) const { return sphere_begin_[d + 1] - sphere_begin_[d]; }
  /// Number of vertices within distance d (a sub-ball is an index prefix).
  std::uint32_t ball_size(int d) const { return sphere_begin_[d + 1]; }

  std::span<const Gen> word(std::uint32_t v) const {
    return {letters_.data() + word_begin_[v], word_begin_[v + 1] - word_begin_[v]};
  }
  GroupElement element(std::uint32_t v) const {
    auto w = word(v);
    return GroupElement{Word(w.begin(), w.end())};
  }

  /// Index of a canonical word, if inside the ball.
  std::optional<std::uint32_t> find(std::span<const Gen> canonical_word) const;

  int degree(std::uint32_t v) const;

  void write_adjacency_csv(std::ostream& os) const;

 private:
  CayleyBall() = default;

  std::uint32_t lookup_slot(std::span<const Gen> w) const;

  const GroupPresentation* pres_ = nullptr;
  int radius_ = 0;
  int ngen_ = 0;
  std::vector<std::uint32_t> word_begin_;  // size() + 1 offsets into letters_
  std::vector<Gen> letters_;
  std::vector<std::uint32_t> adj_;    // size() * ngen_
  std::vector<std::uint16_t> dist_;
  std::vector<std::uint32_t> sphere_begin_;  // radius + 2 entries

  // open-addressing index: slot -> vertex + 1, 0 = empty
  std::vector<std::uint32_t> table_;
  std::uint64_t table_mask_ = 0;
};

}  // namespace brw
