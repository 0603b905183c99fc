#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "brw/ball.hpp"
#include "brw/canonical.hpp"
#include "brw/driving.hpp"
#include "brw/family_tree.hpp"

namespace brw {

constexpr std::uint8_t k_identity_label = 0xff;

/// A tree-indexed walk: i.i.d. q-labels on tree edges, positions by prefix
/// products. With a confinement ball, a particle stepping outside dies with
/// its whole subtree (Dirichlet boundary), matching the truncated kernel.
struct BRWRun {
  FamilyTree tree;
  std::vector<std::uint8_t> label;  // per vertex, k_identity_label for lazy steps
  std::vector<Word> position;      // canonical; empty-but-dead entries for killed particles
  std::vector<std::uint8_t> alive;
  Word start;

  std::uint32_t alive_count() const;
};

BRWRun run_tree_indexed_walk(FamilyTree tree, const Canonicalizer& canon, const DrivingMeasure& q,
                             const Word& start, Rng& rng,
                             const CayleyBall* confine = nullptr);

/// The visited subgraph: vertices, traversed Cayley edges, visit counts.
struct Trace {
  std::vector<Word> vertex_words;              // canonical, sorted shortlex
  std::vector<std::uint32_t> multiplicity;     // particle visits per vertex
  std::vector<int> dist_root;                  // |word| = d(o, v)
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // deduplicated, u < v
  // CSR adjacency over trace vertices
  std::vector<std::uint32_t> adj_begin;
  std::vector<std::uint32_t> adj;

  std::uint32_t size() const { return static_cast<std::uint32_t>(vertex_words.size()); }
  int max_distance() const;
  std::optional<std::uint32_t> index_of(const Word& w) const;
};

Trace extract_trace(const BRWRun& run);

enum class Regime { transient, recurrent };

struct RegimeClassification {
  Regime regime = Regime::transient;
  bool critical = false;  // |m rho - 1| within the margin
  double m_rho = 0.0;
  double margin = 0.0;
};

/// Transient iff m * rho <= 1 (the boundary case is transient).
RegimeClassification classify_regime(double m, double rho_hat, double rho_uncertainty = 0.0);

/// Occupancy of a finite target set, per generation and per run.
struct OccupancyProfile {
  std::vector<std::vector<std::uint32_t>> counts;  // [run][generation]
  std::vector<int> last_visit_generation;          // -1 if never visited
  std::vector<std::uint8_t> vacated;               // no visit in the trailing window
  int depth = 0;
  int window = 0;
  double vacated_fraction() const;
};

OccupancyProfile visit_profile(std::span<const BRWRun> runs, std::span<const Word> target_set,
                               int trailing_window = 10);

}  // namespace brw
