#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace brw {

/// Experiment configuration, five sections mirrored 1:1 in the INI file:
/// [group], [walk], [branching], [analysis], [run]. Serialization is
/// canonical (fixed key order), so parse(serialize(c)) == c.
struct ExperimentConfig {
  // [group]
  std::string preset = "surface_genus2";  // free_rank2 | surface_genus2 | custom
  std::vector<std::string> generators;    // custom only
  std::vector<std::string> relators;      // custom only
  std::vector<std::string> planar_order;  // custom only
  int ball_radius = 6;

  // [walk]
  double identity_mass = 1.0 / 9;  // uniform lazy driving measure
  double green_r = 0.0;            // 0: use 1/rho_lower
  int green_truncation = -1;       // -1: auto
  int decay_d_min = 2;
  int decay_d_max = 8;
  int r_grid_points = 8;
  int ancona_pairs = 125;
  int ancona_y_per_pair = 8;

  // [branching]
  std::string law = "1:0.5,2:0.5";  // atoms, or "mean:<m>"
  std::string flavor = "ugw";       // gw | ugw
  int depth = 25;
  std::uint64_t population_cap = 1'000'000;
  bool confine_to_ball = false;

  // [analysis]
  std::vector<int> radii = {2, 4, 6, 8, 10, 12, 14, 16};
  int window = 3;
  int horizon = -1;  // -1: trace max distance
  int trifurcation_diameter = 3;
  std::uint64_t trifurcation_budget = 200'000;
  std::vector<int> k_sweep = {2, 4, 6, 8};
  int mtp_horizon = 3;
  int target_radius = 2;
  int trailing_window = 10;

  // [run]
  std::vector<std::string> checks = {"rho"};
  std::uint64_t seed = 42;
  int runs = 200;
  std::uint64_t samples = 100'000;
  int jobs = 0;  // 0: library default
  std::string out_dir = "out";
  std::vector<std::string> formats = {"json", "csv"};
  std::vector<double> m_grid = {1.05, 1.10, 1.30};
  bool timestamps = false;

  bool operator==(const ExperimentConfig&) const = default;

  std::string serialize() const;
  static ExperimentConfig parse(std::istream& in);
  static ExperimentConfig parse_string(const std::string& text);
  static ExperimentConfig load(const std::string& path);

  /// Structural validation (radii increasing, weights sane, known names).
  void validate() const;

  /// FNV-1a hash of the canonical serialization.
  std::uint64_t hash() const;
};

std::vector<std::pair<int, double>> parse_law_atoms(const std::string& law);

}  // namespace brw
