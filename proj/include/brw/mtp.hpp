#pragma once

#include <string>
#include <vector>

#include "brw/brw_run.hpp"
#include "brw/components.hpp"
#include "brw/family_tree.hpp"
#include "brw/trifurcation.hpp"

namespace brw {

/// Bounded-range mass-transport functionals evaluated on unimodular
/// Galton-Watson family trees. Each depends only on adjacency and on degrees
/// of the root and its neighbours, so a sampled horizon >= 2 evaluates them
/// without truncation bias.
enum class MtpFunctional {
  edge_indicator,            // f(G,x,y) = 1{x ~ y}
  inverse_degree_transport,  // f(G,x,y) = 1{x ~ y} / deg(x)
  degree_pair_23,            // f(G,x,y) = 1{x ~ y, deg x = 2, deg y = 3}
};

const char* mtp_functional_name(MtpFunctional f);

/// Monte Carlo test of the mass-transport identity: E sum_x f(T,o,x) =
/// E sum_x f(T,x,o) under the unimodular law. Uses the paired per-tree
/// difference, so the verdict compares |mean(left - right)| against
/// z * stderr(left - right).
struct MTPTestReport {
  std::string functional;
  double left = 0.0, right = 0.0;
  double left_se = 0.0, right_se = 0.0;
  double diff = 0.0, diff_se = 0.0;
  double z = 0.0;  // quantile used
  std::uint64_t samples = 0;
  bool pass = false;
  bool exact = false;  // every sampled pair agreed termwise
};

MTPTestReport mtp_test(const OffspringLaw& law, MtpFunctional functional, int horizon,
                       std::uint64_t samples, std::uint64_t master_seed,
                       double confidence = 0.99);

/// Left and right sums of a functional on one family tree (exact, no MC).
std::pair<double, double> mtp_sides_on_tree(const FamilyTree& tree, MtpFunctional functional);

/// Diagnostic transport of the trifurcation construction on finite traces:
/// every vertex sends unit mass split evenly among its nearest trifurcation
/// vertices (trace metric). Reports sent/received mass at the root over an
/// ensemble; not an acceptance gate.
struct TransportDiagnostic {
  double mean_sent = 0.0;
  double mean_received = 0.0;
  double max_received = 0.0;
  int traces_with_sets = 0;
  int traces_total = 0;
};

TransportDiagnostic prop31_transport_diagnostic(std::span<const Trace> traces, int diameter_bound,
                                                const TrifurcationParams& params = {});

}  // namespace brw
