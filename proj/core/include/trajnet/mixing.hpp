#pragma once

#include <map>
#include <optional>

#include "trajnet/honet.hpp"

namespace trajnet {

/// Relative frequency pi_e of each first-order edge among all length-1
/// sub-paths of a corpus.
struct EdgeFrequency {
  std::map<Path, double> weights;
};

/// Throws Error when the corpus has no transition.
EdgeFrequency edge_frequencies(const PathMultiset& s);
EdgeFrequency edge_frequencies(const HigherOrderNetwork& first_order);

/// -sum p ln p over a row (0 ln 0 = 0).
double row_entropy(const Row& row);

/// Entropy of the row of `e`. Absorbing rows give 0; unknown rows throw.
double edge_entropy(const TransitionMatrix& t, const Path& e);

/// H = sum_e pi_e h_e(T). Rows without a weight contribute nothing; a
/// weighted edge with no row in T throws.
double total_entropy(const TransitionMatrix& t, const EdgeFrequency& pi);

struct EdgeMixing {
  double pi = 0.0;
  double h_empirical = 0.0;
  double h_markovian = 0.0;
};

struct MixingReport {
  double h_empirical = 0.0;  // H(T2)
  double h_markovian = 0.0;  // H of the maximum-entropy T2
  /// h_markovian / h_empirical; +inf when only h_empirical is 0, empty when
  /// both are 0.
  std::optional<double> lambda;
  bool degenerate = false;
  std::map<Path, EdgeMixing> per_edge;
};

/// Throws Error when the corpus has no length-2 window.
MixingReport entropy_growth_ratio(const PathMultiset& s);

}  // namespace trajnet
