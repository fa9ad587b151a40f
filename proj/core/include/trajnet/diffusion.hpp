#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "trajnet/honet.hpp"

namespace trajnet {

enum class DiffusionMode { kEmpirical, kMarkovian };

/// Location probabilities after t = 0..T moves from a source. Mass that can
/// no longer move (trajectory ended, or absorbing state) is accumulated in
/// `terminated`, so steps[t] plus terminated[t] always sums to 1.
struct DiffusionTrace {
  Label source;
  DiffusionMode mode = DiffusionMode::kEmpirical;
  std::vector<std::map<Label, double>> steps;
  std::vector<double> terminated;
  /// flows[t - 1][(from, to)]: mass moving from `from` at t - 1 to `to` at t.
  std::vector<std::map<std::pair<Label, Label>, double>> flows;

  std::size_t step_count() const noexcept { return steps.empty() ? 0 : steps.size() - 1; }
};

/// Propagates the source indicator through a first-order matrix.
DiffusionTrace markovian_diffusion(const TransitionMatrix& first_order, const Label& source,
                                   std::size_t steps);

/// Follows the observed continuations of every occurrence of `source` that
/// is followed by at least one move, weighted by multiplicity. Throws Error
/// when `source` does not occur in `s`.
DiffusionTrace empirical_diffusion(const PathMultiset& s, const Label& source, std::size_t steps);

/// Empirical probability of being back at `source` after `t` moves.
double return_rate(const PathMultiset& s, const Label& source, std::size_t t = 2);

}  // namespace trajnet
