#pragma once

#include <cstddef>
#include <cstdint>

#include "trajnet/corpus.hpp"

namespace trajnet {

struct WalkConfig {
  std::size_t labels = 6;
  std::size_t walks = 10'000;
  std::size_t length = 5;  // transitions per walk
  std::uint64_t seed = 1;
};

/// Walks whose next label is uniform over the other labels (first-order law).
PathMultiset sample_memoryless(const WalkConfig& config);

/// Walks that go back to the previous label with probability `rho`, otherwise
/// move uniformly to a label that is neither current nor previous. The first
/// move is uniform.
PathMultiset sample_return_biased(const WalkConfig& config, double rho);

}  // namespace trajnet
