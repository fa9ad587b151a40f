#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <string>

#include "trajnet/corpus.hpp"

namespace trajnet::testing {

struct RandomCorpusShape {
  std::size_t min_labels = 2;
  std::size_t max_labels = 6;
  std::size_t min_trajectories = 1;
  std::size_t max_trajectories = 40;
  std::size_t max_length = 8;
  std::uint64_t max_multiplicity = 10;
};

/// Random corpus with no consecutive repeats, so the drawn length is kept.
inline PathMultiset random_corpus(std::mt19937_64& rng, const RandomCorpusShape& shape = {}) {
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const std::size_t labels = uniform(shape.min_labels, shape.max_labels);
  const std::size_t count = uniform(shape.min_trajectories, shape.max_trajectories);
  PathMultiset s;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t len = uniform(0, shape.max_length);
    std::size_t cur = uniform(0, labels - 1);
    Path p{"L" + std::to_string(cur)};
    for (std::size_t j = 0; j < len; ++j) {
      std::size_t next = uniform(0, labels - 2);
      if (next >= cur) ++next;
      cur = next;
      p.push_back("L" + std::to_string(cur));
    }
    s.add(std::move(p), uniform(1, shape.max_multiplicity));
  }
  return s;
}

/// Length-2 corpus whose window counts are exactly proportional to products
/// of a reversible first-order chain: n(x,y,z) = w(x,y) w(y,z) lcm(d) / d(y),
/// with w a random symmetric weight matrix (zero diagonal) and d its row sums.
/// Its second-order rows coincide with the first-order rows.
inline PathMultiset exactly_markovian_corpus(std::mt19937_64& rng, std::size_t labels) {
  std::uniform_int_distribution<std::uint64_t> weight(1, 4);
  std::vector<std::vector<std::uint64_t>> w(labels, std::vector<std::uint64_t>(labels, 0));
  for (std::size_t a = 0; a < labels; ++a) {
    for (std::size_t b = a + 1; b < labels; ++b) w[a][b] = w[b][a] = weight(rng);
  }
  std::vector<std::uint64_t> d(labels, 0);
  std::uint64_t l = 1;
  for (std::size_t a = 0; a < labels; ++a) {
    d[a] = std::accumulate(w[a].begin(), w[a].end(), std::uint64_t{0});
    l = std::lcm(l, d[a]);
  }
  auto name = [](std::size_t i) { return "M" + std::to_string(i); };
  PathMultiset s;
  for (std::size_t x = 0; x < labels; ++x) {
    for (std::size_t y = 0; y < labels; ++y) {
      if (w[x][y] == 0) continue;
      for (std::size_t z = 0; z < labels; ++z) {
        if (w[y][z] == 0) continue;
        s.add({name(x), name(y), name(z)}, w[x][y] * w[y][z] * (l / d[y]));
      }
    }
  }
  return s;
}

inline PathMultiset careers_corpus() {
  PathMultiset s;
  s.add({"A", "C", "D"}, 2);
  s.add({"B", "C", "E"}, 2);
  return s;
}

}  // namespace trajnet::testing
