#include "trajnet/synth.hpp"

#include <algorithm>
#include <random>

namespace trajnet {

namespace {

Label name(std::size_t i) { return "n" + std::to_string(i); }

void check(const WalkConfig& c, std::size_t min_labels) {
  if (c.labels < min_labels) {
    throw Error("walk generator needs at least " + std::to_string(min_labels) + " labels");
  }
}

// uniform index in [0, n) other than a and b
std::size_t draw_excluding(std::mt19937_64& rng, std::size_t n, std::size_t a, std::size_t b) {
  const std::size_t excluded = a == b ? 1 : 2;
  std::uniform_int_distribution<std::size_t> dist(0, n - excluded - 1);
  std::size_t x = dist(rng);
  const std::size_t lo = std::min(a, b);
  const std::size_t hi = std::max(a, b);
  if (x >= lo) ++x;
  if (excluded == 2 && x >= hi) ++x;
  return x;
}

}  // namespace

PathMultiset sample_memoryless(const WalkConfig& config) {
  check(config, 2);
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<std::size_t> start(0, config.labels - 1);
  PathMultiset s;
  for (std::size_t w = 0; w < config.walks; ++w) {
    std::size_t cur = start(rng);
    Path p{name(cur)};
    for (std::size_t t = 0; t < config.length; ++t) {
      cur = draw_excluding(rng, config.labels, cur, cur);
      p.push_back(name(cur));
    }
    s.add(std::move(p));
  }
  return s;
}

PathMultiset sample_return_biased(const WalkConfig& config, double rho) {
  check(config, 3);
  if (!(rho >= 0.0 && rho <= 1.0)) throw Error("return probability must lie in [0, 1]");
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<std::size_t> start(0, config.labels - 1);
  std::bernoulli_distribution go_back(rho);
  PathMultiset s;
  for (std::size_t w = 0; w < config.walks; ++w) {
    std::size_t prev = start(rng);
    std::size_t cur = prev;
    Path p{name(cur)};
    for (std::size_t t = 0; t < config.length; ++t) {
      std::size_t next;
      if (t == 0) {
        next = draw_excluding(rng, config.labels, cur, cur);
      } else if (go_back(rng)) {
        next = prev;
      } else {
        next = draw_excluding(rng, config.labels, cur, prev);
      }
      prev = cur;
      cur = next;
      p.push_back(name(cur));
    }
    s.add(std::move(p));
  }
  return s;
}

}  // namespace trajnet
