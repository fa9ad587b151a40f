#pragma once

// Independent reference computations. None of these call into the code path
// they are used to check.

#include <boost/rational.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "trajnet/corpus.hpp"
#include "trajnet/netstats.hpp"

namespace trajnet::testing {

using Rational = boost::rational<long long>;

/// Empirical motif probabilities by expanding every copy of every trajectory
/// and scanning its length-2 windows one by one, in exact arithmetic.
inline std::map<Path, Rational> brute_force_motifs(const PathMultiset& s) {
  std::map<Path, Rational> out;
  long long copies = 0;
  for (const auto& [p, n] : s) {
    for (std::uint64_t c = 0; c < n; ++c) {
      ++copies;
      const long long l = static_cast<long long>(p.size()) - 1;
      for (std::size_t i = 0; i + 2 < p.size(); ++i) {
        out[Path{p[i], p[i + 1], p[i + 2]}] += Rational(1, std::max(l - 1, 1LL));
      }
    }
  }
  for (auto& [m, r] : out) r /= copies;
  return out;
}

struct DistanceSummary {
  std::optional<std::size_t> diameter;
  std::optional<double> average;
};

/// All-pairs shortest paths by Floyd-Warshall, restricted to `members`.
inline DistanceSummary floyd_warshall(const Digraph& g, const std::vector<bool>& members,
                                      bool directed) {
  const std::size_t n = g.node_count;
  constexpr std::size_t inf = std::numeric_limits<std::size_t>::max() / 4;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : g.edges) {
    if (u == v) continue;
    d[u][v] = 1;
    if (!directed) d[v][u] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];

  DistanceSummary s;
  std::size_t diameter = 0;
  std::uint64_t sum = 0, pairs = 0;
  bool any = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!members[i]) continue;
    any = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !members[j] || d[i][j] >= inf) continue;
      diameter = std::max(diameter, d[i][j]);
      sum += d[i][j];
      ++pairs;
    }
  }
  if (any) s.diameter = diameter;
  if (pairs) s.average = static_cast<double>(sum) / static_cast<double>(pairs);
  return s;
}

/// Weakly connected components by repeated label propagation.
inline std::vector<std::size_t> component_labels(const Digraph& g) {
  std::vector<std::size_t> label(g.node_count);
  for (std::size_t i = 0; i < g.node_count; ++i) label[i] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [u, v] : g.edges) {
      const std::size_t m = std::min(label[u], label[v]);
      if (label[u] != m || label[v] != m) {
        label[u] = label[v] = m;
        changed = true;
      }
    }
  }
  return label;
}

/// Dense -sum_e pi_e sum_e' T_ee' ln T_ee' with two nested loops.
inline double dense_total_entropy(const std::vector<std::vector<double>>& t,
                                  const std::vector<double>& pi) {
  double h = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t[i].size(); ++j) {
      if (t[i][j] > 0.0) h -= pi[i] * t[i][j] * std::log(t[i][j]);
    }
  }
  return h;
}

/// Enumerates every walk of `steps` moves in a label graph by recursion.
inline std::uint64_t count_free_parameters(const std::map<Label, std::vector<Label>>& succ,
                                           std::size_t steps) {
  std::uint64_t df = 0;
  auto visit = [&](auto&& self, const Label& at, std::size_t left) -> void {
    auto it = succ.find(at);
    const std::size_t out = it == succ.end() ? 0 : it->second.size();
    if (left == 0) {
      if (out > 1) df += out - 1;
      return;
    }
    if (it == succ.end()) return;
    for (const auto& nxt : it->second) self(self, nxt, left - 1);
  };
  for (const auto& [l, nexts] : succ) visit(visit, l, steps);
  return df;
}

}  // namespace trajnet::testing
