#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <utility>

#include "trajnet/corpus.hpp"

namespace trajnet {

/// Directed network whose nodes are k-label windows. An edge (u, v) joins two
/// windows that overlap on k - 1 labels and carries its observation count.
class HigherOrderNetwork {
 public:
  using Edge = std::pair<Path, Path>;
  using EdgeMap = std::map<Edge, std::uint64_t>;

  HigherOrderNetwork() = default;

  /// Throws Error if a node is not a k-tuple, an edge endpoint is unknown, an
  /// edge does not overlap on k - 1 labels or a weight is zero.
  HigherOrderNetwork(std::size_t order, std::set<Path> nodes, EdgeMap edges);

  std::size_t order() const noexcept { return order_; }
  const std::set<Path>& nodes() const noexcept { return nodes_; }
  const EdgeMap& edges() const noexcept { return edges_; }

  /// Sum of edge weights.
  std::uint64_t total_weight() const noexcept;

 private:
  std::size_t order_ = 1;
  std::set<Path> nodes_;
  EdgeMap edges_;
};

/// Nodes are all k-label windows occurring in `s` (all labels when k = 1);
/// edges are the length-k sub-paths, weighted by multiplicity.
HigherOrderNetwork build_network(const PathMultiset& s, std::size_t k);

/// Sparse row: successor state -> probability.
using Row = std::map<Path, double>;

/// Sparse row-stochastic matrix over higher-order states. Every state has a
/// row; empty rows are absorbing.
class TransitionMatrix {
 public:
  TransitionMatrix() = default;

  /// Throws Error unless every entry lies in (0, 1] and every non-empty row
  /// sums to 1 within 1e-12.
  TransitionMatrix(std::size_t order, std::map<Path, Row> rows);

  std::size_t order() const noexcept { return order_; }
  const std::map<Path, Row>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }

  /// Null if `state` has no row.
  const Row* row(const Path& state) const;
  bool contains(const Path& state) const { return rows_.contains(state); }

  /// 0 when either the row or the entry is absent.
  double at(const Path& from, const Path& to) const;

  bool absorbing(const Path& state) const;

 private:
  std::size_t order_ = 1;
  std::map<Path, Row> rows_;
};

TransitionMatrix transition_matrix(const HigherOrderNetwork& net);

/// Maximum-entropy second-order matrix implied by the first-order chain of
/// `s`: the row of first-order edge (a, c) puts T1(c, e) on edge (c, e).
TransitionMatrix markovian_matrix(const PathMultiset& s);
TransitionMatrix markovian_matrix(const HigherOrderNetwork& first_order);

}  // namespace trajnet
