#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "trajnet/honet.hpp"

namespace trajnet {

/// Plain index-based directed graph used by the topology routines.
struct Digraph {
  std::size_t node_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Nodes are indexed in the network's (lexicographic) node order.
Digraph to_digraph(const HigherOrderNetwork& net);

struct TopologyOptions {
  /// Distances follow edge direction. Components are always weakly connected.
  bool directed = false;
};

struct TopologyReport {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::size_t component_count = 0;
  std::size_t largest_component_size = 0;
  double largest_component_fraction = 0.0;
  /// Longest finite shortest path inside the largest component; empty for an
  /// empty graph.
  std::optional<std::size_t> diameter;
  /// Mean over ordered reachable pairs (u != v) of the largest component;
  /// empty when there is no such pair.
  std::optional<double> average_shortest_path;
  /// Components with exactly two nodes (the "halo" of return trips).
  std::size_t size2_component_count = 0;
  bool directed = false;
};

TopologyReport topology_report(const Digraph& g, TopologyOptions options = {});
TopologyReport topology_report(const HigherOrderNetwork& net, TopologyOptions options = {});

}  // namespace trajnet
