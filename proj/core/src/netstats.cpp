#include "trajnet/netstats.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace trajnet {

Digraph to_digraph(const HigherOrderNetwork& net) {
  std::map<Path, std::size_t> index;
  for (const auto& n : net.nodes()) index.emplace(n, index.size());
  Digraph g;
  g.node_count = index.size();
  g.edges.reserve(net.edges().size());
  for (const auto& [e, w] : net.edges()) g.edges.emplace_back(index.at(e.first), index.at(e.second));
  return g;
}

namespace {

using Adjacency = std::vector<std::vector<std::size_t>>;

Adjacency adjacency(const Digraph& g, bool directed) {
  Adjacency adj(g.node_count);
  for (auto [u, v] : g.edges) {
    if (u >= g.node_count || v >= g.node_count) throw Error("edge endpoint out of range");
    if (u == v) continue;
    adj[u].push_back(v);
    if (!directed) adj[v].push_back(u);
  }
  for (auto& nbrs : adj) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  return adj;
}

}  // namespace

TopologyReport topology_report(const Digraph& g, TopologyOptions options) {
  TopologyReport r;
  r.node_count = g.node_count;
  r.edge_count = g.edges.size();
  r.directed = options.directed;
  if (g.node_count == 0) return r;

  const Adjacency undirected = adjacency(g, false);
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

  // weakly connected components; the largest one wins, lowest index on ties
  std::vector<std::size_t> component(g.node_count, kUnset);
  std::vector<std::size_t> sizes;
  for (std::size_t s = 0; s < g.node_count; ++s) {
    if (component[s] != kUnset) continue;
    const std::size_t id = sizes.size();
    std::size_t size = 0;
    std::deque<std::size_t> queue{s};
    component[s] = id;
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      ++size;
      for (auto v : undirected[u]) {
        if (component[v] == kUnset) {
          component[v] = id;
          queue.push_back(v);
        }
      }
    }
    sizes.push_back(size);
  }
  const auto largest = static_cast<std::size_t>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());

  r.component_count = sizes.size();
  r.largest_component_size = sizes[largest];
  r.largest_component_fraction =
      static_cast<double>(sizes[largest]) / static_cast<double>(g.node_count);
  r.size2_component_count = static_cast<std::size_t>(std::count(sizes.begin(), sizes.end(), 2));

  const Adjacency walk = options.directed ? adjacency(g, true) : undirected;
  std::vector<std::size_t> dist(g.node_count, kUnset);
  std::size_t diameter = 0;
  std::uint64_t distance_sum = 0;
  std::uint64_t pair_count = 0;
  for (std::size_t s = 0; s < g.node_count; ++s) {
    if (component[s] != largest) continue;
    std::fill(dist.begin(), dist.end(), kUnset);
    dist[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (auto v : walk[u]) {
        if (dist[v] == kUnset) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
          diameter = std::max(diameter, dist[v]);
          distance_sum += dist[v];
          ++pair_count;
        }
      }
    }
  }
  r.diameter = diameter;
  if (pair_count > 0) {
    r.average_shortest_path = static_cast<double>(distance_sum) / static_cast<double>(pair_count);
  }
  return r;
}

TopologyReport topology_report(const HigherOrderNetwork& net, TopologyOptions options) {
  return topology_report(to_digraph(net), options);
}

}  // namespace trajnet
