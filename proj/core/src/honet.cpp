#include "trajnet/honet.hpp"

#include <cmath>
#include <numeric>

namespace trajnet {

HigherOrderNetwork::HigherOrderNetwork(std::size_t order, std::set<Path> nodes, EdgeMap edges)
    : order_(order), nodes_(std::move(nodes)), edges_(std::move(edges)) {
  if (order_ == 0) throw Error("network order must be at least 1");
  for (const auto& n : nodes_) {
    if (n.size() != order_) throw Error("node '" + join(n, "|") + "' is not an order-" +
                                        std::to_string(order_) + " tuple");
  }
  for (const auto& [e, w] : edges_) {
    const auto& [u, v] = e;
    if (!nodes_.contains(u) || !nodes_.contains(v)) {
      throw Error("edge endpoint missing from node set: " + join(u, "|") + " -> " + join(v, "|"));
    }
    if (!std::equal(u.begin() + 1, u.end(), v.begin())) {
      throw Error("edge endpoints do not overlap: " + join(u, "|") + " -> " + join(v, "|"));
    }
    if (w == 0) throw Error("edge weight must be positive");
  }
}

std::uint64_t HigherOrderNetwork::total_weight() const noexcept {
  std::uint64_t sum = 0;
  for (const auto& [e, w] : edges_) sum += w;
  return sum;
}

HigherOrderNetwork build_network(const PathMultiset& s, std::size_t k) {
  if (k == 0) throw Error("network order must be at least 1");
  std::set<Path> nodes;
  HigherOrderNetwork::EdgeMap edges;
  for (const auto& [p, n] : s) {
    for (std::size_t i = 0; i + k <= p.size(); ++i) {
      nodes.emplace(p.begin() + static_cast<std::ptrdiff_t>(i),
                    p.begin() + static_cast<std::ptrdiff_t>(i + k));
    }
    for (std::size_t i = 0; i + k < p.size(); ++i) {
      auto first = p.begin() + static_cast<std::ptrdiff_t>(i);
      edges[{Path(first, first + static_cast<std::ptrdiff_t>(k)),
             Path(first + 1, first + static_cast<std::ptrdiff_t>(k + 1))}] += n;
    }
  }
  return HigherOrderNetwork(k, std::move(nodes), std::move(edges));
}

TransitionMatrix::TransitionMatrix(std::size_t order, std::map<Path, Row> rows)
    : order_(order), rows_(std::move(rows)) {
  for (const auto& [state, row] : rows_) {
    if (row.empty()) continue;
    double sum = 0.0;
    for (const auto& [next, p] : row) {
      if (!(p > 0.0 && p <= 1.0)) {
        throw Error("transition probability out of range in row " + join(state, "|"));
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw Error("row " + join(state, "|") + " is not stochastic");
    }
  }
}

const Row* TransitionMatrix::row(const Path& state) const {
  auto it = rows_.find(state);
  return it == rows_.end() ? nullptr : &it->second;
}

double TransitionMatrix::at(const Path& from, const Path& to) const {
  const Row* r = row(from);
  if (!r) return 0.0;
  auto it = r->find(to);
  return it == r->end() ? 0.0 : it->second;
}

bool TransitionMatrix::absorbing(const Path& state) const {
  const Row* r = row(state);
  return !r || r->empty();
}

TransitionMatrix transition_matrix(const HigherOrderNetwork& net) {
  std::map<Path, std::uint64_t> out_weight;
  for (const auto& [e, w] : net.edges()) out_weight[e.first] += w;

  std::map<Path, Row> rows;
  for (const auto& n : net.nodes()) rows[n];
  for (const auto& [e, w] : net.edges()) {
    rows[e.first][e.second] = static_cast<double>(w) / static_cast<double>(out_weight[e.first]);
  }
  return TransitionMatrix(net.order(), std::move(rows));
}

TransitionMatrix markovian_matrix(const HigherOrderNetwork& first_order) {
  if (first_order.order() != 1) throw Error("markovian_matrix expects a first-order network");
  const TransitionMatrix t1 = transition_matrix(first_order);

  std::map<Path, Row> rows;
  for (const auto& [e, w] : first_order.edges()) {
    const Label& a = e.first.front();
    const Label& c = e.second.front();
    Row& row = rows[Path{a, c}];
    // T1(a,c) * T1(c,x) normalized over x reduces to T1(c,x)
    for (const auto& [next, p] : *t1.row(e.second)) row[Path{c, next.front()}] = p;
  }
  return TransitionMatrix(2, std::move(rows));
}

TransitionMatrix markovian_matrix(const PathMultiset& s) {
  return markovian_matrix(build_network(s, 1));
}

}  // namespace trajnet
