#include "trajnet/moselect.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "trajnet/chisquare.hpp"

namespace trajnet {

MultiOrderModel fit(const PathMultiset& s, std::size_t max_order) {
  if (max_order < 1) throw Error("maximum order must be at least 1");
  if (s.max_length() == 0) throw Error("corpus contains no transitions");

  MultiOrderModel m;
  m.max_order = max_order;
  m.fitted_on = fingerprint(s);
  m.label_count = s.labels().size();

  std::map<Label, std::uint64_t> starts;
  for (const auto& [p, n] : s) starts[p.front()] += n;
  for (const auto& [l, n] : starts) {
    m.start[l] = static_cast<double>(n) / static_cast<double>(s.total());
  }

  for (std::size_t k = 1; k <= max_order; ++k) {
    m.networks.push_back(build_network(s, k));
    m.layers.push_back(transition_matrix(m.networks.back()));
  }
  return m;
}

namespace {

std::size_t resolve_order(const MultiOrderModel& m, std::optional<std::size_t> order) {
  std::size_t k = order.value_or(m.max_order);
  if (k < 1 || k > m.max_order) {
    throw Error("order " + std::to_string(k) + " outside fitted range 1.." +
                std::to_string(m.max_order));
  }
  return k;
}

}  // namespace

double path_log_likelihood(const MultiOrderModel& m, const Path& p,
                           std::optional<std::size_t> order) {
  const std::size_t K = resolve_order(m, order);
  if (p.empty()) throw Error("empty path");
  auto s = m.start.find(p.front());
  if (s == m.start.end()) throw Error("start label '" + p.front() + "' not in model");
  double ll = std::log(s->second);

  for (std::size_t j = 1; j < p.size(); ++j) {
    const std::size_t k = std::min(j, K);
    auto it = p.begin() + static_cast<std::ptrdiff_t>(j);
    Path from(it - static_cast<std::ptrdiff_t>(k), it);
    Path to(it - static_cast<std::ptrdiff_t>(k) + 1, it + 1);
    const double prob = m.layer(k).at(from, to);
    if (prob <= 0.0) {
      throw Error("transition " + join(from, "|") + " -> " + join(to, "|") +
                  " unsupported by the model (trajectory " + join(p, ",") + ")");
    }
    ll += std::log(prob);
  }
  return ll;
}

double log_likelihood(const MultiOrderModel& m, const PathMultiset& s,
                      std::optional<std::size_t> order) {
  double ll = 0.0;
  for (const auto& [p, n] : s) ll += static_cast<double>(n) * path_log_likelihood(m, p, order);
  return ll;
}

std::uint64_t layer_degrees_of_freedom(const MultiOrderModel& m, std::size_t k) {
  if (k > m.max_order) throw Error("order beyond fitted model");
  if (k == 0) return m.label_count == 0 ? 0 : m.label_count - 1;

  const HigherOrderNetwork& first = m.network(1);
  std::map<Label, std::size_t> index;
  for (const auto& n : first.nodes()) index.emplace(n.front(), index.size());
  const std::size_t n = index.size();
  std::vector<std::uint64_t> out_degree(n, 0);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [e, w] : first.edges()) {
    auto u = index.at(e.first.front());
    auto v = index.at(e.second.front());
    ++out_degree[u];
    edges.emplace_back(u, v);
  }

  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  auto sat_add = [](std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; };
  auto sat_mul = [](std::uint64_t a, std::uint64_t b) {
    return (a != 0 && b > kMax / a) ? kMax : a * b;
  };

  // walks[v] = number of (k-1)-step walks ending at v
  std::vector<std::uint64_t> walks(n, 1);
  for (std::size_t step = 1; step < k; ++step) {
    std::vector<std::uint64_t> next(n, 0);
    for (auto [u, v] : edges) next[v] = sat_add(next[v], walks[u]);
    walks = std::move(next);
  }
  std::uint64_t df = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (out_degree[v] > 1) df = sat_add(df, sat_mul(walks[v], out_degree[v] - 1));
  }
  if (df == kMax) {
    throw Error("degrees of freedom overflow at order " + std::to_string(k) +
                "; use a smaller maximum order");
  }
  return df;
}

std::uint64_t degrees_of_freedom(const MultiOrderModel& m, std::optional<std::size_t> order) {
  const std::size_t K = order ? *order : m.max_order;
  std::uint64_t df = 0;
  for (std::size_t k = 0; k <= K; ++k) {
    auto layer = layer_degrees_of_freedom(m, k);
    if (df > std::numeric_limits<std::uint64_t>::max() - layer) {
      throw Error("degrees of freedom overflow; use a smaller maximum order");
    }
    df += layer;
  }
  return df;
}

double likelihood_ratio(const MultiOrderModel& m, std::size_t k) {
  if (k < 2 || k > m.max_order) throw Error("likelihood ratio needs 2 <= k <= max order");
  const HigherOrderNetwork& net = m.network(k);
  const TransitionMatrix& lower = m.layer(k - 1);

  std::map<Path, std::uint64_t> out_weight;
  for (const auto& [e, w] : net.edges()) out_weight[e.first] += w;

  // edges are grouped by source state in map order
  double lr = 0.0;
  auto it = net.edges().begin();
  while (it != net.edges().end()) {
    const Path& state = it->first.first;
    const double total = static_cast<double>(out_weight.at(state));
    const Path suffix(state.begin() + 1, state.end());
    double kl = 0.0;
    for (; it != net.edges().end() && it->first.first == state; ++it) {
      const Path& next = it->first.second;
      const double p = static_cast<double>(it->second) / total;
      const double q = lower.at(suffix, Path(next.begin() + 1, next.end()));
      kl += p * std::log(p / q);
    }
    lr += total * std::max(kl, 0.0);
  }
  return 2.0 * lr;
}

OrderTestResult detect_optimal_order(const PathMultiset& s, std::size_t k_max, double alpha) {
  if (k_max < 1) throw Error("maximum order must be at least 1");
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error("alpha must lie in (0, 1)");

  OrderTestResult r;
  r.alpha = alpha;
  r.k_max = std::min(k_max, s.max_length());
  if (r.k_max == 0) throw Error("corpus contains no transitions");

  const MultiOrderModel m = fit(s, r.k_max);
  bool still_rejecting = true;
  for (std::size_t k = 1; k <= r.k_max; ++k) {
    OrderTestStep step;
    step.order = k;
    step.log_likelihood = log_likelihood(m, s, k);
    step.degrees_of_freedom = degrees_of_freedom(m, k);
    if (k >= 2) {
      const double lr = likelihood_ratio(m, k);
      const std::uint64_t df_diff = step.degrees_of_freedom - r.steps.back().degrees_of_freedom;
      // no free parameters at this order: the layer is deterministic and lr is 0
      const double p = df_diff == 0 ? 1.0 : chi_square_sf(lr, static_cast<double>(df_diff));
      step.lr = lr;
      step.p_value = p;
      step.rejected = p < alpha;
      if (still_rejecting && step.rejected) {
        r.k_opt = k;
      } else {
        still_rejecting = false;
      }
    }
    r.steps.push_back(step);
  }
  return r;
}

}  // namespace trajnet
