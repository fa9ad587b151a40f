#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trajnet/honet.hpp"

namespace trajnet {

/// Layered path model: a start-label distribution plus transition matrices
/// of orders 1..max_order, all fitted by counting.
struct MultiOrderModel {
  std::size_t max_order = 1;
  std::map<Label, double> start;
  std::vector<HigherOrderNetwork> networks;  // networks[k - 1] has order k
  std::vector<TransitionMatrix> layers;      // layers[k - 1] has order k
  std::size_t label_count = 0;
  std::string fitted_on;

  const HigherOrderNetwork& network(std::size_t k) const { return networks.at(k - 1); }
  const TransitionMatrix& layer(std::size_t k) const { return layers.at(k - 1); }
};

/// Throws Error if max_order < 1 or `s` contains no transition.
MultiOrderModel fit(const PathMultiset& s, std::size_t max_order);

/// Log-probability of one path under the sub-model of the given order
/// (default: the full model). The first label uses the start distribution,
/// transition j uses layer min(j, order). Throws Error on an unsupported
/// transition.
double path_log_likelihood(const MultiOrderModel& m, const Path& p,
                           std::optional<std::size_t> order = {});

/// Multiplicity-weighted sum of path_log_likelihood over `s`.
double log_likelihood(const MultiOrderModel& m, const PathMultiset& s,
                      std::optional<std::size_t> order = {});

/// Free parameters of layer k: for k = 0, labels - 1; otherwise the sum over
/// all (k-1)-step walks of the first-order network of (successors of the
/// walk's last label - 1). Throws Error when the walk count overflows.
std::uint64_t layer_degrees_of_freedom(const MultiOrderModel& m, std::size_t k);

/// Sum of layer_degrees_of_freedom for k = 0..order.
std::uint64_t degrees_of_freedom(const MultiOrderModel& m, std::optional<std::size_t> order = {});

/// 2 (logL_k - logL_{k-1}) on the fitting corpus, computed per state of the
/// order-k network as a count-weighted KL divergence, so it is never negative.
double likelihood_ratio(const MultiOrderModel& m, std::size_t k);

struct OrderTestStep {
  std::size_t order = 1;
  double log_likelihood = 0.0;
  std::uint64_t degrees_of_freedom = 0;
  std::optional<double> lr;       // empty for the first step
  std::optional<double> p_value;  // empty for the first step
  bool rejected = false;
};

struct OrderTestResult {
  std::size_t k_opt = 1;
  std::size_t k_max = 1;  // after capping at the longest trajectory
  double alpha = 0.01;
  std::vector<OrderTestStep> steps;
};

/// Likelihood-ratio tests of order k against k - 1 for k = 2..k_max; k_opt is
/// the last order of the initial run of rejections at level `alpha`.
OrderTestResult detect_optimal_order(const PathMultiset& s, std::size_t k_max = 5,
                                     double alpha = 0.01);

}  // namespace trajnet
