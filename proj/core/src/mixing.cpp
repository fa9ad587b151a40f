#include "trajnet/mixing.hpp"

#include <cmath>
#include <limits>

namespace trajnet {

namespace {

// Neumaier summation; rows can have thousands of tiny terms.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

EdgeFrequency edge_frequencies(const HigherOrderNetwork& first_order) {
  if (first_order.order() != 1) throw Error("edge frequencies need a first-order network");
  const std::uint64_t total = first_order.total_weight();
  if (total == 0) throw Error("corpus contains no transitions");
  EdgeFrequency f;
  for (const auto& [e, w] : first_order.edges()) {
    f.weights[Path{e.first.front(), e.second.front()}] =
        static_cast<double>(w) / static_cast<double>(total);
  }
  return f;
}

EdgeFrequency edge_frequencies(const PathMultiset& s) {
  return edge_frequencies(build_network(s, 1));
}

double row_entropy(const Row& row) {
  CompensatedSum h;
  for (const auto& [next, p] : row) {
    if (p > 0.0) h.add(-p * std::log(p));
  }
  return h.value();
}

double edge_entropy(const TransitionMatrix& t, const Path& e) {
  const Row* row = t.row(e);
  if (!row) throw Error("no row for edge " + join(e, "|"));
  return row_entropy(*row);
}

double total_entropy(const TransitionMatrix& t, const EdgeFrequency& pi) {
  CompensatedSum h;
  for (const auto& [e, w] : pi.weights) {
    const Row* row = t.row(e);
    if (!row) throw Error("weighted edge " + join(e, "|") + " has no row in the matrix");
    if (w > 0.0) h.add(w * row_entropy(*row));
  }
  return h.value();
}

MixingReport entropy_growth_ratio(const PathMultiset& s) {
  if (s.max_length() < 2) throw Error("corpus contains no length-2 window");
  const HigherOrderNetwork first = build_network(s, 1);
  const TransitionMatrix t2 = transition_matrix(build_network(s, 2));
  const TransitionMatrix markov = markovian_matrix(first);
  const EdgeFrequency pi = edge_frequencies(first);

  MixingReport r;
  r.h_empirical = total_entropy(t2, pi);
  r.h_markovian = total_entropy(markov, pi);
  for (const auto& [e, w] : pi.weights) {
    r.per_edge[e] = EdgeMixing{w, edge_entropy(t2, e), edge_entropy(markov, e)};
  }
  if (r.h_empirical > 0.0) {
    r.lambda = r.h_markovian / r.h_empirical;
  } else {
    r.degenerate = true;
    if (r.h_markovian > 0.0) r.lambda = std::numeric_limits<double>::infinity();
  }
  return r;
}

}  // namespace trajnet
