#include "trajnet/diffusion.hpp"

namespace trajnet {

DiffusionTrace markovian_diffusion(const TransitionMatrix& first_order, const Label& source,
                                   std::size_t steps) {
  if (first_order.order() != 1) throw Error("markovian diffusion needs a first-order matrix");
  if (!first_order.contains(Path{source})) throw Error("unknown source '" + source + "'");

  DiffusionTrace tr;
  tr.source = source;
  tr.mode = DiffusionMode::kMarkovian;
  tr.steps.push_back({{source, 1.0}});
  tr.terminated.push_back(0.0);
  for (std::size_t t = 1; t <= steps; ++t) {
    std::map<Label, double> next;
    std::map<std::pair<Label, Label>, double> flow;
    double absorbed = 0.0;
    for (const auto& [label, p] : tr.steps.back()) {
      const Row* row = first_order.row(Path{label});
      if (!row || row->empty()) {
        absorbed += p;
        continue;
      }
      for (const auto& [to, q] : *row) {
        next[to.front()] += p * q;
        flow[{label, to.front()}] += p * q;
      }
    }
    tr.steps.push_back(std::move(next));
    tr.flows.push_back(std::move(flow));
    tr.terminated.push_back(tr.terminated.back() + absorbed);
  }
  return tr;
}

DiffusionTrace empirical_diffusion(const PathMultiset& s, const Label& source, std::size_t steps) {
  struct Occurrence {
    const Path* path;
    std::size_t pos;
    std::uint64_t weight;
  };
  std::vector<Occurrence> occurrences;
  bool seen = false;
  for (const auto& [p, n] : s) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p[j] != source) continue;
      seen = true;
      if (j + 1 < p.size()) occurrences.push_back({&p, j, n});
    }
  }
  if (!seen) throw Error("source '" + source + "' never observed");

  std::uint64_t total = 0;
  for (const auto& o : occurrences) total += o.weight;
  const double denom = static_cast<double>(total);

  DiffusionTrace tr;
  tr.source = source;
  tr.mode = DiffusionMode::kEmpirical;
  tr.steps.push_back({{source, 1.0}});
  tr.terminated.push_back(0.0);
  for (std::size_t t = 1; t <= steps; ++t) {
    std::map<Label, std::uint64_t> at;
    std::map<std::pair<Label, Label>, std::uint64_t> moved;
    std::uint64_t ended = 0;
    for (const auto& o : occurrences) {
      const Path& p = *o.path;
      if (o.pos + t < p.size()) {
        at[p[o.pos + t]] += o.weight;
        moved[{p[o.pos + t - 1], p[o.pos + t]}] += o.weight;
      } else {
        ended += o.weight;
      }
    }
    std::map<Label, double> dist;
    for (const auto& [l, c] : at) dist[l] = static_cast<double>(c) / denom;
    std::map<std::pair<Label, Label>, double> flow;
    for (const auto& [e, c] : moved) flow[e] = static_cast<double>(c) / denom;
    tr.steps.push_back(std::move(dist));
    tr.flows.push_back(std::move(flow));
    tr.terminated.push_back(total == 0 ? 1.0 : static_cast<double>(ended) / denom);
  }
  return tr;
}

double return_rate(const PathMultiset& s, const Label& source, std::size_t t) {
  const DiffusionTrace tr = empirical_diffusion(s, source, t);
  auto it = tr.steps[t].find(source);
  return it == tr.steps[t].end() ? 0.0 : it->second;
}

}  // namespace trajnet
