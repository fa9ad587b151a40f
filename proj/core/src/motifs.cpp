#include "trajnet/motifs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "trajnet/mixing.hpp"

namespace trajnet {

MotifClass classify(const Path& motif) {
  if (motif.size() != 3 || motif[0] == motif[1] || motif[1] == motif[2]) {
    throw Error("not a length-2 motif: " + join(motif, "|"));
  }
  return motif[0] == motif[2] ? MotifClass::kReturn : MotifClass::kOnward;
}

std::string_view to_string(MotifClass c) noexcept { return c == MotifClass::kReturn ? "I" : "II"; }

std::string_view to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::kEmpirical: return "empirical";
    case Provenance::kFirstOrder: return "order-1";
    case Provenance::kSecondOrder: return "order-2";
  }
  return "";
}

std::string_view to_string(Scope s) noexcept {
  switch (s) {
    case Scope::kUnnormalized: return "unnormalized";
    case Scope::kAll: return "all";
    case Scope::kReturn: return "I";
    case Scope::kOnward: return "II";
  }
  return "";
}

double MotifDistribution::mass() const {
  double sum = 0.0;
  for (const auto& [m, p] : probs) sum += p;
  return sum;
}

double MotifDistribution::mass(MotifClass c) const {
  double sum = 0.0;
  for (const auto& [m, p] : probs) {
    if (classify(m) == c) sum += p;
  }
  return sum;
}

MotifDistribution empirical_distribution(const PathMultiset& s) {
  MotifDistribution d;
  d.provenance = Provenance::kEmpirical;
  if (s.total() == 0) return d;
  const double total = static_cast<double>(s.total());
  for (const auto& [p, n] : s) {
    const std::size_t l = path_length(p);
    if (l < 2) continue;
    const double weight = static_cast<double>(n) / static_cast<double>(l - 1);
    for (const auto& [motif, m] : subpaths(p, 2)) {
      d.probs[motif] += weight * static_cast<double>(m);
    }
  }
  for (auto& [motif, prob] : d.probs) prob /= total;
  return d;
}

MotifDistribution model_distribution(const MultiOrderModel& m, std::size_t order,
                                     const std::set<Path>& support) {
  if (order != 1 && order != 2) throw Error("motif models exist for orders 1 and 2 only");
  if (order > m.max_order) throw Error("model was not fitted up to order 2");

  const EdgeFrequency pi = edge_frequencies(m.network(1));
  const TransitionMatrix& t = m.layer(order);
  MotifDistribution d;
  d.provenance = order == 1 ? Provenance::kFirstOrder : Provenance::kSecondOrder;
  for (const auto& motif : support) {
    classify(motif);
    const Path first{motif[0], motif[1]};
    const Path second{motif[1], motif[2]};
    auto start = pi.weights.find(first);
    if (start == pi.weights.end()) throw Error("motif uses unobserved edge " + join(first, "|"));
    if (!pi.weights.contains(second)) throw Error("motif uses unobserved edge " + join(second, "|"));
    const double cont = order == 1 ? t.at(Path{motif[1]}, Path{motif[2]}) : t.at(first, second);
    d.probs[motif] = start->second * cont;
  }
  return d;
}

MotifDistribution renormalize(const MotifDistribution& d, Scope scope) {
  if (scope == Scope::kUnnormalized) throw Error("cannot renormalize to the unnormalized scope");
  MotifDistribution out;
  out.provenance = d.provenance;
  out.scope = scope;
  double mass = 0.0;
  for (const auto& [m, p] : d.probs) {
    const MotifClass c = classify(m);
    const bool keep = scope == Scope::kAll || (scope == Scope::kReturn && c == MotifClass::kReturn) ||
                      (scope == Scope::kOnward && c == MotifClass::kOnward);
    if (keep) {
      out.probs[m] = p;
      mass += p;
    }
  }
  if (!(mass > 0.0)) throw Error("no probability mass in scope " + std::string(to_string(scope)));
  for (auto& [m, p] : out.probs) p /= mass;
  return out;
}

double kl_divergence(const MotifDistribution& p, const MotifDistribution& q) {
  if (p.scope == Scope::kUnnormalized || q.scope == Scope::kUnnormalized) {
    throw Error("KL divergence needs normalized distributions");
  }
  if (p.scope != q.scope) throw Error("KL divergence over different motif scopes");
  double kl = 0.0;
  for (const auto& [m, pp] : p.probs) {
    if (pp <= 0.0) continue;
    auto it = q.probs.find(m);
    if (it == q.probs.end() || it->second <= 0.0) {
      throw Error("infinite KL divergence: reference assigns zero probability to " + join(m, "|"));
    }
    kl += pp * std::log(pp / it->second);
  }
  // Gibbs: rounding must not push a near-zero divergence below 0
  return std::max(kl, 0.0);
}

double odds_ratio(const MotifDistribution& d) {
  const double onward = d.mass(MotifClass::kOnward);
  if (!(onward > 0.0)) throw Error("odds ratio undefined: no type-II mass");
  return d.mass(MotifClass::kReturn) / onward;
}

namespace {

std::set<Path> support_of(const MotifDistribution& d) {
  std::set<Path> out;
  for (const auto& [m, p] : d.probs) out.insert(m);
  return out;
}

std::optional<double> ratio(double num, double den) {
  if (den > 0.0) return num / den;
  if (num > 0.0) return std::numeric_limits<double>::infinity();
  return std::nullopt;
}

KlComparison compare(const MotifDistribution& emp, const MotifDistribution& p1,
                     const MotifDistribution& p2, Scope scope) {
  KlComparison c;
  MotifClass cls = scope == Scope::kReturn ? MotifClass::kReturn : MotifClass::kOnward;
  if (scope != Scope::kAll && !(emp.mass(cls) > 0.0)) return c;
  const auto e = renormalize(emp, scope);
  c.kl_first = kl_divergence(e, renormalize(p1, scope));
  c.kl_second = kl_divergence(e, renormalize(p2, scope));
  c.ratio = ratio(*c.kl_first, *c.kl_second);
  return c;
}

std::optional<double> odds_or_null(const MotifDistribution& d) {
  if (!(d.mass(MotifClass::kOnward) > 0.0)) return std::nullopt;
  return odds_ratio(d);
}

}  // namespace

KlReport kl_report(const PathMultiset& s) {
  KlReport r;
  const MotifDistribution emp = empirical_distribution(s);
  r.motif_count = emp.probs.size();
  if (emp.probs.empty()) return r;

  const MultiOrderModel m = fit(s, 2);
  const auto support = support_of(emp);
  const MotifDistribution p1 = model_distribution(m, 1, support);
  const MotifDistribution p2 = model_distribution(m, 2, support);

  r.all = compare(emp, p1, p2, Scope::kAll);
  r.returns = compare(emp, p1, p2, Scope::kReturn);
  r.onward = compare(emp, p1, p2, Scope::kOnward);
  r.odds_empirical = odds_or_null(emp);
  r.odds_first = odds_or_null(p1);
  r.odds_second = odds_or_null(p2);
  return r;
}

std::vector<MotifRow> motif_rank_table(const PathMultiset& s) {
  const MotifDistribution emp = empirical_distribution(s);
  if (emp.probs.empty()) return {};

  const MultiOrderModel m = fit(s, 2);
  const auto support = support_of(emp);
  const auto e = renormalize(emp, Scope::kAll);
  const auto p1 = renormalize(model_distribution(m, 1, support), Scope::kAll);
  const auto p2 = renormalize(model_distribution(m, 2, support), Scope::kAll);

  std::vector<MotifRow> rows;
  for (const auto& [motif, p] : e.probs) {
    rows.push_back(MotifRow{motif, classify(motif), p, p1.probs.at(motif), p2.probs.at(motif)});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const MotifRow& a, const MotifRow& b) {
    return a.p_empirical > b.p_empirical;
  });
  return rows;
}

}  // namespace trajnet
