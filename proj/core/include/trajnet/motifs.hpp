#pragma once

#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "trajnet/moselect.hpp"

namespace trajnet {

/// A length-2 motif X->Y->Z is a return (type I) when Z == X, onward
/// (type II) otherwise.
enum class MotifClass { kReturn, kOnward };

/// Throws Error unless `motif` has three labels with no immediate repeat.
MotifClass classify(const Path& motif);
std::string_view to_string(MotifClass c) noexcept;

enum class Provenance { kEmpirical, kFirstOrder, kSecondOrder };
std::string_view to_string(Provenance p) noexcept;

/// Which motifs a distribution has been normalized over.
enum class Scope { kUnnormalized, kAll, kReturn, kOnward };
std::string_view to_string(Scope s) noexcept;

struct MotifDistribution {
  std::map<Path, double> probs;
  Provenance provenance = Provenance::kEmpirical;
  Scope scope = Scope::kUnnormalized;

  double mass() const;
  double mass(MotifClass c) const;
};

/// P(p) = (1/|S|) sum_i n_i m(p, i) / max(l_i - 1, 1). Not normalized: the
/// mass of trajectories shorter than two transitions is missing.
MotifDistribution empirical_distribution(const PathMultiset& s);

/// Probability of each motif in `support` under layer `order` (1 or 2) of
/// `m`: pi(X->Y) times the continuation probability. Throws Error naming the
/// edge when a motif uses an edge unseen in the first-order network.
MotifDistribution model_distribution(const MultiOrderModel& m, std::size_t order,
                                     const std::set<Path>& support);

/// Restricts to the motifs of `scope` and rescales them to sum to 1. Throws
/// Error when that subset carries no mass.
MotifDistribution renormalize(const MotifDistribution& d, Scope scope);

/// KL(P || Q) in nats. Both must be normalized over the same scope; throws
/// Error naming the motif when Q vanishes on P's support.
double kl_divergence(const MotifDistribution& p, const MotifDistribution& q);

/// Type-I mass over type-II mass. Throws Error when type-II mass is zero.
double odds_ratio(const MotifDistribution& d);

struct KlComparison {
  std::optional<double> kl_first;   // KL(emp || P1)
  std::optional<double> kl_second;  // KL(emp || P2)
  std::optional<double> ratio;      // kl_first / kl_second
};

struct KlReport {
  KlComparison all;
  KlComparison returns;  // type I
  KlComparison onward;   // type II
  std::optional<double> odds_empirical;
  std::optional<double> odds_first;
  std::optional<double> odds_second;
  std::size_t motif_count = 0;
};

KlReport kl_report(const PathMultiset& s);

struct MotifRow {
  Path motif;
  MotifClass cls = MotifClass::kOnward;
  double p_empirical = 0.0;
  double p_first = 0.0;
  double p_second = 0.0;
};

/// Observed motifs by descending empirical probability (lexicographic on
/// ties). All three columns are normalized over the observed motifs.
std::vector<MotifRow> motif_rank_table(const PathMultiset& s);

}  // namespace trajnet
