#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trajnet/error.hpp"

namespace trajnet {

/// A location identifier (institution, city, country ...).
using Label = std::string;

/// An ordered sequence of labels. A path with n labels has length n - 1.
using Path = std::vector<Label>;

/// True if `label` is non-empty and free of the characters reserved by the
/// n-gram format (comma, tab, CR, LF).
bool is_valid_label(std::string_view label) noexcept;

/// Number of transitions in `p`.
inline std::size_t path_length(const Path& p) noexcept {
  return p.empty() ? 0 : p.size() - 1;
}

/// Removes consecutive repeated labels: A,A,B -> A,B.
Path collapse_repeats(Path p);

std::string join(const Path& p, std::string_view sep);

/// Multiset of trajectories. Each entry is a collapsed, non-empty path with a
/// positive multiplicity. Iteration order is lexicographic on the path.
class PathMultiset {
 public:
  using Map = std::map<Path, std::uint64_t>;

  PathMultiset() = default;

  /// Adds `multiplicity` copies of `nodes` after collapsing repeats.
  /// Throws Error on an empty path, invalid label or zero multiplicity.
  void add(Path nodes, std::uint64_t multiplicity = 1);

  const Map& entries() const noexcept { return entries_; }
  Map::const_iterator begin() const noexcept { return entries_.begin(); }
  Map::const_iterator end() const noexcept { return entries_.end(); }

  /// |S|: sum of multiplicities.
  std::uint64_t total() const noexcept { return total_; }
  std::size_t distinct() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  std::uint64_t count(const Path& p) const;
  std::size_t max_length() const noexcept;
  std::set<Label> labels() const;

  friend bool operator==(const PathMultiset&, const PathMultiset&) = default;

 private:
  Map entries_;
  std::uint64_t total_ = 0;
};

/// Reads `label(,label)*\tFREQ` lines. Blank lines are skipped.
PathMultiset parse_ngram(std::istream& in, std::string_view source = "<input>");
PathMultiset parse_ngram_string(std::string_view text);

/// Canonical n-gram serialization: one line per distinct path, sorted.
void write_ngram(std::ostream& out, const PathMultiset& s);
std::string to_ngram_string(const PathMultiset& s);

/// Sliding windows of `k` transitions (k + 1 labels) over `t`, with counts.
/// Total count is max(length(t) - k + 1, 0).
std::map<Path, std::uint64_t> subpaths(const Path& t, std::size_t k);

/// Union of subpaths(t, k) over all trajectories, weighted by multiplicity.
PathMultiset subpath_multiset(const PathMultiset& s, std::size_t k);

/// Replaces every label through `mapping`, re-collapsing repeats and merging
/// multiplicities. Throws MissingLabelsError if a label has no image.
PathMultiset relabel(const PathMultiset& s, const std::map<Label, Label>& mapping);

using RankedPath = std::pair<Path, std::uint64_t>;

/// The `n` most frequent trajectories of the given length; ties resolved
/// lexicographically.
std::vector<RankedPath> top_paths(const PathMultiset& s, std::size_t length, std::size_t n);

/// Keeps the most frequent distinct trajectories until their cumulative
/// multiplicity reaches `percent` of |S|. Ties resolved lexicographically.
PathMultiset top_percent(const PathMultiset& s, double percent);

struct CorpusStats {
  std::uint64_t total = 0;
  std::size_t distinct_trajectories = 0;
  std::size_t label_count = 0;
  std::map<std::size_t, std::uint64_t> length_histogram;
  double zero_length_fraction = 0.0;
  std::map<std::size_t, std::vector<RankedPath>> top_by_length;
};

CorpusStats corpus_stats(const PathMultiset& s, std::size_t top_m = 5);

/// Stable 64-bit FNV-1a digest of the canonical n-gram text, as hex.
std::string fingerprint(const PathMultiset& s);

// ---------------------------------------------------------------------------
// Raw record ingestion

struct RawRecord {
  std::string author_id;
  int year = 0;
  Label location;
};

struct ExtractConfig {
  int min_year = -1'000'000;
  int max_year = 1'000'000;
};

/// Builds one trajectory per author. Records outside the year window are
/// dropped. A year with several locations is reduced to its most frequent
/// location (lexicographically smallest on ties).
PathMultiset extract_trajectories(const std::vector<RawRecord>& records,
                                  const ExtractConfig& config = {});

/// CSV with header columns author_id, year, location (any order).
std::vector<RawRecord> read_records_csv(std::istream& in, std::string_view source = "<csv>");

/// CSV with header columns from, to.
std::map<Label, Label> read_mapping_csv(std::istream& in, std::string_view source = "<map>");

}  // namespace trajnet
