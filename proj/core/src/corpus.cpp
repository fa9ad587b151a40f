#include "trajnet/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>

namespace trajnet {

MissingLabelsError::MissingLabelsError(std::vector<std::string> labels)
    : Error([&] {
        std::string msg = "mapping has no entry for label(s):";
        for (const auto& l : labels) msg += " " + l;
        return msg;
      }()),
      labels_(std::move(labels)) {}

bool is_valid_label(std::string_view label) noexcept {
  return !label.empty() && label.find_first_of(",\t\r\n") == std::string_view::npos;
}

Path collapse_repeats(Path p) {
  p.erase(std::unique(p.begin(), p.end()), p.end());
  return p;
}

std::string join(const Path& p, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += sep;
    out += p[i];
  }
  return out;
}

void PathMultiset::add(Path nodes, std::uint64_t multiplicity) {
  if (nodes.empty()) throw Error("trajectory must contain at least one label");
  if (multiplicity == 0) throw Error("trajectory multiplicity must be positive");
  for (const auto& l : nodes) {
    if (!is_valid_label(l)) throw Error("invalid label '" + l + "'");
  }
  entries_[collapse_repeats(std::move(nodes))] += multiplicity;
  total_ += multiplicity;
}

std::uint64_t PathMultiset::count(const Path& p) const {
  auto it = entries_.find(p);
  return it == entries_.end() ? 0 : it->second;
}

std::size_t PathMultiset::max_length() const noexcept {
  std::size_t best = 0;
  for (const auto& [p, n] : entries_) best = std::max(best, path_length(p));
  return best;
}

std::set<Label> PathMultiset::labels() const {
  std::set<Label> out;
  for (const auto& [p, n] : entries_) out.insert(p.begin(), p.end());
  return out;
}

// ---------------------------------------------------------------------------
// n-gram format

namespace {

Path split_labels(std::string_view text, char sep) {
  Path out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

PathMultiset parse_ngram(std::istream& in, std::string_view source) {
  PathMultiset s;
  std::string line;
  std::size_t lineno = 0;
  const std::string src(source);
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError(src, lineno, "missing tab-separated frequency");
    std::string_view labels_part(line.data(), tab);
    std::string_view freq_part(line.data() + tab + 1, line.size() - tab - 1);
    if (freq_part.empty()) throw ParseError(src, lineno, "missing frequency");

    std::uint64_t freq = 0;
    auto [ptr, ec] = std::from_chars(freq_part.data(), freq_part.data() + freq_part.size(), freq);
    if (ec != std::errc{} || ptr != freq_part.data() + freq_part.size()) {
      throw ParseError(src, lineno, "frequency is not a positive integer: '" + std::string(freq_part) + "'");
    }
    if (freq == 0) throw ParseError(src, lineno, "frequency must be positive");

    Path nodes = split_labels(labels_part, ',');
    for (const auto& l : nodes) {
      if (!is_valid_label(l)) throw ParseError(src, lineno, "empty or invalid label");
    }
    s.add(std::move(nodes), freq);
  }
  return s;
}

PathMultiset parse_ngram_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_ngram(in, "<string>");
}

void write_ngram(std::ostream& out, const PathMultiset& s) {
  for (const auto& [p, n] : s) out << join(p, ",") << '\t' << n << '\n';
}

std::string to_ngram_string(const PathMultiset& s) {
  std::ostringstream out;
  write_ngram(out, s);
  return out.str();
}

// ---------------------------------------------------------------------------
// Sub-paths

std::map<Path, std::uint64_t> subpaths(const Path& t, std::size_t k) {
  if (k == 0) throw Error("sub-path length must be at least 1");
  std::map<Path, std::uint64_t> out;
  if (t.size() < k + 1) return out;
  for (std::size_t i = 0; i + k < t.size(); ++i) {
    ++out[Path(t.begin() + static_cast<std::ptrdiff_t>(i),
               t.begin() + static_cast<std::ptrdiff_t>(i + k + 1))];
  }
  return out;
}

PathMultiset subpath_multiset(const PathMultiset& s, std::size_t k) {
  PathMultiset out;
  for (const auto& [p, n] : s) {
    for (auto& [sub, m] : subpaths(p, k)) out.add(sub, m * n);
  }
  return out;
}

PathMultiset relabel(const PathMultiset& s, const std::map<Label, Label>& mapping) {
  std::set<Label> missing;
  for (const auto& l : s.labels()) {
    if (!mapping.contains(l)) missing.insert(l);
  }
  if (!missing.empty()) throw MissingLabelsError({missing.begin(), missing.end()});

  PathMultiset out;
  for (const auto& [p, n] : s) {
    Path q;
    q.reserve(p.size());
    for (const auto& l : p) q.push_back(mapping.at(l));
    out.add(std::move(q), n);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ranking and summaries

namespace {

std::vector<RankedPath> ranked(const PathMultiset& s) {
  std::vector<RankedPath> all(s.begin(), s.end());
  // entries are already lexicographic, so a stable sort keeps that as the tie-break
  std::stable_sort(all.begin(), all.end(),
                   [](const RankedPath& a, const RankedPath& b) { return a.second > b.second; });
  return all;
}

}  // namespace

std::vector<RankedPath> top_paths(const PathMultiset& s, std::size_t length, std::size_t n) {
  std::vector<RankedPath> out;
  for (auto& rp : ranked(s)) {
    if (out.size() >= n) break;
    if (path_length(rp.first) == length) out.push_back(std::move(rp));
  }
  return out;
}

PathMultiset top_percent(const PathMultiset& s, double percent) {
  if (!(percent > 0.0 && percent <= 100.0)) throw Error("top percent must lie in (0, 100]");
  PathMultiset out;
  const double threshold = percent * static_cast<double>(s.total());
  std::uint64_t cumulative = 0;
  for (auto& [p, n] : ranked(s)) {
    if (static_cast<double>(cumulative) * 100.0 >= threshold) break;
    cumulative += n;
    out.add(std::move(p), n);
  }
  return out;
}

CorpusStats corpus_stats(const PathMultiset& s, std::size_t top_m) {
  CorpusStats st;
  st.total = s.total();
  st.distinct_trajectories = s.distinct();
  st.label_count = s.labels().size();
  for (const auto& [p, n] : s) st.length_histogram[path_length(p)] += n;
  if (st.total > 0) {
    auto it = st.length_histogram.find(0);
    std::uint64_t zero = it == st.length_histogram.end() ? 0 : it->second;
    st.zero_length_fraction = static_cast<double>(zero) / static_cast<double>(st.total);
  }
  for (auto& rp : ranked(s)) {
    auto& bucket = st.top_by_length[path_length(rp.first)];
    if (bucket.size() < top_m) bucket.push_back(std::move(rp));
  }
  return st;
}

std::string fingerprint(const PathMultiset& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : to_ngram_string(s)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace trajnet
