#include <algorithm>
#include <charconv>
#include <string>
#include <unordered_map>

#include "trajnet/corpus.hpp"

namespace trajnet {

namespace {

// Splits one CSV line. Fields may be double-quoted with "" as an escaped quote.
std::vector<std::string> split_csv_line(const std::string& line, const std::string& src,
                                        std::size_t lineno) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      if (!cur.empty() || was_quoted) throw ParseError(src, lineno, "unexpected quote inside field");
      quoted = was_quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
      was_quoted = false;
    } else {
      if (was_quoted) throw ParseError(src, lineno, "text after closing quote");
      cur += c;
    }
  }
  if (quoted) throw ParseError(src, lineno, "unterminated quoted field");
  fields.push_back(std::move(cur));
  return fields;
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;  // (line, fields)
};

CsvTable read_csv(std::istream& in, const std::string& src) {
  CsvTable t;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_csv_line(line, src, lineno);
    if (!have_header) {
      t.header = std::move(fields);
      have_header = true;
      continue;
    }
    if (fields.size() != t.header.size()) {
      throw ParseError(src, lineno, "expected " + std::to_string(t.header.size()) + " fields, got " +
                                        std::to_string(fields.size()));
    }
    t.rows.emplace_back(lineno, std::move(fields));
  }
  return t;
}

std::vector<std::size_t> require_columns(const CsvTable& t, const std::vector<std::string>& names,
                                         const std::string& src) {
  std::vector<std::size_t> idx;
  for (const auto& name : names) {
    auto it = std::find(t.header.begin(), t.header.end(), name);
    if (it == t.header.end()) throw ParseError(src, 1, "missing column '" + name + "'");
    idx.push_back(static_cast<std::size_t>(it - t.header.begin()));
  }
  return idx;
}

}  // namespace

std::vector<RawRecord> read_records_csv(std::istream& in, std::string_view source) {
  const std::string src(source);
  CsvTable t = read_csv(in, src);
  if (t.header.empty()) return {};
  auto col = require_columns(t, {"author_id", "year", "location"}, src);

  std::vector<RawRecord> out;
  out.reserve(t.rows.size());
  for (auto& [lineno, f] : t.rows) {
    RawRecord r;
    r.author_id = std::move(f[col[0]]);
    const std::string& y = f[col[1]];
    auto [ptr, ec] = std::from_chars(y.data(), y.data() + y.size(), r.year);
    if (ec != std::errc{} || ptr != y.data() + y.size()) {
      throw ParseError(src, lineno, "year is not an integer: '" + y + "'");
    }
    r.location = std::move(f[col[2]]);
    if (r.author_id.empty()) throw ParseError(src, lineno, "empty author_id");
    if (!is_valid_label(r.location)) {
      throw ParseError(src, lineno, "invalid location label '" + r.location + "'");
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::map<Label, Label> read_mapping_csv(std::istream& in, std::string_view source) {
  const std::string src(source);
  CsvTable t = read_csv(in, src);
  if (t.header.empty()) return {};
  auto col = require_columns(t, {"from", "to"}, src);

  std::map<Label, Label> out;
  for (auto& [lineno, f] : t.rows) {
    if (!is_valid_label(f[col[0]]) || !is_valid_label(f[col[1]])) {
      throw ParseError(src, lineno, "invalid label in mapping");
    }
    auto [it, inserted] = out.emplace(f[col[0]], f[col[1]]);
    if (!inserted && it->second != f[col[1]]) {
      throw ParseError(src, lineno, "conflicting mapping for '" + f[col[0]] + "'");
    }
  }
  return out;
}

PathMultiset extract_trajectories(const std::vector<RawRecord>& records,
                                  const ExtractConfig& config) {
  // author -> year -> location -> count
  std::map<std::string, std::map<int, std::map<Label, std::uint64_t>>> grouped;
  for (const auto& r : records) {
    if (r.author_id.empty()) throw Error("record with empty author_id");
    if (!is_valid_label(r.location)) throw Error("invalid location label '" + r.location + "'");
    if (r.year < config.min_year || r.year > config.max_year) continue;
    ++grouped[r.author_id][r.year][r.location];
  }

  PathMultiset out;
  for (const auto& [author, years] : grouped) {
    Path p;
    for (const auto& [year, locations] : years) {
      // map order is lexicographic, so strict > keeps the smallest label on ties
      auto best = locations.begin();
      for (auto it = locations.begin(); it != locations.end(); ++it) {
        if (it->second > best->second) best = it;
      }
      p.push_back(best->first);
    }
    out.add(std::move(p));
  }
  return out;
}

}  // namespace trajnet
