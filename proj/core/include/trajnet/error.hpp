#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace trajnet {

/// Base class for every data-level failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the source name and 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

/// A relabeling mapping was not total on the labels of a corpus.
class MissingLabelsError : public Error {
 public:
  explicit MissingLabelsError(std::vector<std::string> labels);

  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  std::vector<std::string> labels_;
};

}  // namespace trajnet
