#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wordgraph {

// Malformed input bytes (corpus files, graph dumps). Carries the byte
// offset of the first offending byte where known.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what, std::size_t byte_offset = npos)
      : std::runtime_error(what), byte_offset_(byte_offset) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t byte_offset() const noexcept { return byte_offset_; }

private:
  std::size_t byte_offset_;
};

// Structural violations: unknown vertices, cycles, broken word-graph
// invariants, merges that would create a cycle.
class GraphError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Counter exceeded its cap (path or derivation counts).
class OverflowError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Bad run configuration: unknown algorithm id, missing file, invalid
// numeric parameter.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Input that parsed fine but holds nothing to work with: a corpus with
// no sentences, a gold set with no words. Kept separate so callers can
// report "nothing to do" apart from genuine misconfiguration.
class EmptyInputError : public ConfigError {
public:
  using ConfigError::ConfigError;
};

}  // namespace wordgraph
