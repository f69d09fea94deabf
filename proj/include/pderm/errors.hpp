#pragma once

#include <stdexcept>
#include <string>

namespace pderm {

// Invalid problem/solver configuration (bad constants, unsupported combination).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the mathematical domain of the requested function.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// An iterative routine failed to reach its tolerance within its cap.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A measured duality gap was nonpositive or nonfinite; adaptation rounds
// that observe this are skipped rather than aborted.
class DegenerateGap : public std::runtime_error {
 public:
  explicit DegenerateGap(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pderm
