#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace matsuki {

/// An input violates an operation's precondition (bad coweight, unknown
/// catalog name, non-invertible loop, ...). CLI exit code 1.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed structured-text input; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A computed invariant landed outside the set a structural theorem says it
/// must lie in. CLI exit code 2.
class TheoremViolation : public std::runtime_error {
 public:
  TheoremViolation(std::string theorem, const std::string& detail)
      : std::runtime_error(theorem + ": " + detail), theorem_(std::move(theorem)) {}
  const std::string& theorem() const { return theorem_; }

 private:
  std::string theorem_;
};

/// Report-style validation result; empty means valid.
struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string v) { violations.push_back(std::move(v)); }
};

}  // namespace matsuki
