#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace buchi {

/// Malformed input text (automaton files, Kripke files, guards, suites).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column = 0)
      : std::runtime_error(what + " (line " + std::to_string(line) +
                           (column ? ", column " + std::to_string(column) : "") + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An operation was applied outside its contract, e.g. a BA-only check on a
/// generalized automaton.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Invalid runtime configuration, e.g. a bitstate table exponent out of range.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The state store cannot accept further states.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A debug-mode invariant did not hold. Always indicates a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace buchi
