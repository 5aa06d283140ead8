#pragma once

#include <stdexcept>
#include <string>

namespace treq {

// Input that fails to parse (bracketings, grid literals, quasigroup literals).
// Carries the byte offset of the first offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A request exceeded a work guard (leaf-count bound, table range bound).
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A brute-force run would exceed its evaluation budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two internally redundant computations disagreed. Always a bug.
class OracleError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace treq
