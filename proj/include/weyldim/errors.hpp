#ifndef WEYLDIM_ERRORS_HPP
#define WEYLDIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace weyldim {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// order / leaders / rho of the zero element
struct ZeroElementError : std::domain_error {
  using std::domain_error::domain_error;
};

struct NotDivisibleError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// reduce_step precondition violations; message names the failed condition
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// diagnostic abort, never silent truncation
struct StepBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UncertifiedBasisError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InternalCheckError : std::logic_error {
  using std::logic_error::logic_error;
};

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(int line_, int column_, const std::string& what_)
      : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                           std::to_string(column_) + ": " + what_),
        line(line_),
        column(column_) {}
};

}  // namespace weyldim

#endif
