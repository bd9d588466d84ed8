#pragma once

#include <stdexcept>
#include <string>

namespace quadstab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Syntax error in a presentation or CDGA spec file; positions are 1-based.
struct ParseError : Error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int column_)
      : Error(msg + " (line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ")"),
        line(line_), column(column_) {}
};

// A word/relator mentions a generator the containing structure does not declare,
// or a substitution map is missing an image.
struct UnknownGenerator : Error {
  using Error::Error;
};

// Bad argument shape: genus mismatch, non-symplectic matrix, wrong vector
// length, enumeration bound exceeded, incomplete coset table, ...
struct InvalidArgument : Error {
  using Error::Error;
};

// Coset enumeration did not close within the budget. Callers cannot tell an
// infinite index from an insufficient budget.
struct CosetLimitExceeded : Error {
  long long limit;
  explicit CosetLimitExceeded(long long limit_)
      : Error("coset enumeration exceeded the budget of " +
              std::to_string(limit_) + " cosets"),
        limit(limit_) {}
};

// rewrite_subgroup_word was handed a word that moves coset 0.
struct NotInSubgroup : Error {
  using Error::Error;
};

// A CDGA quotient relation whose differential does not lie in the ideal.
struct IllFormedQuotient : Error {
  using Error::Error;
};

// Requested bidegree/element lies outside the computed truncation window.
struct TruncationExceeded : Error {
  using Error::Error;
};

// No catalog entry for the requested (family, genus).
struct UnknownCase : Error {
  using Error::Error;
};

}  // namespace quadstab
