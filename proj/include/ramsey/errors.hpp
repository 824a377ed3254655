#ifndef RAMSEY_ERRORS_HPP
#define RAMSEY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ramsey {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed text input (graph files, partition files, rationals).
class ParseError : public Error {
 public:
  enum class Kind {
    bad_header,
    bad_line,
    bad_vertex,
    pair_order,
    loop,
    duplicate_pair,
    empty_colours,
    bad_colour,
    bad_number,
  };

  ParseError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// A stated hypothesis or parameter range does not hold. Constructive
// operations check their hypotheses up front and throw this instead of
// guessing.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An exhaustive mode was requested beyond its declared size cap.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

// A bounded search ran out of nodes. Distinct from an exhausted search.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// A guaranteed construction failed to validate. Always a bug, never a
// domain outcome; surfaced loudly instead of returning a wrong answer.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ramsey

#endif
