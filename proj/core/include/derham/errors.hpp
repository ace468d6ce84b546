#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace derham {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed polynomial text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structurally invalid input: non-homogeneous generators, bad arity, bad flags.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// The variety is not smooth (or not equidimensional) so the pipeline refuses it.
class SingularInput : public Error {
 public:
  SingularInput(const std::string& what, std::string verdict)
      : Error(what), verdict_(std::move(verdict)) {}
  const std::string& verdict() const { return verdict_; }

 private:
  std::string verdict_;
};

// A certified procedure hit its degree cap without a decision.
class Inconclusive : public Error {
 public:
  Inconclusive(const std::string& what, long bound_reached)
      : Error(what), bound_(bound_reached) {}
  long bound_reached() const { return bound_; }

 private:
  long bound_;
};

// Candidate search or a user budget ran out.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

// Internal consistency check failed (a bug, not bad input).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace derham
