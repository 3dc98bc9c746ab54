#pragma once

#include <stdexcept>
#include <string>

namespace mubsupport {

// Base for everything this library throws. The CLI maps the three families
// below onto exit codes 2 (theorem violation), 3 (input) and 4 (resume).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input-side failures: bad dimensions, malformed files, degenerate states.
class InputError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

class InvalidDimension : public InputError {
 public:
  using InputError::InputError;
};

class DivisionByZero : public InputError {
 public:
  using InputError::InputError;
};

class NoInverse : public InputError {
 public:
  using InputError::InputError;
};

class InvalidModulus : public InputError {
 public:
  using InputError::InputError;
};

class DegenerateSum : public InputError {
 public:
  using InputError::InputError;
};

class DegenerateState : public InputError {
 public:
  using InputError::InputError;
};

class TrivialClass : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

// A proven statement failed on a concrete witness. Must never fire.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

class ResumeError : public Error {
 public:
  using Error::Error;
};

}  // namespace mubsupport
