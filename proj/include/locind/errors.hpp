#pragma once

#include <stdexcept>

namespace locind {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or a violated precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// An exhaustive computation was asked to run past its configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// A local oracle answered outside its contract (feasibility, ratio or
// monotonicity).
class OracleViolation : public Error {
 public:
  using Error::Error;
};

// An algorithm produced a set that is not independent.
class IndependenceViolation : public Error {
 public:
  using Error::Error;
};

// The algorithm does not accept this kind of instance.
class UnsupportedInstance : public Error {
 public:
  using Error::Error;
};

}  // namespace locind
