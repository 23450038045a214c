#pragma once

#include <stdexcept>
#include <string>

namespace domfan {

// Base of every error raised by the library. The CLI maps all of these to
// exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

// A search exhausted its node/seed budget before reaching a verdict.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Finite-type detection could not conclude within its budget.
class Undecided : public Error {
 public:
  using Error::Error;
};

class InexactDivision : public Error {
 public:
  using Error::Error;
};

class Inhomogeneous : public Error {
 public:
  using Error::Error;
};

class RegionNotCovered : public Error {
 public:
  using Error::Error;
};

}  // namespace domfan
