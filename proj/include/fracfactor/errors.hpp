#pragma once

#include <stdexcept>
#include <string>

namespace fracfactor {

// Base of all errors raised by the library. The C API maps each subclass to
// its own status code, the CLI maps those to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad vertex index, overlapping sets, parse failures.
class InputError : public Error {
 public:
  using Error::Error;
};

// Request exceeds a configured enumeration cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Operation called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A proved consequence failed on a concrete input. Either the input broke an
// assumption or the implementation is wrong.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace fracfactor
