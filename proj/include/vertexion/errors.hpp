#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace vertexion {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  using Error::Error;
};

/// Extra sample points do not lie on the interpolating polynomial.
class InconsistentSample : public Error {
 public:
  using Error::Error;
};

class ExhaustedRange : public Error {
 public:
  using Error::Error;
};

/// L-operator parameters violate cd + af = 0 or tcd + be = 0.
class ConstraintViolation : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Two spectral (or Grothendieck) variables coincide where a formula divides by their difference.
class CoincidentVariables : public Error {
 public:
  using Error::Error;
};

/// A partition does not fit the (N - n) x n frame.
class FrameViolation : public Error {
 public:
  using Error::Error;
};

class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Job configuration rejected; `pointer` is the JSON pointer of the offending field.
class ConfigError : public Error {
 public:
  ConfigError(std::string pointer, const std::string& message)
      : Error(pointer.empty() ? message : pointer + ": " + message), pointer_(std::move(pointer)) {}

  [[nodiscard]] const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace vertexion
