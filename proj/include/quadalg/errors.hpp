#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace quadalg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Two scalars live in different quadratic fields ℚ(√d) ≠ ℚ(√d').
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// The requested value needs a root that is not in the configured field.
class NeedsFieldExtension : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A named precondition of an operation does not hold.
class PreconditionFailed : public Error {
 public:
  PreconditionFailed(std::string condition, const std::string& detail)
      : Error(condition + ": " + detail), condition_(std::move(condition)) {}

  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

}  // namespace quadalg
