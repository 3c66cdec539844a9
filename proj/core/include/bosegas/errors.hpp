#pragma once

#include <stdexcept>
#include <string>

namespace bosegas {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation
/// (n = 0, nonpositive Q1, an empty search bracket, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A request exceeds a configured size limit, e.g. the partition cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A floating-point recurrence left the representable range.
class OverflowError : public Error {
 public:
  OverflowError(const std::string& what, int index) : Error(what), index_(index) {}
  [[nodiscard]] int index() const noexcept { return index_; }

 private:
  int index_;
};

/// A computation produced a non-finite or otherwise unusable value.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// A maximization could not locate an interior optimum.
class SearchError : public Error {
 public:
  using Error::Error;
};

}  // namespace bosegas
