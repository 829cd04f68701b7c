#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace limitless {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class DivisionByZeroInterval : public Error {
 public:
  DivisionByZeroInterval() : Error("interval division: divisor contains 0") {}
};

/// Argument outside the domain of a numeric kernel (e.g. sqrt of a negative).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Expression evaluation hit a pole or left the domain of sqrt.
class EvalDomainError : public Error {
 public:
  using Error::Error;
};

/// Caller violated a documented precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t offset,
             std::vector<std::string> expected)
      : Error(message + " at offset " + std::to_string(offset)),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept {
    return expected_;
  }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// A premise about a control function could not be certified at the
/// requested precision.
class PremiseNotCertified : public Error {
 public:
  using Error::Error;
};

/// An exact spot check contradicted a conclusion drawn from an assumed
/// control claim, so the claim itself is false.
class ConclusionRefuted : public Error {
 public:
  using Error::Error;
};

class DisjointDomains : public Error {
 public:
  DisjointDomains() : Error("claim domains do not intersect") {}
};

/// The certified bracket check at the end of the subdivision search failed,
/// meaning the supplied Lipschitz-type hypothesis was false.
class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

/// A bounded search ran out of budget without an answer either way.
class SearchExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace limitless
