#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seqdim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad rational literal, bad JSON, inconsistent file.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input is well-formed but outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The exact engine only accepts purely periodic coefficients.
class NonPeriodicCoefficients : public DomainError {
 public:
  explicit NonPeriodicCoefficients(std::size_t index)
      : DomainError("coefficient a_" + std::to_string(index) +
                    " is not purely periodic"),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// A black-box sequence failed to produce a value.
class OracleError : public Error {
 public:
  using Error::Error;
};

/// The two exact dimension routes disagreed. Always a bug.
class RouteMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace seqdim
