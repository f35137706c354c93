#pragma once

#include <stdexcept>
#include <string>

namespace commsub {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Precondition violated by an argument (bad modulus, k > n, wrong algebra kind, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Malformed JSON document or schema mismatch.
class ParseError : public Error {
public:
  using Error::Error;
};

/// A subspace enumeration would exceed the configured budget.
class EnumerationTooLarge : public Error {
public:
  EnumerationTooLarge(std::string count, std::string budget)
      : Error("enumeration too large: " + count + " subspaces exceed budget " + budget),
        count_(std::move(count)) {}

  const std::string& count() const noexcept { return count_; }

private:
  std::string count_;
};

} // namespace commsub
