#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace kwc {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input data (files, CLI values).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A (positions, leftover) pair that no run of the encoder could have produced.
class MalformedTraceError : public InputError {
 public:
  using InputError::InputError;
};

/// A formula hit a degenerate point (e.g. a zero denominator).
class DegenerateError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// An exhaustive routine was asked to go past its size cap or node budget.
/// `partial` carries whatever was counted before giving up, when meaningful.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what,
                         std::optional<std::uint64_t> partial = std::nullopt)
      : Error(what), partial_(partial) {}

  [[nodiscard]] std::optional<std::uint64_t> partial() const { return partial_; }

 private:
  std::optional<std::uint64_t> partial_;
};

}  // namespace kwc
