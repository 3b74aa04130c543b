#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dupcodes {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A decoder could not map the received word back to a codeword.
class DecodingFailure : public Error {
 public:
  using Error::Error;
};

/// An exhaustive computation was refused because the word space is too large.
class GuardExceeded : public Error {
 public:
  GuardExceeded(const std::string& what, std::uint64_t limit)
      : Error(what + " (guard: q^n <= " + std::to_string(limit) + ", use --force to override)"),
        limit_(limit) {}

  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
};

}  // namespace dupcodes
