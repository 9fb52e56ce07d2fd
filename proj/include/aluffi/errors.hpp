#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aluffi {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial, point-set or ideal text. `position` is a byte
/// offset into the input (or a line number for file-level errors).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Operands live in different polynomial rings.
class RingMismatch : public Error {
 public:
  RingMismatch() : Error("ring mismatch") {}
  explicit RingMismatch(const std::string& what) : Error("ring mismatch: " + what) {}
};

/// An operation was called outside its domain (index out of range,
/// singular matrix, non-homogeneous input, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A point set is not in general linear position where it is required.
class GlpViolation : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Buchberger hit the configured S-pair degree cap.
class DegreeCapExceeded : public Error {
 public:
  explicit DegreeCapExceeded(unsigned degree, unsigned cap)
      : Error("S-pair of degree " + std::to_string(degree) +
              " exceeds degree cap " + std::to_string(cap)) {}
};

}  // namespace aluffi
