#pragma once

#include <stdexcept>
#include <string>

namespace mixmult {

/// Malformed input or a violated precondition. Surfaces as CLI exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The standing hypothesis I = I_1...I_d not in sqrt(Ann N) fails, or the
/// saturated module has no positive-dimensional part.
class DegenerateSystemError : public InputError {
 public:
  using InputError::InputError;
};

/// minimal_primes of the unit ideal.
class EmptySpectrumError : public InputError {
 public:
  using InputError::InputError;
};

/// A monomial count that is not finite.
class NonArtinianError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Localization at a prime that is not minimal over the annihilator.
class InfiniteLengthError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The length grid did not agree with a polynomial before the offset cap.
class NonStabilizedError : public std::runtime_error {
 public:
  NonStabilizedError(const std::string& what, unsigned last_offset)
      : std::runtime_error(what), last_offset_(last_offset) {}
  unsigned last_offset() const noexcept { return last_offset_; }

 private:
  unsigned last_offset_;
};

}  // namespace mixmult
