#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sptcrank {

// Raised when a caller violates a documented precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Internal consistency failures. These indicate a construction bug, never bad input.
class InternalAssertion : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NonUnitLeadingCoefficient : public InvalidArgument {
 public:
  NonUnitLeadingCoefficient()
      : InvalidArgument("series leading coefficient is not +1 or -1") {}
};

class NotDivisible : public InternalAssertion {
 public:
  explicit NotDivisible(std::size_t q_power)
      : InternalAssertion("z-polynomial at q^" + std::to_string(q_power) +
                          " is not divisible by the crank kernel (1-z)(1-1/z)"),
        q_power_(q_power) {}
  std::size_t q_power() const noexcept { return q_power_; }

 private:
  std::size_t q_power_;
};

class IntegralityViolation : public InternalAssertion {
 public:
  explicit IntegralityViolation(std::size_t index)
      : InternalAssertion("non-integral coefficient at q^" + std::to_string(index)),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class CapExceeded : public InvalidArgument {
 public:
  CapExceeded(int n, int cap)
      : InvalidArgument("n = " + std::to_string(n) + " exceeds enumeration cap " +
                        std::to_string(cap)) {}
};

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sptcrank

namespace sptcrank {

class NoConvergence : public NumericError {
 public:
  using NumericError::NumericError;
};

class BadParity : public InvalidArgument {
 public:
  BadParity() : InvalidArgument("pole at q = -1 needs a half-integer B (2B odd)") {}
};

class EmptyBand : public InvalidArgument {
 public:
  EmptyBand() : InvalidArgument("no sample points in the band") {}
};

class PoleInput : public InvalidArgument {
 public:
  PoleInput() : InvalidArgument("argument lies on a pole (within 1e-8 of an integer)") {}
};

class Overflow : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class UnsupportedOrder : public InvalidArgument {
 public:
  UnsupportedOrder() : InvalidArgument("closed-form Bessel I needs order in {+-1/2, +-3/2}") {}
};

class GridOutOfRange : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

}  // namespace sptcrank
