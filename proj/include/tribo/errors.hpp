#pragma once

#include <stdexcept>
#include <string>

namespace tribo {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A digit word contains a forbidden factor ("11" Fibonacci, "111" Tribonacci).
struct InvalidWord : Error {
  using Error::Error;
};

// Argument outside an operation's domain (e.g. least_term(0)).
struct DomainError : Error {
  using Error::Error;
};

// An exact integer sign evaluation hit 0 where irrationality forbids it.
struct DegenerateInput : Error {
  using Error::Error;
};

// Certified computation did not resolve before the working-precision cap.
struct PrecisionCapExceeded : Error {
  explicit PrecisionCapExceeded(const std::string& what, long cap_bits_ = 0)
      : Error(what), cap_bits(cap_bits_) {}
  long cap_bits = 0;
};

// A bounded search ran out of budget.  Distinct from "does not exist".
struct CapExceeded : Error {
  CapExceeded(const std::string& what, unsigned long i_, unsigned long j_,
              unsigned long cap_)
      : Error(what), i(i_), j(j_), cap(cap_) {}
  unsigned long i = 0;
  unsigned long j = 0;
  unsigned long cap = 0;
};

// Learn-and-verify failed to converge within the signature-depth limit.
struct ConstructionDiverged : Error {
  using Error::Error;
};

// A word symbol is outside the machine's alphabet.
struct AlphabetMismatch : Error {
  using Error::Error;
};

// A re-checkable verification layer failed; the message names the layer.
struct VerificationFailed : Error {
  using Error::Error;
};

// A sweep falsified a bound that is asserted to hold.
struct BoundViolated : Error {
  explicit BoundViolated(const std::string& what, unsigned long n_)
      : Error(what), n(n_) {}
  unsigned long n = 0;
};

}  // namespace tribo
