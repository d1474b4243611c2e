#pragma once

// Fibonacci (Zeckendorf) and Tribonacci positional numeration: greedy
// encoding, decoding, validity, and two-track alignment.  Digit words are
// msd-first; the canonical representation of 0 is the empty word.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tribo {

using Nat = mpz_class;

enum class NumerationSystem { Fibonacci, Tribonacci };

// Basis starts at index 2 for both systems: F2=1, F3=2, ... / T2=1, T3=2, ...
// A word e_t e_{t-1} ... e_2 of length L has its leftmost digit at index
// t = L + 1.
struct DigitWord {
  std::vector<std::uint8_t> digits;  // msd first, each 0 or 1
  NumerationSystem system = NumerationSystem::Tribonacci;

  bool empty() const { return digits.empty(); }
  std::size_t size() const { return digits.size(); }
  std::string str() const;

  friend bool operator==(const DigitWord&, const DigitWord&) = default;
};

// Two aligned tracks (equal length after left-padding with 0), msd first.
struct PairWord {
  std::vector<std::pair<std::uint8_t, std::uint8_t>> symbols;
  NumerationSystem system = NumerationSystem::Tribonacci;

  std::size_t size() const { return symbols.size(); }
  std::string str() const;  // "001:110"

  friend bool operator==(const PairWord&, const PairWord&) = default;
};

// F_i or T_i, by exact integer recurrence.
Nat basis_term(NumerationSystem system, unsigned long i);

// Greedy (Zeckendorf-style) representation; canonical and valid.
DigitWord encode(NumerationSystem system, const Nat& n);

// Weighted digit sum.  Leading zeros permitted; throws InvalidWord on a
// forbidden factor ("11" Fibonacci, "111" Tribonacci).
Nat decode(const DigitWord& w);

// True iff the system's forbidden factor is absent.
bool is_valid(const DigitWord& w);

// Zip two same-system words msd-first, left-padding the shorter with 0.
PairWord pair_align(const DigitWord& w1, const DigitWord& w2);

// Basis value of the lowest set digit of encode(n): V(n) / V'(n).
// Throws DomainError for n = 0.
Nat least_term(NumerationSystem system, const Nat& n);

// Parse an ASCII {0,1} string (msd first).  Empty string is the zero word.
DigitWord word_from_string(std::string_view s, NumerationSystem system);

}  // namespace tribo
