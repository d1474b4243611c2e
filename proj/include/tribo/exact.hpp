#pragma once

// Exact integer sign oracles for the Tribonacci constant psi (the unique
// real zero of X^3-X^2-X-1) and the golden ratio phi (the positive zero of
// X^2-X-1), plus the floor sequences built on them.
//
// sign(x - psi) = sign(x^3 - x^2 - x - 1) for every real x, because psi is
// the only real zero and the leading coefficient is positive; likewise
// sign(x - phi) = sign(x^2 - x - 1) for x >= 0.  All arithmetic is
// arbitrary-precision integer; there is no fixed-width fast path.

#include <gmpxx.h>

#include "tribo/numeration.hpp"

namespace tribo {

enum class Sign { Negative, Positive };

inline const char* to_string(Sign s) {
  return s == Sign::Negative ? "negative" : "positive";
}

// Sign of (num/den - psi), den >= 1.  Throws DegenerateInput if the integer
// cubic evaluates to exactly 0 (impossible for genuine inputs).
Sign cubic_sign(const Nat& num, const Nat& den);

// Sign of (num/den - phi), num >= 0, den >= 1.
Sign quadratic_sign(const Nat& num, const Nat& den);

// floor(psi * n).  Guess from a certified dyadic lower bound of psi, then
// exact +-1 correction via cubic_sign; the result x satisfies
// cubic_sign(x, n) = Negative and cubic_sign(x + 1, n) = Positive.
Nat floor_psi(const Nat& n);

// floor(phi * n), same contract via quadratic_sign.
Nat floor_phi(const Nat& n);

// a(n) = floor(psi n).
inline Nat seq_a(const Nat& n) { return floor_psi(n); }

// c(n) = floor(psi(n+1)) - floor(psi n), always 1 or 2.
int seq_c(const Nat& n);

// b(n) = floor((psi-1)(n+2)) - floor((psi-1)(n+1)), always 0 or 1,
// computed via floor((psi-1)m) = floor(psi m) - m.
int seq_b(const Nat& n);

// True iff {psi n} < 2 - psi, decided exactly as
// cubic_sign(floor_psi(n) + 2, n + 1) = Positive.  Requires n >= 1.
bool frac_psi_lt_threshold(const Nat& n);

// Sign of T_n - psi T_{n-1}, n >= 2.
Sign drift_sign_trib(unsigned long n);

// Sign of F_{n+1} - phi F_n, n >= 1.  Positive iff n is even.
Sign drift_sign_fib(unsigned long n);

// Dyadic bracket mant/2^prec < psi < (mant+1)/2^prec, verified by exact
// integer cubic signs.  Exposed for the interval layer and tests.
Nat psi_lower_mantissa(long prec);

// Same bracket for phi via integer square root.
Nat phi_lower_mantissa(long prec);

}  // namespace tribo
