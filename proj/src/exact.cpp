#include "tribo/exact.hpp"

#include <stdexcept>

#include "tribo/errors.hpp"

namespace tribo {

namespace {

// x^3 - x^2 d - x d^2 - d^3, written as x^2 (x - d) - d^2 (x + d).
void cubic_resultant(Nat& out, const Nat& x, const Nat& d) {
  Nat t1 = x * x;
  t1 *= (x - d);
  Nat t2 = d * d;
  t2 *= (x + d);
  out = t1 - t2;
}

// Verified dyadic bracket for an increasing-at-root sign function:
// sign_at(m, 2^prec) flips from Negative to Positive between m and m+1.
template <typename SignAt>
Nat refine_bracket(Nat mant, long from_prec, long to_prec, SignAt sign_at) {
  mant <<= static_cast<unsigned long>(to_prec - from_prec);
  // Newton carried the value to ~2x precision already when from_prec was
  // half of to_prec; here we only repair the last few ulps.
  Nat den(1);
  den <<= static_cast<unsigned long>(to_prec);
  int steps = 0;
  while (sign_at(mant, den) == Sign::Positive) {
    --mant;
    if (++steps > 64) throw std::logic_error("refine_bracket: drifting guess");
  }
  Nat next = mant + 1;
  while (sign_at(next, den) == Sign::Negative) {
    ++mant;
    ++next;
    if (++steps > 64) throw std::logic_error("refine_bracket: drifting guess");
  }
  return mant;
}

struct MantissaCache {
  long prec = 0;
  Nat mant;
};

}  // namespace

Sign cubic_sign(const Nat& num, const Nat& den) {
  Nat r;
  cubic_resultant(r, num, den);
  int s = sgn(r);
  if (s == 0) throw DegenerateInput("cubic_sign: exact zero (corrupt input)");
  return s < 0 ? Sign::Negative : Sign::Positive;
}

Sign quadratic_sign(const Nat& num, const Nat& den) {
  Nat r = num * num - num * den - den * den;
  int s = sgn(r);
  if (s == 0) throw DegenerateInput("quadratic_sign: exact zero");
  return s < 0 ? Sign::Negative : Sign::Positive;
}

Nat psi_lower_mantissa(long prec) {
  thread_local MantissaCache cache;
  if (cache.prec >= prec) {
    return cache.prec == prec ? cache.mant
                              : cache.mant >> static_cast<unsigned long>(
                                    cache.prec - prec);
  }
  if (cache.prec == 0) {
    // 1 < psi < 2: seed the bracket at 4 bits and verify from scratch.
    cache.mant = refine_bracket(Nat(29), 4, 4, cubic_sign);  // 29/16 = 1.8125
    cache.prec = 4;
  }
  while (cache.prec < prec) {
    long next = std::min(prec, cache.prec * 2);
    // Newton step on f(x) = x^3 - x^2 - x - 1 in scaled integers:
    // with x = m / 2^p, m' = m*2^(q-p) - f(x)*2^q / f'(x).
    const long p = cache.prec, q = next;
    Nat m = cache.mant;
    Nat two_p(1);
    two_p <<= static_cast<unsigned long>(p);
    Nat f;  // f(m/2^p) * 2^{3p}
    cubic_resultant(f, m, two_p);
    Nat df = 3 * m * m - 2 * m * two_p - two_p * two_p;  // f'(m/2^p) * 2^{2p}
    // m' at scale q: m*2^{q-p} - f * 2^{q} / (df * 2^{p})
    Nat shifted = m << static_cast<unsigned long>(q - p);
    Nat corr_num = f << static_cast<unsigned long>(q);
    Nat corr_den = df << static_cast<unsigned long>(p);
    Nat corr = corr_num / corr_den;  // truncated; repaired below
    cache.mant = refine_bracket(shifted - corr, q, q, cubic_sign);
    cache.prec = next;
  }
  return cache.mant;
}

Nat phi_lower_mantissa(long prec) {
  thread_local MantissaCache cache;
  if (cache.prec >= prec) {
    return cache.prec == prec ? cache.mant
                              : cache.mant >> static_cast<unsigned long>(
                                    cache.prec - prec);
  }
  // phi * 2^p = (2^p + sqrt(5 * 4^p)) / 2; integer sqrt is a lower bound.
  Nat five(5);
  Nat scaled = five << static_cast<unsigned long>(2 * prec);
  Nat root = sqrt(scaled);
  Nat guess = (root + (Nat(1) << static_cast<unsigned long>(prec))) >> 1;
  cache.mant = refine_bracket(guess, prec, prec, quadratic_sign);
  cache.prec = prec;
  return cache.mant;
}

namespace {

// Shared guess-then-correct floor driver.  `mant(prec)` yields a verified
// dyadic lower bound of the constant; `sign_at` is its exact sign oracle.
template <typename MantFn, typename SignAt>
Nat floor_mul(const Nat& n, MantFn mant, SignAt sign_at) {
  if (n < 0) throw DomainError("floor: negative argument");
  if (n == 0) return Nat(0);
  const long bits = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
  long prec = 128;
  while (prec < bits + 8) prec *= 2;
  Nat guess = mant(prec) * n;
  guess >>= static_cast<unsigned long>(prec);
  // guess <= value < guess + 2, so at most one upward step; the loop bound
  // of 3 guards against a defective guess path.
  int steps = 0;
  while (sign_at(guess + 1, n) == Sign::Negative) {
    ++guess;
    if (++steps > 3) throw std::logic_error("floor: guess off by more than 3");
  }
  while (sign_at(guess, n) == Sign::Positive) {
    --guess;
    if (++steps > 3) throw std::logic_error("floor: guess off by more than 3");
  }
  return guess;
}

}  // namespace

Nat floor_psi(const Nat& n) { return floor_mul(n, psi_lower_mantissa, cubic_sign); }

Nat floor_phi(const Nat& n) {
  return floor_mul(n, phi_lower_mantissa, quadratic_sign);
}

int seq_c(const Nat& n) {
  Nat d = floor_psi(n + 1) - floor_psi(n);
  return static_cast<int>(d.get_si());
}

int seq_b(const Nat& n) {
  Nat hi = floor_psi(n + 2) - (n + 2);
  Nat lo = floor_psi(n + 1) - (n + 1);
  return static_cast<int>(Nat(hi - lo).get_si());
}

bool frac_psi_lt_threshold(const Nat& n) {
  if (n < 1) throw DomainError("frac_psi_lt_threshold: requires n >= 1");
  // {psi n} < 2 - psi  <=>  psi (n+1) < floor(psi n) + 2.
  return cubic_sign(floor_psi(n) + 2, n + 1) == Sign::Positive;
}

Sign drift_sign_trib(unsigned long n) {
  if (n < 2) throw DomainError("drift_sign_trib: requires n >= 2");
  return cubic_sign(basis_term(NumerationSystem::Tribonacci, n),
                    basis_term(NumerationSystem::Tribonacci, n - 1));
}

Sign drift_sign_fib(unsigned long n) {
  if (n < 1) throw DomainError("drift_sign_fib: requires n >= 1");
  return quadratic_sign(basis_term(NumerationSystem::Fibonacci, n + 1),
                        basis_term(NumerationSystem::Fibonacci, n));
}

}  // namespace tribo
