#pragma once

// Certified interval scalars.  The working representation is a pair of
// MPFR numbers (exact dyadic rationals) with all operations rounded
// outward, so every Interval is a true enclosure.  Exact rational
// endpoints are available at any time via lo_q()/hi_q().

#include <cstdio>  // before mpfr.h: enables the mpfr_*printf prototypes

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

#include "tribo/errors.hpp"

namespace tribo {

// Internal escalation signal: the current working precision cannot certify
// the requested fact.  Caught by with_precision_escalation below.
struct Indeterminate {};

inline constexpr long kDefaultStartPrec = 128;
inline constexpr long kPrecCap = 16384;

// Runs f(prec) with doubling precision until it returns without throwing
// Indeterminate; converts exhaustion into PrecisionCapExceeded.
template <typename F>
auto with_precision_escalation(long start, long cap, const char* what, F&& f) {
  for (long p = start; p <= cap; p *= 2) {
    try {
      return f(p);
    } catch (const Indeterminate&) {
      // widen and retry
    }
  }
  throw PrecisionCapExceeded(std::string(what) +
                                 ": not certified within precision cap",
                             cap);
}

// Exact-rational carrier for certified real quantities (the public face of
// the interval layer; lo <= hi always).
struct RationalInterval {
  mpq_class lo, hi;

  mpq_class width() const { return hi - lo; }
  bool contains(const mpq_class& v) const { return lo <= v && v <= hi; }
};

struct ComplexInterval {
  RationalInterval re, im;
};

class Interval {
 public:
  explicit Interval(mpfr_prec_t prec);
  Interval(const Interval&);
  Interval(Interval&&) noexcept;
  Interval& operator=(const Interval&);
  Interval& operator=(Interval&&) noexcept;
  ~Interval();

  static Interval from_long(long v, mpfr_prec_t prec);
  static Interval from_mpz(const mpz_class& v, mpfr_prec_t prec);
  // Enclosure of num/den (den > 0).
  static Interval from_ratio(const mpz_class& num, const mpz_class& den,
                             mpfr_prec_t prec);
  // Exact point interval mant / 2^scale together with its +1ulp upper mate:
  // [mant/2^scale, (mant+1)/2^scale].
  static Interval dyadic_bracket(const mpz_class& mant, long scale,
                                 mpfr_prec_t prec);
  static Interval pi(mpfr_prec_t prec);

  mpfr_prec_t prec() const { return prec_; }

  Interval operator-() const;
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval scaled_by_mpz(const mpz_class& k) const;  // k * this, exact op

  Interval square() const;  // tight: lower bound 0 when straddling
  Interval abs() const;
  Interval sqrt() const;  // throws Indeterminate if lo < 0

  // Quadrant-safe atan2 over a rectangle that avoids the branch cut
  // (y strictly signed, or x strictly positive); throws Indeterminate
  // otherwise.  Range is (-pi, pi].
  static Interval atan2(const Interval& y, const Interval& x);

  // Certified predicates.
  bool strictly_less(const Interval& o) const { return cmp_hi_lo(o) < 0; }
  bool strictly_positive() const;
  bool strictly_negative() const;
  bool contains_zero() const;
  bool width_at_most_pow2(long k) const;  // width <= 2^-k

  // Exact endpoints.
  mpq_class lo_q() const;
  mpq_class hi_q() const;
  RationalInterval to_rational() const { return {lo_q(), hi_q()}; }

  // Midpoint floor as an integer (not certified; callers must verify).
  mpz_class mid_floor() const;

  // If floor is the same across the whole interval, return it.
  bool certified_floor(mpz_class& out) const;

  std::string str(int digits = 20) const;  // decimal, for reports

  const mpfr_t& lo_raw() const { return lo_; }
  const mpfr_t& hi_raw() const { return hi_; }
  mpfr_t& lo_raw() { return lo_; }
  mpfr_t& hi_raw() { return hi_; }

 private:
  int cmp_hi_lo(const Interval& o) const { return mpfr_cmp(hi_, o.lo_); }

  mpfr_t lo_;
  mpfr_t hi_;
  mpfr_prec_t prec_;
};

struct CInterval {
  Interval re, im;

  CInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

  CInterval conj() const { return {re, -im}; }
  Interval norm2() const { return re.square() + im.square(); }
  Interval abs() const { return norm2().sqrt(); }

  friend CInterval operator+(const CInterval& a, const CInterval& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend CInterval operator-(const CInterval& a, const CInterval& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend CInterval operator*(const CInterval& a, const CInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend CInterval operator*(const Interval& a, const CInterval& b) {
    return {a * b.re, a * b.im};
  }
  friend CInterval operator/(const CInterval& a, const CInterval& b) {
    Interval n2 = b.norm2();
    CInterval num = a * b.conj();
    return {num.re / n2, num.im / n2};
  }

  CInterval pow(unsigned long e) const;  // binary powering

  ComplexInterval to_rational() const {
    return {re.to_rational(), im.to_rational()};
  }
};

}  // namespace tribo
