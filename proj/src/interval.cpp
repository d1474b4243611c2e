#include "tribo/interval.hpp"

#include <algorithm>
#include <sstream>

namespace tribo {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, 2);
  mpfr_init2(hi_, 2);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, o.prec_);
    mpfr_set_prec(hi_, o.prec_);
    prec_ = o.prec_;
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  std::swap(prec_, o.prec_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_long(long v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval Interval::from_mpz(const mpz_class& v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_ratio(const mpz_class& num, const mpz_class& den,
                              mpfr_prec_t prec) {
  Interval r(prec);
  mpq_class q(num, den);
  q.canonicalize();
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::dyadic_bracket(const mpz_class& mant, long scale,
                                  mpfr_prec_t prec) {
  Interval r(prec);
  mpz_class hi_mant = mant + 1;
  mpfr_set_z_2exp(r.lo_, mant.get_mpz_t(), -scale, MPFR_RNDD);
  mpfr_set_z_2exp(r.hi_, hi_mant.get_mpz_t(), -scale, MPFR_RNDU);
  return r;
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-() const {
  Interval r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  const mpfr_t* as[2] = {&a.lo_, &a.hi_};
  const mpfr_t* bs[2] = {&b.lo_, &b.hi_};
  bool first = true;
  for (const mpfr_t* x : as) {
    for (const mpfr_t* y : bs) {
      mpfr_mul(t, *x, *y, MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, *x, *y, MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw Indeterminate{};
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  const mpfr_t* as[2] = {&a.lo_, &a.hi_};
  const mpfr_t* bs[2] = {&b.lo_, &b.hi_};
  bool first = true;
  for (const mpfr_t* x : as) {
    for (const mpfr_t* y : bs) {
      mpfr_div(t, *x, *y, MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_div(t, *x, *y, MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

Interval Interval::scaled_by_mpz(const mpz_class& k) const {
  Interval r(prec_);
  if (sgn(k) >= 0) {
    mpfr_mul_z(r.lo_, lo_, k.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_z(r.hi_, hi_, k.get_mpz_t(), MPFR_RNDU);
  } else {
    mpfr_mul_z(r.lo_, hi_, k.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_z(r.hi_, lo_, k.get_mpz_t(), MPFR_RNDU);
  }
  return r;
}

Interval Interval::square() const {
  Interval r(prec_);
  if (mpfr_sgn(lo_) >= 0) {
    mpfr_mul(r.lo_, lo_, lo_, MPFR_RNDD);
    mpfr_mul(r.hi_, hi_, hi_, MPFR_RNDU);
  } else if (mpfr_sgn(hi_) <= 0) {
    mpfr_mul(r.lo_, hi_, hi_, MPFR_RNDD);
    mpfr_mul(r.hi_, lo_, lo_, MPFR_RNDU);
  } else {
    mpfr_set_zero(r.lo_, 1);
    mpfr_t t;
    mpfr_init2(t, prec_);
    mpfr_mul(t, lo_, lo_, MPFR_RNDU);
    mpfr_mul(r.hi_, hi_, hi_, MPFR_RNDU);
    if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
  }
  return r;
}

Interval Interval::abs() const {
  if (mpfr_sgn(lo_) >= 0) return *this;
  if (mpfr_sgn(hi_) <= 0) return -*this;
  Interval r(prec_);
  mpfr_set_zero(r.lo_, 1);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  if (mpfr_cmp(r.hi_, hi_) < 0) mpfr_set(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::sqrt() const {
  if (mpfr_sgn(lo_) < 0) throw Indeterminate{};
  Interval r(prec_);
  mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::atan2(const Interval& y, const Interval& x) {
  // atan2 is monotone in each argument on any region avoiding the branch
  // cut, so corner evaluation is exact up to rounding.
  const bool y_pos = mpfr_sgn(y.lo_) > 0;
  const bool y_neg = mpfr_sgn(y.hi_) < 0;
  const bool x_pos = mpfr_sgn(x.lo_) > 0;
  if (!y_pos && !y_neg && !x_pos) throw Indeterminate{};
  Interval r(std::max(y.prec_, x.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  const mpfr_t* ys[2] = {&y.lo_, &y.hi_};
  const mpfr_t* xs[2] = {&x.lo_, &x.hi_};
  bool first = true;
  for (const mpfr_t* yy : ys) {
    for (const mpfr_t* xx : xs) {
      mpfr_atan2(t, *yy, *xx, MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_atan2(t, *yy, *xx, MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

bool Interval::strictly_positive() const { return mpfr_sgn(lo_) > 0; }

bool Interval::strictly_negative() const { return mpfr_sgn(hi_) < 0; }

bool Interval::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Interval::width_at_most_pow2(long k) const {
  mpfr_t w, bound;
  mpfr_init2(w, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  mpfr_init2(bound, 8);
  mpfr_set_ui_2exp(bound, 1, -k, MPFR_RNDD);
  bool ok = mpfr_cmp(w, bound) <= 0;
  mpfr_clear(w);
  mpfr_clear(bound);
  return ok;
}

mpq_class Interval::lo_q() const {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), lo_);
  return q;
}

mpq_class Interval::hi_q() const {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), hi_);
  return q;
}

mpz_class Interval::mid_floor() const {
  mpfr_t m;
  mpfr_init2(m, prec_);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), m, MPFR_RNDD);  // exact floor into mpz
  mpfr_clear(m);
  return z;
}

bool Interval::certified_floor(mpz_class& out) const {
  mpz_class flo, fhi;
  mpfr_get_z(flo.get_mpz_t(), lo_, MPFR_RNDD);
  mpfr_get_z(fhi.get_mpz_t(), hi_, MPFR_RNDD);
  if (flo != fhi) return false;
  out = flo;
  return true;
}

std::string Interval::str(int digits) const {
  char* lo_s = nullptr;
  char* hi_s = nullptr;
  mpfr_asprintf(&lo_s, "%.*Rg", digits, lo_);
  mpfr_asprintf(&hi_s, "%.*Rg", digits, hi_);
  std::string out = std::string("[") + lo_s + ", " + hi_s + "]";
  mpfr_free_str(lo_s);
  mpfr_free_str(hi_s);
  return out;
}

CInterval CInterval::pow(unsigned long e) const {
  mpfr_prec_t p = std::max(re.prec(), im.prec());
  CInterval acc(Interval::from_long(1, p), Interval::from_long(0, p));
  CInterval base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

}  // namespace tribo
