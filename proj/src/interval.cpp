#include "effkit/interval.hpp"

#include <array>

#include "effkit/errors.hpp"

namespace effkit {

Interval::Interval(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  ensures(!(hi_ < lo_), "interval with lo > hi");
}

Interval Interval::from_int(const mpz_class& z, mpfr_prec_t prec) {
  return Interval(BigFloat::from_int(z, MPFR_RNDD, prec), BigFloat::from_int(z, MPFR_RNDU, prec));
}

Interval Interval::from_rat(const mpq_class& q, mpfr_prec_t prec) {
  return Interval(BigFloat::from_rat(q, MPFR_RNDD, prec), BigFloat::from_rat(q, MPFR_RNDU, prec));
}

Interval Interval::pi(mpfr_prec_t prec) {
  return Interval(BigFloat::pi(MPFR_RNDD, prec), BigFloat::pi(MPFR_RNDU, prec));
}

Interval Interval::e(mpfr_prec_t prec) {
  return Interval(BigFloat::e(MPFR_RNDD, prec), BigFloat::e(MPFR_RNDU, prec));
}

BigFloat Interval::mid() const {
  BigFloat s = add(lo_, hi_);
  mpfr_div_2ui(s.raw(), s.raw(), 1, MPFR_RNDN);
  return s;
}

BigFloat Interval::width() const { return sub(hi_, lo_, MPFR_RNDU); }

Interval operator+(const Interval& a, const Interval& b) {
  return Interval(add(a.lo_, b.lo_, MPFR_RNDD), add(a.hi_, b.hi_, MPFR_RNDU));
}

Interval operator-(const Interval& a, const Interval& b) {
  return Interval(sub(a.lo_, b.hi_, MPFR_RNDD), sub(a.hi_, b.lo_, MPFR_RNDU));
}

Interval operator-(const Interval& a) { return Interval(neg(a.hi_), neg(a.lo_)); }

Interval operator*(const Interval& a, const Interval& b) {
  const std::array<const BigFloat*, 2> x{&a.lo_, &a.hi_};
  const std::array<const BigFloat*, 2> y{&b.lo_, &b.hi_};
  BigFloat lo = BigFloat::inf(1), hi = BigFloat::inf(-1);
  for (const BigFloat* p : x) {
    for (const BigFloat* q : y) {
      lo = min(lo, mul(*p, *q, MPFR_RNDD));
      hi = max(hi, mul(*p, *q, MPFR_RNDU));
    }
  }
  return Interval(lo, hi);
}

Interval operator/(const Interval& a, const Interval& b) {
  expects(!b.contains_zero(), "interval division by an interval containing 0");
  Interval inv(div(BigFloat(1.0), b.hi_, MPFR_RNDD), div(BigFloat(1.0), b.lo_, MPFR_RNDU));
  return a * inv;
}

Interval sqr(const Interval& a) {
  Interval m = abs(a);
  return Interval(mul(m.lo(), m.lo(), MPFR_RNDD), mul(m.hi(), m.hi(), MPFR_RNDU));
}

Interval sqrt(const Interval& a) {
  BigFloat lo = a.lo().sign() < 0 ? BigFloat(0.0) : sqrt(a.lo(), MPFR_RNDD);
  return Interval(lo, sqrt(a.hi(), MPFR_RNDU));
}

Interval log(const Interval& a) {
  expects(a.certainly_positive(), "interval log of a non-positive interval");
  return Interval(log(a.lo(), MPFR_RNDD), log(a.hi(), MPFR_RNDU));
}

Interval exp(const Interval& a) {
  return Interval(exp(a.lo(), MPFR_RNDD), exp(a.hi(), MPFR_RNDU));
}

Interval abs(const Interval& a) {
  if (a.lo().sign() >= 0) return a;
  if (a.hi().sign() <= 0) return -a;
  return Interval(BigFloat(0.0), max(neg(a.lo()), a.hi()));
}

Interval max(const Interval& a, const Interval& b) {
  return Interval(max(a.lo(), b.lo()), max(a.hi(), b.hi()));
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(min(a.lo(), b.lo()), max(a.hi(), b.hi()));
}

ComplexInterval ComplexInterval::from_rat(const mpq_class& re, const mpq_class& im,
                                          mpfr_prec_t prec) {
  return {Interval::from_rat(re, prec), Interval::from_rat(im, prec)};
}

Interval ComplexInterval::abs() const { return sqrt(sqr(re) + sqr(im)); }

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re + b.re, a.im + b.im};
}

ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re - b.re, a.im - b.im};
}

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
  Interval den = sqr(b.re) + sqr(b.im);
  ComplexInterval conj{b.re, -b.im};
  ComplexInterval num = a * conj;
  return {num.re / den, num.im / den};
}

}  // namespace effkit
