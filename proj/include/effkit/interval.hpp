#pragma once

#include <gmpxx.h>

#include "effkit/bigfloat.hpp"

namespace effkit {

// Closed real interval with outward-rounded endpoints.
class Interval {
 public:
  Interval() = default;
  explicit Interval(const BigFloat& point) : lo_(point), hi_(point) {}
  Interval(BigFloat lo, BigFloat hi);

  static Interval from_int(const mpz_class& z, mpfr_prec_t prec = kWorkPrec);
  static Interval from_rat(const mpq_class& q, mpfr_prec_t prec = kWorkPrec);
  static Interval pi(mpfr_prec_t prec = kWorkPrec);
  static Interval e(mpfr_prec_t prec = kWorkPrec);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  BigFloat mid() const;
  BigFloat width() const;
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

  // Certified comparisons: true only when every point of *this satisfies it.
  bool certainly_le(const Interval& o) const { return hi_ <= o.lo_; }
  bool certainly_lt(const Interval& o) const { return hi_ < o.lo_; }
  bool certainly_positive() const { return lo_.sign() > 0; }
  bool certainly_negative() const { return hi_.sign() < 0; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);

 private:
  BigFloat lo_, hi_;
};

Interval sqr(const Interval& a);
Interval sqrt(const Interval& a);  // requires a ≥ 0 (negative part clipped)
Interval log(const Interval& a);   // requires a > 0
Interval exp(const Interval& a);
Interval abs(const Interval& a);
Interval max(const Interval& a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);

// Rectangular complex interval.
struct ComplexInterval {
  Interval re, im;

  static ComplexInterval from_rat(const mpq_class& re, const mpq_class& im,
                                  mpfr_prec_t prec = kWorkPrec);
  Interval abs() const;
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
};

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b);

}  // namespace effkit
