#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <string>

namespace effkit {

// Working precision (bits) used unless a caller asks for more.
inline constexpr mpfr_prec_t kWorkPrec = 256;

// Owning wrapper over an MPFR number. Arithmetic through the free functions
// takes an explicit rounding mode so that interval code can round outward.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = kWorkPrec);
  BigFloat(double x, mpfr_prec_t prec = kWorkPrec);  // NOLINT: implicit by intent
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static BigFloat from_int(const mpz_class& z, mpfr_rnd_t rnd = MPFR_RNDN,
                           mpfr_prec_t prec = kWorkPrec);
  static BigFloat from_rat(const mpq_class& q, mpfr_rnd_t rnd = MPFR_RNDN,
                           mpfr_prec_t prec = kWorkPrec);
  static BigFloat from_string(const std::string& s, mpfr_prec_t prec = kWorkPrec);
  static BigFloat pi(mpfr_rnd_t rnd = MPFR_RNDN, mpfr_prec_t prec = kWorkPrec);
  static BigFloat e(mpfr_rnd_t rnd = MPFR_RNDN, mpfr_prec_t prec = kWorkPrec);
  static BigFloat inf(int sign = 1, mpfr_prec_t prec = kWorkPrec);

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  bool is_inf() const { return mpfr_inf_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Exact value as a dyadic rational (finite values only).
  mpq_class to_rational() const;
  mpz_class floor() const;
  mpz_class ceil() const;
  // Scientific notation with the requested number of significant digits.
  std::string to_string(int digits = 20) const;

  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);
  friend bool operator==(const BigFloat& a, const BigFloat& b);

 private:
  mpfr_t v_;
};

BigFloat add(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat sub(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat mul(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat div(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat log(const BigFloat& a, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat exp(const BigFloat& a, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat sqrt(const BigFloat& a, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat pow(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat log1p(const BigFloat& a, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat lgamma_factorial(unsigned long n, mpfr_rnd_t rnd = MPFR_RNDN);  // log(n!)
BigFloat abs(const BigFloat& a);
BigFloat neg(const BigFloat& a);
BigFloat max(const BigFloat& a, const BigFloat& b);
BigFloat min(const BigFloat& a, const BigFloat& b);

inline BigFloat operator+(const BigFloat& a, const BigFloat& b) { return add(a, b); }
inline BigFloat operator-(const BigFloat& a, const BigFloat& b) { return sub(a, b); }
inline BigFloat operator*(const BigFloat& a, const BigFloat& b) { return mul(a, b); }
inline BigFloat operator/(const BigFloat& a, const BigFloat& b) { return div(a, b); }
inline BigFloat operator-(const BigFloat& a) { return neg(a); }

// log of a positive integer, rounded as requested.
BigFloat log_int(const mpz_class& z, mpfr_rnd_t rnd = MPFR_RNDN);

// log* x = max(1, log x), with log* 0 = 1.
BigFloat log_star(const BigFloat& x);
BigFloat log_star_int(const mpz_class& z);

}  // namespace effkit
