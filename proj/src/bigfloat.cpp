#include "effkit/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <memory>

#include "effkit/errors.hpp"

namespace effkit {

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double x, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, x, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_int(const mpz_class& z, mpfr_rnd_t rnd, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_z(r.v_, z.get_mpz_t(), rnd);
  return r;
}

BigFloat BigFloat::from_rat(const mpq_class& q, mpfr_rnd_t rnd, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_q(r.v_, q.get_mpq_t(), rnd);
  return r;
}

BigFloat BigFloat::from_string(const std::string& s, mpfr_prec_t prec) {
  BigFloat r(prec);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0 && r.is_nan())
    throw BadInput("not a number: " + s);
  return r;
}

BigFloat BigFloat::pi(mpfr_rnd_t rnd, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.v_, rnd);
  return r;
}

BigFloat BigFloat::e(mpfr_rnd_t rnd, mpfr_prec_t prec) {
  BigFloat one(1.0, prec);
  return exp(one, rnd);
}

BigFloat BigFloat::inf(int sign, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_inf(r.v_, sign);
  return r;
}

mpq_class BigFloat::to_rational() const {
  ensures(mpfr_number_p(v_) != 0, "to_rational on a non-finite value");
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
  mpq_class q(m);
  if (e >= 0) {
    mpz_class p2;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(e));
    q *= p2;
  } else {
    mpz_class p2;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(-e));
    q /= p2;
  }
  q.canonicalize();
  return q;
}

mpz_class BigFloat::floor() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
  return z;
}

mpz_class BigFloat::ceil() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDU);
  return z;
}

std::string BigFloat::to_string(int digits) const {
  if (is_nan()) return "nan";
  if (is_inf()) return sign() > 0 ? "inf" : "-inf";
  char* buf = nullptr;
  std::string fmt = "%." + std::to_string(std::max(1, digits - 1)) + "Re";
  mpfr_asprintf(&buf, fmt.c_str(), v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (a.is_nan() || b.is_nan()) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

bool operator==(const BigFloat& a, const BigFloat& b) {
  return !a.is_nan() && !b.is_nan() && mpfr_equal_p(a.v_, b.v_) != 0;
}

namespace {
mpfr_prec_t join(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

BigFloat add(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
  BigFloat r(join(a, b));
  mpfr_add(r.raw(), a.raw(), b.raw(), rnd);
  return r;
}

BigFloat sub(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
  BigFloat r(join(a, b));
  mpfr_sub(r.raw(), a.raw(), b.raw(), rnd);
  return r;
}

BigFloat mul(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
  BigFloat r(join(a, b));
  mpfr_mul(r.raw(), a.raw(), b.raw(), rnd);
  return r;
}

BigFloat div(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
  BigFloat r(join(a, b));
  mpfr_div(r.raw(), a.raw(), b.raw(), rnd);
  return r;
}

BigFloat log(const BigFloat& a, mpfr_rnd_t rnd) {
  BigFloat r(a.precision());
  mpfr_log(r.raw(), a.raw(), rnd);
  return r;
}

BigFloat exp(const BigFloat& a, mpfr_rnd_t rnd) {
  BigFloat r(a.precision());
  mpfr_exp(r.raw(), a.raw(), rnd);
  return r;
}

BigFloat sqrt(const BigFloat& a, mpfr_rnd_t rnd) {
  BigFloat r(a.precision());
  mpfr_sqrt(r.raw(), a.raw(), rnd);
  return r;
}

BigFloat pow(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
  BigFloat r(join(a, b));
  mpfr_pow(r.raw(), a.raw(), b.raw(), rnd);
  return r;
}

BigFloat log1p(const BigFloat& a, mpfr_rnd_t rnd) {
  BigFloat r(a.precision());
  mpfr_log1p(r.raw(), a.raw(), rnd);
  return r;
}

BigFloat lgamma_factorial(unsigned long n, mpfr_rnd_t rnd) {
  BigFloat r;
  BigFloat x(static_cast<double>(n) + 1.0);
  int sign = 0;
  mpfr_lgamma(r.raw(), &sign, x.raw(), rnd);
  return r;
}

BigFloat abs(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

BigFloat neg(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return (a < b) ? b : a; }
BigFloat min(const BigFloat& a, const BigFloat& b) { return (b < a) ? b : a; }

BigFloat log_int(const mpz_class& z, mpfr_rnd_t rnd) {
  expects(z > 0, "log_int of a nonpositive integer");
  // Round the conversion in the same direction as the log so the result brackets.
  return log(BigFloat::from_int(z, rnd), rnd);
}

BigFloat log_star(const BigFloat& x) {
  if (x.sign() <= 0) return BigFloat(1.0);
  return max(BigFloat(1.0), log(x));
}

BigFloat log_star_int(const mpz_class& z) {
  if (z <= 0) return BigFloat(1.0);
  return log_star(BigFloat::from_int(z));
}

}  // namespace effkit
