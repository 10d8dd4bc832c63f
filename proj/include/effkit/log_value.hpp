#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

#include "effkit/bigfloat.hpp"

namespace effkit {

// A nonnegative magnitude X held through ln X, or through ln ln X once ln X
// itself would leave the float exponent range. X is never materialized.
class LogValue {
 public:
  LogValue();  // the quantity 0

  static LogValue zero() { return LogValue(); }
  static LogValue one();
  static LogValue from_log(BigFloat ln);
  static LogValue from_loglog(BigFloat lnln);
  static LogValue from_value(const BigFloat& x);
  static LogValue from_int(const mpz_class& z);
  static LogValue from_rat(const mpq_class& q);
  static LogValue from_double(double x) { return from_value(BigFloat(x)); }

  bool is_zero() const { return kind_ == Kind::Zero; }
  bool is_loglog() const { return kind_ == Kind::LogLog; }

  // ln X; -inf for zero, +inf when only ln ln X is representable.
  BigFloat log() const;
  // ln ln X; requires X > 1.
  BigFloat loglog() const;
  // X itself; +inf on overflow.
  BigFloat value() const;
  // log10 X, for reporting.
  BigFloat log10() const;

  LogValue operator*(const LogValue& o) const;
  LogValue operator/(const LogValue& o) const;
  LogValue operator+(const LogValue& o) const;
  LogValue pow(const BigFloat& exponent) const;  // exponent ≥ 0

  friend std::partial_ordering operator<=>(const LogValue& a, const LogValue& b);
  friend bool operator==(const LogValue& a, const LogValue& b);

  // Compact human form such as "exp(32)" or "exp(exp(1.5e3))".
  std::string describe(int digits = 12) const;

 private:
  enum class Kind { Zero, Log, LogLog };
  Kind kind_ = Kind::Zero;
  BigFloat v_;
};

}  // namespace effkit
