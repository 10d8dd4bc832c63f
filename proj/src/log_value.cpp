#include "effkit/log_value.hpp"

#include "effkit/errors.hpp"

namespace effkit {

namespace {
// Above this ln ln X we stop expanding to ln X (exp would dwarf the exponent range).
const BigFloat& loglog_threshold() {
  static const BigFloat t(3.0e7);
  return t;
}
}  // namespace

LogValue::LogValue() : kind_(Kind::Zero), v_(0.0) {}

LogValue LogValue::one() { return from_log(BigFloat(0.0)); }

LogValue LogValue::from_log(BigFloat ln) {
  ensures(!ln.is_nan(), "LogValue from NaN");
  LogValue r;
  if (ln.is_inf() && ln.sign() < 0) return r;
  if (ln.is_inf()) throw DefectError("LogValue::from_log(+inf); use from_loglog");
  r.kind_ = Kind::Log;
  r.v_ = std::move(ln);
  return r;
}

LogValue LogValue::from_loglog(BigFloat lnln) {
  ensures(!lnln.is_nan() && !lnln.is_inf(), "LogValue from non-finite log-log");
  if (lnln <= loglog_threshold()) return from_log(exp(lnln));
  LogValue r;
  r.kind_ = Kind::LogLog;
  r.v_ = std::move(lnln);
  return r;
}

LogValue LogValue::from_value(const BigFloat& x) {
  expects(x.sign() >= 0, "LogValue of a negative quantity");
  if (x.is_zero()) return LogValue();
  return from_log(effkit::log(x));
}

LogValue LogValue::from_int(const mpz_class& z) {
  expects(z >= 0, "LogValue of a negative integer");
  if (z == 0) return LogValue();
  return from_log(log_int(z));
}

LogValue LogValue::from_rat(const mpq_class& q) {
  expects(q >= 0, "LogValue of a negative rational");
  if (q == 0) return LogValue();
  return from_log(sub(log_int(q.get_num()), log_int(q.get_den())));
}

BigFloat LogValue::log() const {
  switch (kind_) {
    case Kind::Zero: return BigFloat::inf(-1);
    case Kind::Log: return v_;
    case Kind::LogLog: return BigFloat::inf(1);
  }
  return v_;
}

BigFloat LogValue::loglog() const {
  switch (kind_) {
    case Kind::Zero: throw PreconditionViolation("loglog of zero");
    case Kind::Log:
      expects(v_.sign() > 0, "loglog requires a value above 1");
      return effkit::log(v_);
    case Kind::LogLog: return v_;
  }
  return v_;
}

BigFloat LogValue::value() const {
  switch (kind_) {
    case Kind::Zero: return BigFloat(0.0);
    case Kind::Log: return exp(v_);
    case Kind::LogLog: return BigFloat::inf(1);
  }
  return v_;
}

BigFloat LogValue::log10() const {
  static const BigFloat ln10 = effkit::log(BigFloat(10.0));
  switch (kind_) {
    case Kind::Zero: return BigFloat::inf(-1);
    case Kind::Log: return div(v_, ln10);
    case Kind::LogLog: return BigFloat::inf(1);
  }
  return v_;
}

LogValue LogValue::operator*(const LogValue& o) const {
  if (is_zero() || o.is_zero()) return LogValue();
  if (kind_ == Kind::Log && o.kind_ == Kind::Log) return from_log(add(v_, o.v_));
  // At least one side is astronomically large; a factor at most 1 can only shrink
  // it, and we keep the dominant part (relative change below working precision).
  const LogValue& big = (kind_ == Kind::LogLog) ? *this : o;
  const LogValue& other = (kind_ == Kind::LogLog) ? o : *this;
  if (other.kind_ == Kind::Log && other.v_.sign() <= 0) {
    // ln(XY) = ln X + ln Y with ln Y ≤ 0 and |ln Y| ≪ ln X.
    return big;
  }
  BigFloat a = big.loglog(), b = other.loglog();
  BigFloat hi = max(a, b), lo = min(a, b);
  return from_loglog(add(hi, log1p(exp(sub(lo, hi)))));
}

LogValue LogValue::operator/(const LogValue& o) const {
  expects(!o.is_zero(), "LogValue division by zero");
  if (is_zero()) return LogValue();
  expects(o.kind_ == Kind::Log, "LogValue division by a log-log magnitude");
  if (kind_ == Kind::Log) return from_log(sub(v_, o.v_));
  return *this;  // dividing a tower by an ordinary magnitude is below precision
}

LogValue LogValue::operator+(const LogValue& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (kind_ == Kind::Log && o.kind_ == Kind::Log) {
    BigFloat hi = max(v_, o.v_), lo = min(v_, o.v_);
    return from_log(add(hi, log1p(exp(sub(lo, hi)))));
  }
  return (*this < o) ? o : *this;
}

LogValue LogValue::pow(const BigFloat& exponent) const {
  expects(exponent.sign() >= 0, "LogValue::pow with a negative exponent");
  if (exponent.is_zero()) return one();
  if (is_zero()) return LogValue();
  if (kind_ == Kind::Log) {
    BigFloat ln = mul(v_, exponent);
    if (ln.is_inf()) {
      // Overflowed: move to log-log space.
      expects(v_.sign() > 0, "overflow with base below 1");
      return from_loglog(add(effkit::log(v_), effkit::log(exponent)));
    }
    return from_log(ln);
  }
  return from_loglog(add(v_, effkit::log(exponent)));
}

std::partial_ordering operator<=>(const LogValue& a, const LogValue& b) {
  using K = LogValue::Kind;
  if (a.kind_ == K::Zero || b.kind_ == K::Zero) {
    if (a.kind_ == b.kind_) return std::partial_ordering::equivalent;
    return a.kind_ == K::Zero ? std::partial_ordering::less : std::partial_ordering::greater;
  }
  if (a.kind_ == b.kind_) return a.v_ <=> b.v_;
  // Mixed: a log-log value always exceeds e^(e^threshold) > any Log value.
  if (a.kind_ == K::LogLog) {
    if (b.v_.sign() <= 0) return std::partial_ordering::greater;
    return a.v_ <=> effkit::log(b.v_);
  }
  if (a.v_.sign() <= 0) return std::partial_ordering::less;
  return effkit::log(a.v_) <=> b.v_;
}

bool operator==(const LogValue& a, const LogValue& b) {
  return (a <=> b) == std::partial_ordering::equivalent;
}

std::string LogValue::describe(int digits) const {
  switch (kind_) {
    case Kind::Zero: return "0";
    case Kind::Log: return "exp(" + v_.to_string(digits) + ")";
    case Kind::LogLog: return "exp(exp(" + v_.to_string(digits) + "))";
  }
  return "";
}

}  // namespace effkit
