#include "effkit/effective_bounds.hpp"

#include <cmath>

#include "effkit/errors.hpp"
#include "effkit/integer.hpp"

namespace effkit {

std::vector<std::pair<std::string, double>> ConstantPack::entries() const {
  return {{"C_expO_r", C_expO_r}, {"C_expO_rs", C_expO_rs}, {"C_NlogN", C_NlogN},
          {"C_c1", C_c1},         {"C_c2", C_c2},           {"C_prop36", C_prop36}};
}

void ConstantPack::set(const std::string& name, double value) {
  if (!(value > 1) || !std::isfinite(value)) throw BadInput("pack constant must exceed 1: " + name);
  if (name == "C_expO_r") C_expO_r = value;
  else if (name == "C_expO_rs") C_expO_rs = value;
  else if (name == "C_NlogN") C_NlogN = value;
  else if (name == "C_c1") C_c1 = value;
  else if (name == "C_c2") C_c2 = value;
  else if (name == "C_prop36") C_prop36 = value;
  else throw BadInput("unknown pack constant: " + name);
}

namespace {
BigFloat ulog(unsigned long x) { return log_int(mpz_class(x)); }
BigFloat ufloat(unsigned long x) { return BigFloat::from_int(mpz_class(x)); }

// exp((2d)^{base^k} (h+1)) through its log-log.
LogValue tower(unsigned long d, const BigFloat& h, double base, unsigned long k) {
  expects(d >= 1, "degree must be at least 1");
  expects(h >= BigFloat(1.0), "height must be at least 1");
  BigFloat lnln = ufloat(k) * log(BigFloat(base)) ;
  lnln = exp(lnln) * ulog(2 * d) + log(h + BigFloat(1.0));
  return LogValue::from_loglog(lnln);
}
}  // namespace

LogValue thm11_bound(unsigned long d, const BigFloat& h, unsigned long r, const ConstantPack& pack) {
  expects(r >= 1, "r must be at least 1");
  return tower(d, h, pack.C_c1, r);
}

LogValue thm13_bound(unsigned long d, const BigFloat& h, unsigned long r, unsigned long s,
                     const ConstantPack& pack) {
  expects(r >= 1 && s >= 1, "r and s must be at least 1");
  return tower(d, h, pack.C_c2, r + s);
}

mpz_class degree_bound_3_13(unsigned long q, unsigned long D, unsigned long d1) {
  return mpz_class(4) * q * D * D * d1;
}

Prop36Bounds prop36_bounds(unsigned long q, unsigned long D, unsigned long d1, const BigFloat& h1,
                           const ConstantPack& pack) {
  expects(D >= 1 && d1 >= 1 && h1 >= BigFloat(1.0), "need D, d1, h1 at least 1");
  Prop36Bounds b;
  b.deg = degree_bound_3_13(q, D, d1);
  BigFloat t = ufloat(2 * D * (q + d1));
  BigFloat inner = t * log_star(t) + ufloat(D) * h1;
  b.height = LogValue::from_log(BigFloat(pack.C_prop36) * inner);
  return b;
}

LogValue gyory_yu_c1(unsigned long dL, unsigned long s) {
  expects(dL >= 1 && s >= 1, "need d_L and s at least 1");
  BigFloat lnc = log(max(BigFloat(1.0), BigFloat::pi() / ufloat(dL)));
  lnc = lnc + (ufloat(2 * s) + BigFloat(3.5)) * ulog(s);
  lnc = lnc + ufloat(7 * s + 27) * ulog(2);
  lnc = lnc + log(ulog(2 * s));
  lnc = lnc + ufloat(2 * (s + 1)) * ulog(dL);
  lnc = lnc + BigFloat(3.0) * log(log_star(ufloat(2 * dL)));
  return LogValue::from_log(lnc);
}

LogValue gyory_yu_bound(const LogValue& c1, const mpz_class& P, const BigFloat& R_S) {
  expects(P >= 2, "P must be at least 2");
  expects(R_S.sign() > 0, "R_S must be positive");
  BigFloat factor = BigFloat(1.0) + log_star(R_S) / log_int(P);
  return c1 * LogValue::from_int(P) * LogValue::from_value(R_S) * LogValue::from_value(factor);
}

BigFloat regulator_bound(const mpz_class& disc, unsigned long dL, const mpz_class& Q,
                         unsigned long s) {
  expects(disc != 0, "discriminant must be nonzero");
  expects(Q >= 2, "Q must be at least 2");
  expects(dL >= 1, "d_L must be at least 1");
  mpz_class a = abs(disc);
  BigFloat ad = BigFloat::from_int(a);
  BigFloat r = sqrt(ad) * pow(log_star(ad), ufloat(dL - 1));
  return r * pow(log_star(BigFloat::from_int(Q)), ufloat(s));
}

std::vector<BigFloat> loher_masser_bound(unsigned long s, unsigned long d,
                                         const std::vector<BigFloat>& heights) {
  expects(heights.size() == s + 1, "need s+1 heights");
  if (d == 1) throw DegreeOne("the log d factor vanishes at d = 1");
  expects(d >= 2, "degree must be at least 2");
  for (const auto& h : heights) expects(h.sign() > 0, "heights must be positive");
  BigFloat lead = BigFloat(58.0) * exp(lgamma_factorial(s) + ufloat(s) - ufloat(s) * ulog(s));
  lead = lead * pow(ufloat(d), ufloat(s + 1)) * ulog(d);
  BigFloat prod(1.0);
  for (const auto& h : heights) prod = prod * h;
  std::vector<BigFloat> out;
  for (const auto& h : heights) out.push_back(lead * prod / h);
  return out;
}

Lemma72Bound lemma72_bound(unsigned long d, const BigFloat& h, unsigned long r, unsigned long s,
                           const ConstantPack& pack) {
  expects(d >= 1 && h >= BigFloat(1.0), "need d, h at least 1");
  expects(s >= 1, "s must be at least 1");
  BigFloat base = exp(BigFloat(pack.C_expO_rs) * ufloat(r + s)) * ulog(2 * d);
  BigFloat lh = log(h + BigFloat(1.0));
  return {LogValue::from_log(base + ufloat(s) * lh), LogValue::from_log(base + ufloat(s - 1) * lh)};
}

Section2Caps section2_caps(unsigned long m, unsigned long d, const BigFloat& h, unsigned long N,
                           const ConstantPack& pack) {
  expects(m >= 1 && d >= 1 && N >= 1, "need m, d, N at least 1");
  expects(h >= BigFloat(1.0), "height must be at least 1");
  Section2Caps c;
  const BigFloat l2md = ulog(2 * m * d);
  const BigFloat lh1 = log(h + BigFloat(1.0));
  // (2md)^{2^N}
  c.hermann_deg_value = LogValue::from_loglog(ufloat(N) * ulog(2) + log(l2md));
  if (N < 64) {
    mpz_class v = ipow(mpz_class(2 * m * d), 1UL << N);
    if (v.fits_ulong_p()) c.hermann_deg = v.get_ui();
  }
  c.cor23_height = LogValue::from_log(exp(ufloat(N) * ulog(6)) * l2md + lh1);
  BigFloat expo = exp(BigFloat(pack.C_NlogN) * ufloat(N) * log_star(ufloat(N))) * ulog(2 * d);
  c.prop25_deg = LogValue::from_log(expo + lh1);
  c.prop25_height = LogValue::from_log(expo + ufloat(N + 1) * lh1);
  return c;
}

mpq_class lemma44_bound(unsigned long q, unsigned long D, unsigned long d1,
                        const std::vector<std::pair<mpq_class, unsigned long>>& sums) {
  mpq_class r = mpq_class(mpz_class(q) * D * d1);
  for (const auto& [sum, delta] : sums) {
    expects(delta >= 1, "conjugate count must be positive");
    r += sum / mpq_class(mpz_class(delta));
  }
  return r;
}

}  // namespace effkit
