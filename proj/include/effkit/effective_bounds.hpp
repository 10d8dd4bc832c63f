#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "effkit/bigfloat.hpp"
#include "effkit/log_value.hpp"

namespace effkit {

// Values substituted for the unspecified absolute constants hidden in
// "exp O(...)" and "c > 1" statements. Every certificate depends on them.
struct ConstantPack {
  double C_expO_r = 10;   // exp O(r) in the reduction bounds
  double C_expO_rs = 10;  // exp O(r+s) in the multiplicative-dependence bounds
  double C_NlogN = 10;    // exp O(N log* N) in the integer membership bounds
  double C_c1 = 10;       // base of the c1^r tower in the unit-equation bound
  double C_c2 = 10;       // base of the c2^(r+s) tower for exponential equations
  double C_prop36 = 10;   // the O(...) in the height bound for x + y = 1 in B*

  std::vector<std::pair<std::string, double>> entries() const;
  // Throws BadInput for unknown names or values ≤ 1.
  void set(const std::string& name, double value);
};

// exp((2d)^{c1^r}(h+1))
LogValue thm11_bound(unsigned long d, const BigFloat& h, unsigned long r, const ConstantPack& pack);
// exp((2d)^{c2^(r+s)}(h+1))
LogValue thm13_bound(unsigned long d, const BigFloat& h, unsigned long r, unsigned long s,
                     const ConstantPack& pack);

// 4 q D^2 d1
mpz_class degree_bound_3_13(unsigned long q, unsigned long D, unsigned long d1);

struct Prop36Bounds {
  mpz_class deg;  // 4 q D^2 d1
  // exp(C (2D(q+d1) log*(2D(q+d1)) + D h1)); its log is the height exponent.
  LogValue height;
};
Prop36Bounds prop36_bounds(unsigned long q, unsigned long D, unsigned long d1, const BigFloat& h1,
                           const ConstantPack& pack);

// max(1, π/dL) s^{2s+3.5} 2^{7s+27} log(2s) dL^{2(s+1)} (log* 2dL)^3
LogValue gyory_yu_c1(unsigned long dL, unsigned long s);

// c1 P R_S (1 + log* R_S / log P)
LogValue gyory_yu_bound(const LogValue& c1, const mpz_class& P, const BigFloat& R_S);

// |Δ|^{1/2} (log* |Δ|)^{dL-1} (log* Q)^s
BigFloat regulator_bound(const mpz_class& disc, unsigned long dL, const mpz_class& Q,
                         unsigned long s);

// 58 (s! e^s / s^s) d^{s+1} log d · Π_j h_j / h_i for each i. DegreeOne at d = 1.
std::vector<BigFloat> loher_masser_bound(unsigned long s, unsigned long d,
                                         const std::vector<BigFloat>& heights);

struct Lemma72Bound {
  LogValue bound;  // (2d)^{exp(C(r+s))} (h+1)^s
  LogValue V;      // (2d)^{exp(C(r+s))} (h+1)^{s-1}
};
Lemma72Bound lemma72_bound(unsigned long d, const BigFloat& h, unsigned long r, unsigned long s,
                           const ConstantPack& pack);

struct Section2Caps {
  // (2md)^{2^N} as an integer when it fits in 64 bits, always as a LogValue.
  std::optional<unsigned long> hermann_deg;
  LogValue hermann_deg_value;
  LogValue cor23_height;   // (2md)^{6^N}(h+1)
  LogValue prop25_deg;     // (2d)^{exp(C N log* N)}(h+1)
  LogValue prop25_height;  // (2d)^{exp(C N log* N)}(h+1)^{N+1}
};
Section2Caps section2_caps(unsigned long m, unsigned long d, const BigFloat& h, unsigned long N,
                           const ConstantPack& pack);

// q D d1 + Σ_i sums[i].first / sums[i].second  (conjugate height sum, Δ_i)
mpq_class lemma44_bound(unsigned long q, unsigned long D, unsigned long d1,
                        const std::vector<std::pair<mpq_class, unsigned long>>& sums);

}  // namespace effkit
