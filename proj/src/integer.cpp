#include "effkit/integer.hpp"

#include <algorithm>
#include <map>

#include "effkit/bigfloat.hpp"
#include "effkit/errors.hpp"

namespace effkit {

namespace {
constexpr unsigned long kTrialLimit = 1000000;

std::vector<unsigned long> sieve(unsigned long limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<unsigned long> primes;
  for (unsigned long i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (unsigned long j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

// Brent's variant of Pollard rho; returns a nontrivial factor or 0.
mpz_class pollard_rho(const mpz_class& n) {
  for (unsigned long c = 1; c < 40; ++c) {
    mpz_class x = 2, y = 2, d = 1, q = 1, ys;
    unsigned long r = 1;
    auto f = [&](const mpz_class& v) {
      mpz_class t = (v * v + c) % n;
      return t;
    };
    const unsigned long m = 64, max_iter = 1UL << 22;
    unsigned long iters = 0;
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = (q * abs(mpz_class(x - y))) % n;
        }
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
        iters += m;
      } while (k < r && d == 1);
      r *= 2;
    } while (d == 1 && iters < max_iter);
    if (d == n) {
      do {
        ys = f(ys);
        mpz_class diff = abs(mpz_class(x - ys));
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (d == 1);
    }
    if (d != 1 && d != n) return d;
  }
  return 0;
}

void split(const mpz_class& n, std::map<mpz_class, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  mpz_class d = pollard_rho(n);
  if (d == 0) throw BadInput("integer too hard to factor at desk scale: " + n.get_str());
  split(d, out);
  split(mpz_class(n / d), out);
}
}  // namespace

const std::vector<unsigned long>& trial_primes() {
  static const std::vector<unsigned long> primes = sieve(kTrialLimit);
  return primes;
}

std::vector<unsigned long> primes_up_to(unsigned long limit) {
  const auto& all = trial_primes();
  if (limit >= kTrialLimit) return all;
  return {all.begin(), std::upper_bound(all.begin(), all.end(), limit)};
}

bool is_probable_prime(const mpz_class& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

Factorization factor_integer(const mpz_class& n) {
  expects(n != 0, "factorization of zero");
  mpz_class m = abs(n);
  std::map<mpz_class, unsigned> found;
  for (unsigned long p : trial_primes()) {
    if (m == 1) break;
    if (mpz_class(p) * p > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      unsigned k = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++k;
      }
      found[mpz_class(p)] += k;
    }
  }
  if (m > 1) split(m, found);
  return Factorization(found.begin(), found.end());
}

unsigned valuation(const mpz_class& n, const mpz_class& p) {
  expects(n != 0, "valuation of zero");
  mpz_class m = n;
  unsigned k = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++k;
  }
  return k;
}

mpz_class ipow(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

bool le_exp_times(const mpz_class& x, long k, const mpz_class& y) {
  expects(x >= 0 && y > 0 && k >= 0, "le_exp_times domain");
  if (x == 0) return true;
  if (k == 0) return x <= y;
  // For k ≥ 1, e^k·y is irrational, so refining log x − log y against k terminates.
  for (mpfr_prec_t prec = 128;; prec *= 2) {
    BigFloat lo = sub(log(BigFloat::from_int(x, MPFR_RNDD, prec), MPFR_RNDD),
                      log(BigFloat::from_int(y, MPFR_RNDU, prec), MPFR_RNDU), MPFR_RNDD);
    BigFloat hi = sub(log(BigFloat::from_int(x, MPFR_RNDU, prec), MPFR_RNDU),
                      log(BigFloat::from_int(y, MPFR_RNDD, prec), MPFR_RNDD), MPFR_RNDU);
    BigFloat kk(static_cast<double>(k), prec);
    if (hi <= kk) return true;
    if (lo > kk) return false;
  }
}

mpz_class rational_height(const mpq_class& q) {
  return std::max(mpz_class(abs(q.get_num())), mpz_class(abs(q.get_den())));
}

}  // namespace effkit
