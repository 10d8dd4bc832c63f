#include "effkit/univariate.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "effkit/errors.hpp"
#include "effkit/exact_linalg.hpp"
#include "effkit/poly_algo.hpp"

namespace effkit {

int degree(const ZUni& f) { return static_cast<int>(f.size()) - 1; }
int degree(const QUni& f) { return static_cast<int>(f.size()) - 1; }

ZUni trimmed(ZUni f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

QUni trimmed(QUni f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

ZUni uni_from(const ZPoly& f) {
  expects(f.nvars() <= 1 || f.is_constant(), "univariate polynomial expected");
  ZUni r;
  for (const auto& [e, c] : f.terms()) {
    const std::size_t k = e.empty() ? 0 : e[0];
    if (r.size() <= k) r.resize(k + 1);
    r[k] = c;
  }
  return trimmed(std::move(r));
}

ZPoly to_poly(const ZUni& f) {
  ZPoly p(1);
  for (std::size_t k = 0; k < f.size(); ++k) p.add_term(Exponent{static_cast<std::uint32_t>(k)}, f[k]);
  return p;
}

QUni to_rational(const ZUni& f) { return QUni(f.begin(), f.end()); }

mpz_class content(const ZUni& f) {
  mpz_class g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZUni primitive_of(const ZUni& f) {
  ZUni r = trimmed(f);
  if (r.empty()) return r;
  mpz_class g = content(r);
  if (r.back() < 0) g = -g;
  for (auto& c : r) c /= g;
  return r;
}

ZUni primitive_of(const QUni& f) {
  QUni t = trimmed(f);
  if (t.empty()) return {};
  mpz_class l = 1;
  for (const auto& c : t) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZUni r;
  for (const auto& c : t) {
    mpq_class v = c * l;
    r.push_back(v.get_num());
  }
  return primitive_of(r);
}

namespace {
template <class V>
V add_vec(const V& a, const V& b, int sign) {
  V r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += sign > 0 ? b[i] : -b[i];
  return trimmed(std::move(r));
}

template <class V>
V mul_vec(const V& a, const V& b) {
  if (a.empty() || b.empty()) return {};
  V r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return trimmed(std::move(r));
}

template <class V>
V derivative_vec(const V& f) {
  V r;
  for (std::size_t k = 1; k < f.size(); ++k) r.push_back(f[k] * static_cast<long>(k));
  return trimmed(std::move(r));
}
}  // namespace

ZUni operator+(const ZUni& a, const ZUni& b) { return add_vec(a, b, 1); }
ZUni operator-(const ZUni& a, const ZUni& b) { return add_vec(a, b, -1); }
ZUni operator*(const ZUni& a, const ZUni& b) { return mul_vec(a, b); }
QUni operator+(const QUni& a, const QUni& b) { return add_vec(a, b, 1); }
QUni operator-(const QUni& a, const QUni& b) { return add_vec(a, b, -1); }
QUni operator*(const QUni& a, const QUni& b) { return mul_vec(a, b); }
ZUni derivative(const ZUni& f) { return derivative_vec(f); }
QUni derivative(const QUni& f) { return derivative_vec(f); }

std::pair<QUni, QUni> divmod(const QUni& a, const QUni& b) {
  expects(!b.empty(), "division by the zero polynomial");
  QUni r = trimmed(a);
  const int db = degree(b);
  if (degree(r) < db) return {QUni{}, r};
  QUni q(static_cast<std::size_t>(degree(r) - db + 1));
  while (!r.empty() && degree(r) >= db) {
    const std::size_t shift = static_cast<std::size_t>(degree(r) - db);
    mpq_class t = r.back() / b.back();
    q[shift] = t;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= t * b[i];
    r = trimmed(std::move(r));
  }
  return {trimmed(std::move(q)), r};
}

std::optional<ZUni> exact_quotient(const ZUni& a, const ZUni& b) {
  expects(!b.empty(), "division by the zero polynomial");
  ZUni r = trimmed(a);
  const int db = degree(b);
  if (r.empty()) return ZUni{};
  if (degree(r) < db) return std::nullopt;
  ZUni q(static_cast<std::size_t>(degree(r) - db + 1));
  while (!r.empty() && degree(r) >= db) {
    const std::size_t shift = static_cast<std::size_t>(degree(r) - db);
    if (!mpz_divisible_p(r.back().get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    mpz_class t = r.back() / b.back();
    q[shift] = t;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= t * b[i];
    r = trimmed(std::move(r));
  }
  if (!r.empty()) return std::nullopt;
  return trimmed(std::move(q));
}

ZUni gcd(const ZUni& a, const ZUni& b) {
  ZUni x = primitive_of(a), y = primitive_of(b);
  while (!y.empty()) {
    auto r = divmod(to_rational(x), to_rational(y)).second;
    x = std::move(y);
    y = primitive_of(r);
  }
  return x;
}

mpz_class evaluate(const ZUni& f, const mpz_class& x) {
  mpz_class s = 0;
  for (std::size_t i = f.size(); i-- > 0;) s = s * x + f[i];
  return s;
}

mpq_class evaluate(const QUni& f, const mpq_class& x) {
  mpq_class s = 0;
  for (std::size_t i = f.size(); i-- > 0;) s = s * x + f[i];
  return s;
}

namespace {
template <class V, class Lift>
ComplexInterval horner(const V& f, const ComplexInterval& x, Lift lift) {
  const mpfr_prec_t prec = x.re.lo().precision();
  ComplexInterval s{Interval::from_int(0, prec), Interval::from_int(0, prec)};
  for (std::size_t i = f.size(); i-- > 0;) {
    s = s * x;
    s.re = s.re + lift(f[i], prec);
  }
  return s;
}
}  // namespace

ComplexInterval evaluate(const ZUni& f, const ComplexInterval& x) {
  return horner(f, x, [](const mpz_class& c, mpfr_prec_t p) { return Interval::from_int(c, p); });
}

ComplexInterval evaluate(const QUni& f, const ComplexInterval& x) {
  return horner(f, x, [](const mpq_class& c, mpfr_prec_t p) { return Interval::from_rat(c, p); });
}

mpz_class resultant(const ZUni& f, const ZUni& g) {
  expects(!f.empty() && !g.empty(), "resultant of the zero polynomial");
  const std::size_t m = static_cast<std::size_t>(degree(f)), n = static_cast<std::size_t>(degree(g));
  if (m == 0 && n == 0) return 1;
  if (m == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), f[0].get_mpz_t(), n);
    return r;
  }
  if (n == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), g[0].get_mpz_t(), m);
    return r;
  }
  IntMatrix S(m + n, m + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k <= m; ++k) S(i, i + k) = f[m - k];
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k <= n; ++k) S(n + i, i + k) = g[n - k];
  }
  return determinant(S);
}

mpz_class discriminant(const ZUni& f) {
  const int n = degree(f);
  expects(n >= 0, "discriminant of the zero polynomial");
  if (n <= 1) return 1;
  mpz_class r = resultant(f, derivative(f)) / f.back();
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

// ---- factorization over Z (Zassenhaus) -----------------------------------------------

namespace {

using u64 = std::uint64_t;
using Fp = std::vector<u64>;  // coefficients mod p, low to high, trimmed

struct Field {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1 % p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
  u64 of(const mpz_class& z) const { return mpz_fdiv_ui(z.get_mpz_t(), p); }
};

Fp trim(Fp f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

int fdeg(const Fp& f) { return static_cast<int>(f.size()) - 1; }

Fp reduce(const ZUni& f, const Field& F) {
  Fp r;
  for (const auto& c : f) r.push_back(F.of(c));
  return trim(std::move(r));
}

Fp fmul(const Fp& a, const Fp& b, const Field& F) {
  if (a.empty() || b.empty()) return {};
  Fp r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  return trim(std::move(r));
}

Fp fsub(const Fp& a, const Fp& b, const Field& F) {
  Fp r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  return trim(std::move(r));
}

std::pair<Fp, Fp> fdivmod(Fp a, const Fp& b, const Field& F) {
  const int db = fdeg(b);
  if (fdeg(a) < db) return {Fp{}, a};
  Fp q(static_cast<std::size_t>(fdeg(a) - db + 1), 0);
  const u64 inv = F.inv(b.back());
  while (!a.empty() && fdeg(a) >= db) {
    const std::size_t s = static_cast<std::size_t>(fdeg(a) - db);
    const u64 t = F.mul(a.back(), inv);
    q[s] = t;
    for (std::size_t i = 0; i < b.size(); ++i) a[s + i] = F.sub(a[s + i], F.mul(t, b[i]));
    a = trim(std::move(a));
  }
  return {trim(std::move(q)), a};
}

Fp fmonic(Fp f, const Field& F) {
  if (f.empty()) return f;
  const u64 inv = F.inv(f.back());
  for (auto& c : f) c = F.mul(c, inv);
  return f;
}

Fp fgcd(Fp a, Fp b, const Field& F) {
  while (!b.empty()) {
    Fp r = fdivmod(a, b, F).second;
    a = std::move(b);
    b = std::move(r);
  }
  return fmonic(std::move(a), F);
}

Fp fpowmod(Fp base, const mpz_class& e, const Fp& m, const Field& F) {
  Fp r{1};
  base = fdivmod(base, m, F).second;
  for (std::size_t bit = mpz_sizeinbase(e.get_mpz_t(), 2); bit-- > 0;) {
    r = fdivmod(fmul(r, r, F), m, F).second;
    if (mpz_tstbit(e.get_mpz_t(), bit)) r = fdivmod(fmul(r, base, F), m, F).second;
  }
  return r;
}

Fp fderivative(const Fp& f, const Field& F) {
  Fp r;
  for (std::size_t k = 1; k < f.size(); ++k) r.push_back(F.mul(f[k], k % F.p));
  return trim(std::move(r));
}

// Equal-degree splitting of a monic squarefree g whose factors all have degree d.
void equal_degree(const Fp& g, int d, const Field& F, std::mt19937_64& rng, std::vector<Fp>& out) {
  if (fdeg(g) == d) {
    out.push_back(g);
    return;
  }
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), F.p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> coef(0, F.p - 1);
  while (true) {
    Fp a(static_cast<std::size_t>(fdeg(g)), 0);
    for (auto& c : a) c = coef(rng);
    a = trim(std::move(a));
    if (fdeg(a) < 1) continue;
    Fp b = fsub(fpowmod(a, e, g, F), Fp{1}, F);
    Fp h = fgcd(g, b, F);
    if (fdeg(h) > 0 && fdeg(h) < fdeg(g)) {
      equal_degree(h, d, F, rng, out);
      equal_degree(fmonic(fdivmod(g, h, F).first, F), d, F, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a monic squarefree f over F_p (p odd).
std::vector<Fp> factor_mod_p(Fp f, const Field& F) {
  std::vector<Fp> out;
  std::mt19937_64 rng(0x5eed + F.p);
  Fp h{0, 1};  // X
  const Fp x{0, 1};
  for (int i = 1; fdeg(f) >= 2 * i; ++i) {
    h = fpowmod(h, mpz_class(static_cast<unsigned long>(F.p)), f, F);
    Fp g = fgcd(f, fsub(h, x, F), F);
    if (fdeg(g) > 0) {
      equal_degree(g, i, F, rng, out);
      f = fmonic(fdivmod(f, g, F).first, F);
      h = fdivmod(h, f, F).second;
    }
  }
  if (fdeg(f) > 0) out.push_back(f);
  return out;
}

// ---- Hensel lifting with integer coefficients mod p^k -----------------------------------

ZUni lift_fp(const Fp& f) { return ZUni(f.begin(), f.end()); }

ZUni mod_pk(ZUni f, const mpz_class& m) {
  for (auto& c : f) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  return trimmed(std::move(f));
}

ZUni symmetric(ZUni f, const mpz_class& m) {
  const mpz_class half = m / 2;
  for (auto& c : f) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  return trimmed(std::move(f));
}

// Extended gcd over F_p: s·a + t·b = 1 (a, b coprime).
std::pair<Fp, Fp> fxgcd(const Fp& a, const Fp& b, const Field& F) {
  Fp r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = fdivmod(r0, r1, F);
    Fp s2 = fsub(s0, fmul(q, s1, F), F), t2 = fsub(t0, fmul(q, t1, F), F);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const u64 inv = F.inv(r0.back());
  for (auto& c : s0) c = F.mul(c, inv);
  for (auto& c : t0) c = F.mul(c, inv);
  return {s0, t0};
}

// Monic f ≡ g·h (mod p), g, h monic: lift to f ≡ g·h (mod p^k).
std::pair<ZUni, ZUni> hensel_two(const ZUni& f, Fp g0, Fp h0, const Field& F, unsigned k) {
  auto [s, t] = fxgcd(g0, h0, F);
  ZUni g = lift_fp(g0), h = lift_fp(h0);
  mpz_class pj = F.p;
  for (unsigned j = 1; j < k; ++j) {
    ZUni e = f - g * h;
    for (auto& c : e) {
      ensures(mpz_divisible_p(c.get_mpz_t(), pj.get_mpz_t()), "Hensel lifting lost congruence");
      c /= pj;
    }
    Fp ep = reduce(e, F);
    // tau = t·e rem g, sigma = s·e + q·h where t·e = q·g + tau
    auto [q, tau] = fdivmod(fmul(t, ep, F), g0, F);
    Fp sigma = trim(fsub(fmul(s, ep, F), Fp{}, F));
    Fp qh = fmul(q, h0, F);
    for (std::size_t i = 0; i < qh.size(); ++i) {
      if (sigma.size() <= i) sigma.resize(i + 1, 0);
      sigma[i] = F.add(sigma[i], qh[i]);
    }
    sigma = trim(std::move(sigma));
    ZUni dt = lift_fp(tau), ds = lift_fp(sigma);
    for (auto& c : dt) c *= pj;
    for (auto& c : ds) c *= pj;
    g = g + dt;
    h = h + ds;
    pj *= F.p;
    g = mod_pk(g, pj);
    h = mod_pk(h, pj);
  }
  return {g, h};
}

void hensel_multi(const ZUni& f, const std::vector<Fp>& facs, std::size_t lo, std::size_t hi,
                  const Field& F, unsigned k, std::vector<ZUni>& out) {
  if (hi - lo == 1) {
    out.push_back(f);
    return;
  }
  const std::size_t mid = (lo + hi) / 2;
  Fp g0{1}, h0{1};
  for (std::size_t i = lo; i < mid; ++i) g0 = fmul(g0, facs[i], F);
  for (std::size_t i = mid; i < hi; ++i) h0 = fmul(h0, facs[i], F);
  auto [g, h] = hensel_two(f, g0, h0, F, k);
  hensel_multi(g, facs, lo, mid, F, k, out);
  hensel_multi(h, facs, mid, hi, F, k, out);
}

// Factor a primitive squarefree f of degree ≥ 2 with positive leading coefficient.
std::vector<ZUni> zassenhaus(ZUni f) {
  const mpz_class lc = f.back();
  // choose a prime: odd, not dividing lc, f squarefree mod p; fewest factors among a few
  std::optional<Field> best;
  std::vector<Fp> best_facs;
  int tried = 0;
  for (u64 p = 3; tried < 6; p += 2) {
    if (!mpz_probab_prime_p(mpz_class(static_cast<unsigned long>(p)).get_mpz_t(), 25)) continue;
    Field F{p};
    if (F.of(lc) == 0) continue;
    Fp fp = reduce(f, F);
    if (fdeg(fgcd(fp, fderivative(fp, F), F)) > 0) continue;
    ++tried;
    auto facs = factor_mod_p(fmonic(fp, F), F);
    if (!best || facs.size() < best_facs.size()) {
      best = F;
      best_facs = std::move(facs);
    }
    if (best_facs.size() == 1) break;
  }
  if (best_facs.size() <= 1) return {f};
  const Field F = *best;

  // Mignotte: any factor g of f has |coeff| ≤ 2^deg(f) · ||f||_2; times lc.
  mpz_class norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  mpz_class bound = sqrt(norm2) + 1;
  bound <<= static_cast<unsigned long>(degree(f));
  bound *= abs(lc);
  bound = 2 * bound + 1;
  unsigned k = 1;
  mpz_class pk = F.p;
  while (pk <= bound) {
    pk *= F.p;
    ++k;
  }
  // monic version of f mod p^k
  mpz_class lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
  ZUni fm = f;
  for (auto& c : fm) c *= lc_inv;
  fm = mod_pk(fm, pk);
  std::vector<ZUni> lifted;
  hensel_multi(fm, best_facs, 0, best_facs.size(), F, k, lifted);

  std::vector<ZUni> result;
  std::vector<ZUni> pool = lifted;
  ZUni rest = f;
  std::size_t size = 1;
  while (2 * size <= pool.size()) {
    bool found = false;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      ZUni g{mpz_class(rest.back())};
      for (std::size_t i : idx) g = mod_pk(g * pool[i], pk);
      g = primitive_of(symmetric(g, pk));
      if (auto q = exact_quotient(rest, g)) {
        result.push_back(g);
        rest = *q;
        std::vector<ZUni> keep;
        for (std::size_t i = 0, j = 0; i < pool.size(); ++i) {
          if (j < idx.size() && idx[j] == i) {
            ++j;
            continue;
          }
          keep.push_back(pool[i]);
        }
        pool = std::move(keep);
        found = true;
        break;
      }
      // next combination
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == pool.size() - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (degree(rest) > 0) result.push_back(primitive_of(rest));
  return result;
}

bool factor_less(const ZUni& a, const ZUni& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

ZUni squarefree_part(const ZUni& f) {
  ZUni p = primitive_of(f);
  if (degree(p) < 1) return p;
  ZUni g = gcd(p, derivative(p));
  return primitive_of(*exact_quotient(p, g));
}

UniFactorization factor(const ZUni& f0) {
  ZUni f = trimmed(f0);
  expects(!f.empty(), "factorization of the zero polynomial");
  UniFactorization out;
  out.unit = content(f);
  if (f.back() < 0) out.unit = -out.unit;
  ZUni p = primitive_of(f);
  // Yun's squarefree decomposition over Q, kept primitive
  unsigned mult = 1;
  ZUni a = p;
  ZUni b = gcd(a, derivative(a));
  ZUni c = primitive_of(*exact_quotient(a, b));
  while (degree(c) > 0) {
    ZUni y = gcd(c, b);
    ZUni z = primitive_of(*exact_quotient(c, y));
    if (degree(z) > 0) {
      for (auto& g : degree(z) == 1 ? std::vector<ZUni>{z} : zassenhaus(z)) {
        out.factors.emplace_back(g, mult);
      }
    }
    c = y;
    b = primitive_of(*exact_quotient(b, y));
    ++mult;
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& x, const auto& y) { return factor_less(x.first, y.first); });
  // fix the unit: unit · Π p_i^e_i must reproduce f exactly
  ZUni prod{out.unit};
  for (const auto& [g, e] : out.factors) {
    for (unsigned i = 0; i < e; ++i) prod = prod * g;
  }
  if (prod != f) {
    prod = trimmed(prod);
    ensures(prod.size() == f.size() && prod.back() == -f.back(), "factorization does not reproduce f");
    out.unit = -out.unit;
  }
  return out;
}

bool irreducible_over_q(const ZUni& f) {
  expects(degree(f) >= 1, "irreducibility of a constant");
  auto fac = factor(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

// ---- multivariate resultants -----------------------------------------------------------

ZPoly resultant_in(const ZPoly& f, const ZPoly& g, std::size_t var) {
  expects(f.nvars() == g.nvars(), "resultant across different rings");
  expects(!f.is_zero() && !g.is_zero(), "resultant of the zero polynomial");
  const auto fc = coefficients_in(f, var), gc = coefficients_in(g, var);
  const std::size_t m = fc.size() - 1, n = gc.size() - 1, N = f.nvars();
  if (m == 0 && n == 0) return ZPoly::constant(N, 1);
  if (m == 0) return fc[0].pow(static_cast<unsigned>(n));
  if (n == 0) return gc[0].pow(static_cast<unsigned>(m));
  const std::size_t s = m + n;
  std::vector<std::vector<ZPoly>> S(s, std::vector<ZPoly>(s, ZPoly(N)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k <= m; ++k) S[i][i + k] = fc[m - k];
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k <= n; ++k) S[n + i][i + k] = gc[n - k];
  }
  // Bareiss elimination with exact polynomial division
  int sign = 1;
  ZPoly prev = ZPoly::constant(N, 1);
  for (std::size_t k = 0; k + 1 < s; ++k) {
    std::size_t piv = k;
    while (piv < s && S[piv][k].is_zero()) ++piv;
    if (piv == s) return ZPoly(N);
    if (piv != k) {
      std::swap(S[piv], S[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < s; ++i) {
      for (std::size_t j = k + 1; j < s; ++j) {
        ZPoly num = S[i][j] * S[k][k] - S[i][k] * S[k][j];
        auto q = exact_divide(num, prev);
        ensures(q.has_value(), "fraction-free elimination lost exactness");
        S[i][j] = *q;
      }
      S[i][k] = ZPoly(N);
    }
    prev = S[k][k];
  }
  ZPoly r = S[s - 1][s - 1];
  return sign > 0 ? r : -r;
}

ZPoly discriminant_in(const ZPoly& f, std::size_t var) {
  const int n = f.degree_in(var);
  expects(n >= 0, "discriminant of the zero polynomial");
  if (n <= 1) return ZPoly::constant(f.nvars(), 1);
  ZPoly r = resultant_in(f, f.derivative(var), var);
  const ZPoly lc = coefficients_in(f, var).back();
  auto q = exact_divide(r, lc);
  ensures(q.has_value(), "leading coefficient does not divide the resultant");
  return (n * (n - 1) / 2) % 2 == 1 ? -*q : *q;
}

}  // namespace effkit
