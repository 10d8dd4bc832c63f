#include "effkit/specialization.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "effkit/errors.hpp"
#include "effkit/poly_algo.hpp"

namespace effkit {

namespace {

Interval I(long v) { return Interval::from_int(v); }
Interval I(const mpz_class& v) { return Interval::from_int(v); }
Interval I(const BigFloat& v) { return Interval(v); }

Interval log_max1(const mpz_class& v) {
  const mpz_class a = abs(v);
  return a <= 1 ? I(0) : log(I(a));
}

mpz_class max_norm(const std::vector<mpz_class>& u) {
  mpz_class m = 0;
  for (const auto& x : u) m = std::max(m, mpz_class(abs(x)));
  return m;
}

// Visit {-k..k}^q lexicographically; stop early when visit returns true.
bool for_each_in_box(std::size_t q, long k, const std::function<bool(const std::vector<mpz_class>&)>& visit) {
  std::vector<mpz_class> u(q);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == q) return visit(u);
    for (long v = -k; v <= k; ++v) {
      u[i] = v;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

ZPoly to_q_vars(const ZPoly& g, std::size_t q) { return g.with_nvars(q); }

// Best rational approximation of x with denominator at most dmax (continued fractions).
mpq_class best_rational(const mpq_class& x, const mpz_class& dmax) {
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  mpz_class n = x.get_num(), d = x.get_den();
  while (d != 0) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    const mpz_class q2 = a * q1 + q0;
    if (q2 > dmax) break;
    const mpz_class p2 = a * p1 + p0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const mpz_class r = n - a * d;
    n = d;
    d = r;
  }
  if (q1 == 0) return mpq_class(p0, q0);
  mpq_class out(p1, q1);
  out.canonicalize();
  return out;
}

struct Cx {
  BigFloat re, im;
};
Cx sub(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx mul(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Cx div(const Cx& a, const Cx& b) {
  const BigFloat d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
BigFloat mag2(const Cx& a) { return a.re * a.re + a.im * a.im; }

Cx approx(const AlgebraicNumber& a, mpfr_prec_t p) {
  const ComplexInterval e = a.enclosure(p);
  return {e.re.mid(), e.im.mid()};
}

// Solves V c = β for the Vandermonde matrix V_{ij} = α_i^j by Gaussian elimination.
std::vector<Cx> solve_vandermonde(const std::vector<Cx>& alpha, std::vector<Cx> beta, mpfr_prec_t p) {
  const std::size_t m = alpha.size();
  std::vector<std::vector<Cx>> V(m, std::vector<Cx>(m));
  for (std::size_t i = 0; i < m; ++i) {
    Cx pw{BigFloat(1.0, p), BigFloat(0.0, p)};
    for (std::size_t j = 0; j < m; ++j) {
      V[i][j] = pw;
      pw = mul(pw, alpha[i]);
    }
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < m; ++r) {
      if (mag2(V[r][col]) > mag2(V[piv][col])) piv = r;
    }
    std::swap(V[col], V[piv]);
    std::swap(beta[col], beta[piv]);
    for (std::size_t r = col + 1; r < m; ++r) {
      const Cx f = div(V[r][col], V[col][col]);
      for (std::size_t k = col; k < m; ++k) V[r][k] = sub(V[r][k], mul(f, V[col][k]));
      beta[r] = sub(beta[r], mul(f, beta[col]));
    }
  }
  std::vector<Cx> c(m);
  for (std::size_t i = m; i-- > 0;) {
    Cx s = beta[i];
    for (std::size_t k = i + 1; k < m; ++k) s = sub(s, mul(V[i][k], c[k]));
    c[i] = div(s, V[i][i]);
  }
  return c;
}

std::vector<mpz_class> small_primes_of(const mpz_class& v) {
  std::vector<mpz_class> out;
  mpz_class n = abs(v);
  if (n <= 1) return out;
  for (unsigned long p = 2; p <= 100000 && p * p <= n; ++p) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out.emplace_back(p);
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= p;
    }
  }
  if (n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) out.push_back(n);
  return out;
}

// v_p(x) for x ≠ 0.
unsigned long valuation(const mpz_class& x, const mpz_class& p) {
  mpz_class t = abs(x);
  unsigned long v = 0;
  while (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
    t /= p;
    ++v;
  }
  return v;
}

}  // namespace

std::string InequalityReport::describe() const {
  std::ostringstream os;
  os << name << ": " << lhs.hi().to_string(10) << " <= " << rhs.lo().to_string(10)
     << (holds() ? " holds" : " FAILS");
  return os.str();
}

mpz_class eval_at(const ZPoly& g, const std::vector<mpz_class>& u) {
  std::vector<mpz_class> pt(g.nvars(), 0);
  for (const auto& [e, c] : g.terms()) {
    for (std::size_t i = u.size(); i < e.size(); ++i) {
      expects(e[i] == 0, "evaluation point does not cover an occurring variable");
    }
  }
  for (std::size_t i = 0; i < std::min(u.size(), pt.size()); ++i) pt[i] = u[i];
  return g.evaluate(pt);
}

ZPoly build_H(const ReducedDomain& rd) {
  const std::size_t q = rd.q(), D = rd.D();
  ZPoly delta = ZPoly::constant(q, 1);
  if (D > 1) delta = discriminant_in(rd.minimal_polynomial(), q).with_nvars(q);
  const ZPoly H = delta * to_q_vars(rd.mp.F[D], q) * to_q_vars(rd.f, q);
  ensures(!H.is_zero(), "H vanishes identically");
  const long deg = std::max(H.degree(), 0);
  const long d0 = static_cast<long>(rd.d0()), d1 = static_cast<long>(rd.d1());
  ensures(deg <= (2 * static_cast<long>(D) - 1) * d0 + d1, "deg H exceeds (2D-1)d0 + d1");
  ensures(deg <= 2 * static_cast<long>(D) * d1, "deg H exceeds 2D·d1");
  return H;
}

std::vector<mpz_class> find_good_point(const ZPoly& H, long N) {
  expects(!H.is_zero(), "H must be nonzero");
  const std::size_t q = H.nvars();
  std::vector<mpz_class> found;
  for (long k = 0; k <= N; ++k) {
    const bool hit = for_each_in_box(q, k, [&](const std::vector<mpz_class>& u) {
      if (max_norm(u) != k) return false;
      if (eval_at(H, u) == 0) return false;
      found = u;
      return true;
    });
    if (hit) return found;
  }
  throw SearchExhausted("every point with |u| <= " + std::to_string(N) + " is a zero of H");
}

ZeroCount count_zeros(const ZPoly& g, long N) {
  expects(!g.is_zero(), "zero count of the zero polynomial");
  const long d = std::max(g.degree(), 0);
  expects(2 * N + 1 > d, "the point set must have more than deg g elements per axis");
  ZeroCount out;
  for_each_in_box(g.nvars(), N, [&](const std::vector<mpz_class>& u) {
    if (eval_at(g, u) == 0) ++out.zeros;
    return false;
  });
  mpz_class side = 2 * N + 1;
  mpz_pow_ui(out.bound.get_mpz_t(), side.get_mpz_t(), g.nvars() == 0 ? 0 : g.nvars() - 1);
  out.bound *= d;
  return out;
}

SpecializedFiber make_fiber(const ReducedDomain& rd, const std::vector<mpz_class>& u) {
  expects(u.size() == rd.q(), "point has the wrong dimension");
  expects(eval_at(build_H(rd), u) != 0, "H(u) = 0: u is not a good point");
  SpecializedFiber fib;
  fib.u = u;
  const std::size_t D = rd.D();
  fib.F_u.assign(D + 1, 0);
  for (std::size_t i = 0; i <= D; ++i) fib.F_u[D - i] = eval_at(rd.mp.F[i], u);
  fib.roots = roots_of(fib.F_u);
  ensures(fib.roots.size() == D, "F_u does not have D distinct roots");
  for (const auto& y : fib.roots) ensures(!y.is_zero(), "F_u has a zero root");
  return fib;
}

AlgebraicNumber specialize(const ReducedDomain& rd, const SpecializedFiber& fiber, std::size_t j,
                           const CanonicalRep& alpha) {
  expects(j < fiber.roots.size(), "root index out of range");
  expects(alpha.P.size() == rd.D(), "representation has the wrong length");
  const mpz_class Qu = eval_at(alpha.Q, fiber.u);
  expects(Qu != 0, "Q(u) = 0: the element does not lie in B");
  QUni c(alpha.P.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = mpq_class(eval_at(alpha.P[i], fiber.u), Qu);
    c[i].canonicalize();
  }
  return evaluate(c, fiber.roots[j]);
}

CanonicalRep normalize_rep(std::vector<ZPoly> P, ZPoly Q) {
  expects(!Q.is_zero(), "zero denominator");
  std::vector<ZPoly> parts = P;
  parts.push_back(Q);
  const ZPoly g = multipoly_gcd(parts);
  for (auto& x : P) {
    auto d = exact_divide(x, g);
    ensures(d.has_value(), "gcd does not divide");
    x = *d;
  }
  Q = *exact_divide(Q, g);
  if (Q.leading_coeff() < 0) {
    for (auto& x : P) x = -x;
    Q = -Q;
  }
  return CanonicalRep{std::move(P), std::move(Q)};
}

CanonicalRep b_add(const ReducedDomain& rd, const CanonicalRep& a, const CanonicalRep& b) {
  std::vector<ZPoly> P(rd.D(), ZPoly(rd.pres.r));
  for (std::size_t i = 0; i < P.size(); ++i) P[i] = a.P[i] * b.Q + b.P[i] * a.Q;
  return normalize_rep(std::move(P), a.Q * b.Q);
}

CanonicalRep b_mul(const ReducedDomain& rd, const CanonicalRep& a, const CanonicalRep& b) {
  const std::size_t D = rd.D();
  std::vector<ZPoly> c(2 * D - 1, ZPoly(rd.pres.r));
  for (std::size_t i = 0; i < D; ++i) {
    for (std::size_t k = 0; k < D; ++k) c[i + k] += a.P[i] * b.P[k];
  }
  // y^D = -Σ_{i≥1} F_i y^{D-i}
  for (std::size_t k = c.size(); k-- > D;) {
    const ZPoly t = c[k];
    c[k] = ZPoly(rd.pres.r);
    for (std::size_t i = 1; i <= D; ++i) c[k - i] -= t * rd.mp.F[i];
  }
  c.resize(D);
  return normalize_rep(std::move(c), a.Q * b.Q);
}

HomomorphismCheck check_homomorphism(const ReducedDomain& rd, const SpecializedFiber& fiber,
                                     std::size_t j, const CanonicalRep& a, const CanonicalRep& b) {
  const AlgebraicNumber sa = specialize(rd, fiber, j, a), sb = specialize(rd, fiber, j, b);
  HomomorphismCheck out;
  out.sum = specialize(rd, fiber, j, b_add(rd, a, b)) == sa + sb;
  out.product = specialize(rd, fiber, j, b_mul(rd, a, b)) == sa * sb;
  return out;
}

InequalityReport verify_root_height_sum(const ZUni& G) {
  expects(degree(G) >= 1 && G.back() == 1, "G must be monic of positive degree");
  mpz_class H = 0;
  for (const auto& c : G) H = std::max(H, mpz_class(abs(c)));
  const Interval hG = log(I(H));
  // lc = 1, so log M(G) is the sum of the root heights with multiplicity
  const Interval sum = mahler_log(G);
  return {"root height sum", abs(hG - sum), I(degree(G))};
}

Reconstruction reconstruct_coeffs(const ZUni& G, const std::vector<AlgebraicNumber>& alphas,
                                  const std::vector<AlgebraicNumber>& betas) {
  const std::size_t m = alphas.size();
  expects(m >= 1 && betas.size() == m, "need m >= 1 roots and m values");
  expects(degree(G) == static_cast<int>(m) && G.back() == 1, "G must be monic of degree m");
  for (std::size_t i = 0; i < m; ++i) {
    expects(exact_quotient(G, alphas[i].minpoly()).has_value(), "α_i is not a root of G");
    for (std::size_t k = i + 1; k < m; ++k) expects(!(alphas[i] == alphas[k]), "roots must be distinct");
  }
  std::optional<std::vector<mpq_class>> coeffs;
  for (mpfr_prec_t p = 128; p <= 4096 && !coeffs; p *= 2) {
    std::vector<Cx> a, b;
    for (std::size_t i = 0; i < m; ++i) {
      a.push_back(approx(alphas[i], p));
      b.push_back(approx(betas[i], p));
    }
    const auto c = solve_vandermonde(a, b, p);
    mpz_class dmax;
    mpz_ui_pow_ui(dmax.get_mpz_t(), 2, static_cast<unsigned long>(p / 2 - 8));
    QUni guess(m);
    for (std::size_t j = 0; j < m; ++j) guess[j] = best_rational(c[j].re.to_rational(), dmax);
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) ok = evaluate(guess, alphas[i]) == betas[i];
    if (ok) coeffs = guess;
  }
  if (!coeffs) throw NotRepresentable("values are not a rational polynomial in the roots");

  Reconstruction out;
  out.q = 1;
  for (const auto& c : *coeffs) out.q = lcm(out.q, mpz_class(c.get_den()));
  mpz_class top = out.q;
  for (const auto& c : *coeffs) {
    out.p.emplace_back(c * out.q);
    top = std::max(top, mpz_class(abs(out.p.back())));
  }
  mpz_class HG = 0;
  for (const auto& c : G) HG = std::max(HG, mpz_class(abs(c)));
  Interval rhs = I(static_cast<long>(2 * m * m)) + I(static_cast<long>(m - 1)) * log(I(HG));
  for (const auto& b : betas) rhs = rhs + alg_height_interval(b);
  out.report = {"coefficient reconstruction", log(I(top)), rhs};
  return out;
}

std::vector<PlaceCheck> coeff_bound_from_values(const ZPoly& g1, const ZPoly& g2, long N,
                                                const std::vector<mpz_class>& extra_primes) {
  expects(!g1.is_zero() && !g2.is_zero(), "g1 and g2 must be nonzero");
  expects(g1.nvars() == g2.nvars(), "g1 and g2 must share the variables");
  const std::size_t q = g1.nvars();
  const long D1 = std::max(g1.degree(), 0), D2 = std::max(g2.degree(), 0);
  expects(N >= std::max(D1, D2), "N must be at least max(deg g1, deg g2)");

  std::vector<mpz_class> values;
  for_each_in_box(q, N, [&](const std::vector<mpz_class>& u) {
    if (eval_at(g2, u) != 0) values.push_back(eval_at(g1, u));
    return false;
  });
  ensures(!values.empty(), "no point with g2(u) ≠ 0");

  mpz_class K;
  mpz_class base = 4 * N;
  mpz_pow_ui(K.get_mpz_t(), base.get_mpz_t(), q * static_cast<unsigned long>(D1 * (D1 + 1) / 2));

  std::vector<PlaceCheck> out;
  {
    mpz_class lhs = max_abs_coeff(g1), vmax = 0;
    for (const auto& v : values) vmax = std::max(vmax, mpz_class(abs(v)));
    out.push_back({0, mpq_class(lhs), mpq_class(K * vmax)});
  }
  std::vector<mpz_class> primes{2, 3, 5, 7, 11, 13};
  for (const auto& [e, c] : g1.terms()) {
    for (auto& p : small_primes_of(c)) primes.push_back(p);
  }
  primes.insert(primes.end(), extra_primes.begin(), extra_primes.end());
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  auto p_abs = [](const mpz_class& p, unsigned long v) {
    mpz_class pv;
    mpz_pow_ui(pv.get_mpz_t(), p.get_mpz_t(), v);
    return mpq_class(1, pv);
  };
  for (const auto& p : primes) {
    unsigned long vc = ~0UL;
    for (const auto& [e, c] : g1.terms()) vc = std::min(vc, valuation(c, p));
    mpq_class rhs = 0;
    for (const auto& v : values) {
      if (v != 0) rhs = std::max(rhs, p_abs(p, valuation(v, p)));
    }
    out.push_back({p, p_abs(p, vc), rhs * K});
  }
  return out;
}

Interval specialized_height_bound(const ReducedDomain& rd, const CanonicalRep& alpha,
                                  const std::vector<mpz_class>& u) {
  const long D = static_cast<long>(rd.D()), q = static_cast<long>(rd.q());
  const long d0 = static_cast<long>(rd.d0()), deg = alpha.deg_bar();
  const Interval lu = log_max1(max_norm(u));
  return I(D * D) + I(q) * (I(D) * log(I(d0)) + log_max1(deg)) + I(D) * I(rd.h0()) +
         log(I(alpha.height_bar())) + I(D * d0 + deg) * lu;
}

std::vector<InequalityReport> verify_specialized_heights(const ReducedDomain& rd,
                                                         const SpecializedFiber& fiber,
                                                         const CanonicalRep& alpha) {
  const Interval bound = specialized_height_bound(rd, alpha, fiber.u);
  std::vector<InequalityReport> out;
  for (std::size_t j = 0; j < fiber.roots.size(); ++j) {
    out.push_back({"specialized height j=" + std::to_string(j),
                   alg_height_interval(specialize(rd, fiber, j, alpha)), bound});
  }
  return out;
}

Interval height_lift_bound(const ReducedDomain& rd, long N, const Interval& H_obs) {
  const Interval h1 = I(rd.h1()) + I(1);
  const Interval N4 = I(N) * I(N) * I(N) * I(N);
  return I(5) * N4 * h1 * h1 + I(2 * static_cast<long>(rd.D())) * h1 * H_obs;
}

long height_lift_N(const ReducedDomain& rd, const CanonicalRep& alpha) {
  const long D = static_cast<long>(rd.D()), q = static_cast<long>(rd.q());
  return std::max<long>(alpha.deg_bar(), 2 * D * static_cast<long>(rd.d0()) +
                                             2 * (q + 1) * (static_cast<long>(rd.d1()) + 1));
}

InequalityReport verify_height_lift(const ReducedDomain& rd, const CanonicalRep& alpha) {
  const long N = height_lift_N(rd, alpha);
  const ZPoly H = build_H(rd);
  Interval H_obs = I(0);
  bool any = false;
  for_each_in_box(rd.q(), N, [&](const std::vector<mpz_class>& u) {
    if (eval_at(H, u) == 0) return false;
    any = true;
    const SpecializedFiber fib = make_fiber(rd, u);
    for (std::size_t j = 0; j < fib.roots.size(); ++j) {
      H_obs = max(H_obs, alg_height_interval(specialize(rd, fib, j, alpha)));
    }
    return false;
  });
  ensures(any, "no good point within the admissible box");
  return {"height lift N=" + std::to_string(N), log(I(alpha.height_bar())), height_lift_bound(rd, N, H_obs)};
}

Interval discriminant_bound(const ReducedDomain& rd, const std::vector<mpz_class>& u) {
  const long D = static_cast<long>(rd.D()), q = static_cast<long>(rd.q());
  const long d0 = static_cast<long>(rd.d0());
  const Interval inner = I(q) * log(I(d0)) + I(rd.h0()) + I(d0) * log_max1(max_norm(u));
  return I(2 * D - 1) * log(I(D)) + I(2 * D - 2) * inner;
}

std::vector<InequalityReport> verify_discriminants(const ReducedDomain& rd,
                                                   const SpecializedFiber& fiber) {
  const Interval bound = discriminant_bound(rd, fiber.u);
  std::vector<InequalityReport> out;
  for (std::size_t j = 0; j < fiber.roots.size(); ++j) {
    const mpz_class disc = discriminant(fiber.roots[j].minpoly());
    ensures(disc != 0, "minimal polynomial with zero discriminant");
    out.push_back({"discriminant j=" + std::to_string(j), log(I(mpz_class(abs(disc)))), bound});
  }
  return out;
}

}  // namespace effkit
