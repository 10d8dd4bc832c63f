#include "effkit/solvers.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include "effkit/errors.hpp"
#include "effkit/integer.hpp"
#include "effkit/parallel.hpp"
#include "effkit/poly_algo.hpp"
#include "effkit/specialization.hpp"

namespace effkit {

namespace {

// v_p of a nonzero rational, over every prime of its numerator and denominator.
std::map<mpz_class, long> exponent_map(const mpq_class& x) {
  std::map<mpz_class, long> out;
  for (const auto& [p, e] : factor_integer(x.get_num())) out[p] += static_cast<long>(e);
  for (const auto& [p, e] : factor_integer(x.get_den())) out[p] -= static_cast<long>(e);
  return out;
}

// Rows: one per prime occurring in xs, then the sign row. Columns: the xs.
struct ExponentMatrix {
  std::vector<mpz_class> primes;
  std::vector<IntVector> rows;  // prime rows
  IntVector sign;               // 1 for negative entries
};

ExponentMatrix exponent_matrix(std::span<const mpq_class> xs) {
  std::vector<std::map<mpz_class, long>> maps;
  std::map<mpz_class, std::size_t> index;
  for (const auto& x : xs) {
    maps.push_back(exponent_map(x));
    for (const auto& [p, e] : maps.back()) index.emplace(p, 0);
  }
  ExponentMatrix m;
  for (auto& [p, i] : index) {
    i = m.primes.size();
    m.primes.push_back(p);
  }
  m.rows.assign(m.primes.size(), IntVector(xs.size(), 0));
  m.sign.assign(xs.size(), 0);
  for (std::size_t j = 0; j < xs.size(); ++j) {
    for (const auto& [p, e] : maps[j]) m.rows[index[p]][j] = e;
    if (sgn(xs[j]) < 0) m.sign[j] = 1;
  }
  return m;
}

// [rows; sign] with an extra column carrying -2 in the sign row, so that the
// sign only has to cancel modulo 2.
IntMatrix with_sign_slack(const ExponentMatrix& m) {
  const std::size_t n = m.sign.size();
  IntMatrix U(m.rows.size() + 1, n + 1);
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) U(i, j) = m.rows[i][j];
  }
  for (std::size_t j = 0; j < n; ++j) U(m.rows.size(), j) = m.sign[j];
  U(m.rows.size(), n) = -2;
  return U;
}

void normalize_sign(IntVector& v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0) {
      for (auto& y : v) y = -y;
    }
    return;
  }
}

mpq_class qpow(const mpq_class& x, const mpz_class& k) {
  expects(mpz_class(abs(k)).fits_ulong_p(), "exponent out of range");
  const unsigned long e = k >= 0 ? k.get_ui() : mpz_class(-k).get_ui();
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), e);
  mpq_class out = k >= 0 ? mpq_class(num, den) : mpq_class(den, num);
  out.canonicalize();
  return out;
}

std::string vec_str(std::span<const mpz_class> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

// Every vector of {-k..k}^n with max-norm exactly k, lexicographically.
void for_each_of_norm(std::size_t n, long k, const std::function<bool(const IntVector&)>& visit) {
  IntVector v(n);
  std::function<bool(std::size_t, bool)> rec = [&](std::size_t i, bool hit) -> bool {
    if (i == n) return hit && visit(v);
    for (long x = -k; x <= k; ++x) {
      v[i] = x;
      if (rec(i + 1, hit || x == k || x == -k)) return true;
    }
    return false;
  };
  rec(0, k == 0);
}

bool first_nonzero_positive(const IntVector& v) {
  for (const auto& x : v) {
    if (x != 0) return x > 0;
  }
  return false;
}

BigFloat log_height(const ZPoly& f) {
  const mpz_class H = max_abs_coeff(f);
  return H <= 1 ? BigFloat(0.0) : log_int(H);
}

}  // namespace

bool is_s_unit_q(const mpq_class& x, std::span<const mpz_class> primes) {
  if (x == 0) return false;
  mpz_class n = abs(x.get_num()), d = x.get_den();
  for (const auto& p : primes) {
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) n /= p;
    while (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) d /= p;
  }
  return n == 1 && d == 1;
}

SUnitResult solve_sunit_q(const RationalSUnitProblem& prob) {
  expects(prob.a != 0 && prob.b != 0 && prob.c != 0, "a, b, c must be nonzero");
  for (std::size_t i = 0; i < prob.primes.size(); ++i) {
    expects(prob.primes[i] > 1 && is_probable_prime(prob.primes[i]), "S must consist of primes");
    for (std::size_t k = 0; k < i; ++k) expects(prob.primes[k] != prob.primes[i], "S has a repeated prime");
  }
  expects(prob.cap <= 4096, "exponent cap too large");

  SUnitResult out;
  std::vector<mpz_class> S = prob.primes;
  std::sort(S.begin(), S.end());
  out.scaled_primes = S;
  for (const mpq_class& x : {prob.a, prob.b, prob.c}) {
    for (const auto& [p, e] : exponent_map(x)) out.scaled_primes.push_back(p);
  }
  std::sort(out.scaled_primes.begin(), out.scaled_primes.end());
  out.scaled_primes.erase(std::unique(out.scaled_primes.begin(), out.scaled_primes.end()),
                          out.scaled_primes.end());
  const unsigned long s = out.scaled_primes.size() + 1;
  mpz_class P = 2, Q = 2;
  if (!out.scaled_primes.empty()) {
    P = out.scaled_primes.back();
    Q = 1;
    for (const auto& p : out.scaled_primes) Q *= p;
  }
  out.bound = gyory_yu_bound(gyory_yu_c1(1, s), P, regulator_bound(1, 1, Q, s));

  const std::size_t t = prob.primes.size();
  const unsigned long side = 2 * prob.cap + 1;
  std::size_t total = 2;
  for (std::size_t i = 0; i < t; ++i) total *= side;
  out.candidates = total;

  std::mutex mu;
  parallel_for(total, [&](std::size_t idx) {
    const int sign = idx % 2 == 0 ? 1 : -1;
    std::size_t rest = idx / 2;
    IntVector e(t);
    mpq_class eps = sign;
    for (std::size_t i = 0; i < t; ++i) {
      e[i] = static_cast<long>(rest % side) - static_cast<long>(prob.cap);
      rest /= side;
      eps *= qpow(prob.primes[i], e[i]);
    }
    const mpq_class eta = (prob.c - prob.a * eps) / prob.b;
    if (eta == 0 || !is_s_unit_q(eta, prob.primes)) return;
    std::lock_guard lock(mu);
    out.solutions.push_back({eps, eta, sign, std::move(e), 0, 0});
  });
  std::sort(out.solutions.begin(), out.solutions.end(), [](const SUnitSolution& x, const SUnitSolution& y) {
    if (x.exponents != y.exponents) return x.exponents < y.exponents;
    return x.sign < y.sign;
  });

  for (auto& sol : out.solutions) {
    ensures(prob.a * sol.eps + prob.b * sol.eta == prob.c, "S-unit solution fails the equation");
    ensures(is_s_unit_q(sol.eps, prob.primes) && is_s_unit_q(sol.eta, prob.primes),
            "S-unit solution with a non-unit component");
    const mpq_class e1 = prob.a * sol.eps / prob.c, h1 = prob.b * sol.eta / prob.c;
    ensures(e1 + h1 == 1 && is_s_unit_q(e1, out.scaled_primes) && is_s_unit_q(h1, out.scaled_primes),
            "scaled solution is not a solution of e1 + h1 = 1 over S'");
    sol.height_eps = rational_height(e1);
    sol.height_eta = rational_height(h1);
    // the bound is on h = log H
    ensures(LogValue::from_value(log_int(sol.height_eps)) <= out.bound &&
                LogValue::from_value(log_int(sol.height_eta)) <= out.bound,
            "solution height exceeds the bound");
  }
  return out;
}

std::string to_string(DepVerdict v) {
  switch (v) {
    case DepVerdict::Dependent: return "Dependent";
    case DepVerdict::Independent: return "Independent";
    case DepVerdict::IndependentAtCap: return "IndependentAtCap";
    case DepVerdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

mpq_class power_product(std::span<const mpq_class> gammas, std::span<const mpz_class> k) {
  expects(gammas.size() == k.size(), "exponent vector has the wrong length");
  mpq_class out = 1;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] == 0) continue;
    expects(gammas[i] != 0, "zero raised to a nonzero power");
    out *= qpow(gammas[i], k[i]);
  }
  return out;
}

MultDepResult mult_dep_q(std::span<const mpq_class> gammas) {
  expects(!gammas.empty(), "no values");
  for (const auto& g : gammas) expects(g != 0, "values must be nonzero");
  const std::size_t n = gammas.size();
  const ExponentMatrix em = exponent_matrix(gammas);
  const IntMatrix U = with_sign_slack(em);
  MultDepResult out;
  {
    std::ostringstream os;
    os << "exponent matrix over primes {";
    for (std::size_t i = 0; i < em.primes.size(); ++i) os << (i ? "," : "") << em.primes[i].get_str();
    os << "} plus a sign row modulo 2";
    out.transcript.push_back(os.str());
  }
  const HermiteForm hf = hnf(U);
  std::vector<IntVector> basis;
  for (std::size_t j = hf.rank(); j < U.cols(); ++j) {
    IntVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = hf.T(i, j);
    basis.push_back(std::move(v));
  }
  out.transcript.push_back("relation lattice rank " + std::to_string(basis.size()));
  if (basis.empty()) {
    out.verdict = DepVerdict::Independent;
    return out;
  }
  lll_reduce(basis);
  IntVector k = basis.front();
  normalize_sign(k);
  ensures(power_product(gammas, k) == 1, "relation fails to verify");
  out.transcript.push_back("verified product with exponents " + vec_str(k) + " equals 1");
  out.verdict = DepVerdict::Dependent;
  out.relation = std::move(k);
  return out;
}

MultRepResult mult_rep_exponents(const mpq_class& gamma0, std::span<const mpq_class> gammas,
                                 const ConstantPack& pack) {
  expects(!gammas.empty(), "no base values");
  expects(gamma0 != 0, "gamma0 must be nonzero");
  expects(mult_dep_q(gammas).verdict == DepVerdict::Independent, "base values are dependent");
  const std::size_t s = gammas.size();
  std::vector<mpq_class> all{gamma0};
  all.insert(all.end(), gammas.begin(), gammas.end());
  const ExponentMatrix em = exponent_matrix(all);
  // columns γ_1..γ_s and the sign slack; the right side is γ_0's column
  IntMatrix U(em.rows.size() + 1, s + 1);
  IntVector rhs(em.rows.size() + 1);
  for (std::size_t i = 0; i <= em.rows.size(); ++i) {
    const IntVector& row = i < em.rows.size() ? em.rows[i] : em.sign;
    rhs[i] = row[0];
    for (std::size_t j = 0; j < s; ++j) U(i, j) = row[j + 1];
  }
  U(em.rows.size(), s) = -2;

  MultRepResult out;
  BigFloat h(1.0);
  for (const auto& g : all) h = max(h, log_int(rational_height(g)));
  out.bound = lemma72_bound(1, h, 1, s, pack).bound;
  const auto sol = solve_int(U, rhs);
  if (!sol) return out;
  out.k.assign(sol->begin(), sol->begin() + static_cast<long>(s));
  ensures(power_product(gammas, out.k) == gamma0, "representation fails to verify");
  out.representable = true;
  out.within_bound = LogValue::from_int(max_norm(out.k)) <= out.bound;
  return out;
}

FractionRep fraction_power_product(const Presentation& p, const std::vector<FractionRep>& gammas,
                                   std::span<const mpz_class> k) {
  expects(gammas.size() == k.size(), "exponent vector has the wrong length");
  FractionRep out{ZPoly::constant(p.r, 1), ZPoly::constant(p.r, 1)};
  for (std::size_t i = 0; i < k.size(); ++i) {
    expects(mpz_class(abs(k[i])).fits_uint_p(), "exponent out of range");
    const unsigned e = static_cast<unsigned>(mpz_class(abs(k[i])).get_ui());
    if (e == 0) continue;
    const ZPoly& up = k[i] > 0 ? gammas[i].num : gammas[i].den;
    const ZPoly& down = k[i] > 0 ? gammas[i].den : gammas[i].num;
    out.num *= up.pow(e);
    out.den *= down.pow(e);
  }
  return out;
}

MultDepResult mult_dep_general(const ReducedDomain& rd, const std::vector<FractionRep>& gammas,
                               const MultDepCaps& caps, const ConstantPack& pack) {
  expects(!gammas.empty(), "no elements");
  expects(caps.exponent_cap >= 1 && caps.points >= 1, "caps must be positive");
  const Presentation& pres = rd.pres;
  const std::size_t n = gammas.size();
  MultDepResult out;

  std::vector<CanonicalRep> reps;
  for (const auto& g : gammas) reps.push_back(canonical_rep(rd, g).rep);

  // Window: min(cap, V), with V from lemma72_bound at the d, h of the input.
  unsigned long d = pres.d();
  BigFloat h = pres.h();
  for (const auto& g : gammas) {
    d = std::max<unsigned long>(d, static_cast<unsigned long>(std::max({g.num.degree(), g.den.degree(), 1})));
    h = max(h, max(log_height(g.num), log_height(g.den)));
  }
  const LogValue V = lemma72_bound(d, h, std::max<std::size_t>(pres.r, 1), std::max<std::size_t>(n - 1, 1), pack).V;
  long cap = caps.exponent_cap;
  if (V < LogValue::from_int(cap)) cap = std::max(0L, static_cast<long>(V.value().to_double()));
  out.transcript.push_back("exponent window " + std::to_string(cap) + " (cap " +
                           std::to_string(caps.exponent_cap) + ", V = " + V.describe(6) + ")");

  // Images at good points: norms of each conjugate field and log|σ_j(γ_i)|.
  const ZPoly H = build_H(rd);
  std::vector<std::vector<mpq_class>> norm_rows;    // per field class: N(σ(γ_i))
  std::vector<std::vector<Interval>> log_rows;      // per (point, j): log|σ_j(γ_i)|
  std::size_t used = 0;
  for (long k = 0; k <= caps.point_norm && used < caps.points; ++k) {
    for_each_of_norm(rd.q(), k, [&](const IntVector& u) {
      if (used >= caps.points) return true;
      if (eval_at(H, u) == 0) return false;
      for (const auto& r : reps) {
        if (eval_at(r.Q, u) == 0) return false;
      }
      const SpecializedFiber fib = make_fiber(rd, u);
      std::vector<std::vector<AlgebraicNumber>> images(fib.roots.size());
      for (std::size_t j = 0; j < fib.roots.size(); ++j) {
        for (const auto& r : reps) {
          images[j].push_back(specialize(rd, fib, j, r));
          if (images[j].back().is_zero()) return false;
        }
      }
      std::vector<ZUni> seen;
      for (std::size_t j = 0; j < fib.roots.size(); ++j) {
        std::vector<Interval> logs;
        for (const auto& a : images[j]) {
          Interval m = a.enclosure().abs();
          for (mpfr_prec_t p = 2 * kWorkPrec; !m.certainly_positive(); p *= 2) m = a.enclosure(p).abs();
          logs.push_back(log(m));
        }
        log_rows.push_back(std::move(logs));
        const ZUni& field = fib.roots[j].minpoly();
        if (std::find(seen.begin(), seen.end(), field) != seen.end()) continue;
        seen.push_back(field);
        const int deg_field = degree(field);
        std::vector<mpq_class> norms;
        for (const auto& a : images[j]) {
          // N_{Q(θ)/Q}(α) = N_{Q(α)/Q}(α)^{[Q(θ):Q(α)]}
          const ZUni& g = a.minpoly();
          const int e = degree(g);
          mpq_class nrm(g.front(), g.back());
          nrm.canonicalize();
          if (e % 2 == 1) nrm = -nrm;
          norms.push_back(qpow(nrm, deg_field / e));
        }
        norm_rows.push_back(std::move(norms));
      }
      ++used;
      out.transcript.push_back("specialized at u = " + vec_str(u) + " (" + std::to_string(fib.roots.size()) +
                               " roots)");
      return false;
    });
  }
  ensures(used > 0, "no good point with nonvanishing images within the scanned box");

  // one exponent matrix per field class, built over the class's own values
  std::vector<ExponentMatrix> ems;
  for (const auto& row : norm_rows) ems.push_back(exponent_matrix(row));

  auto norms_trivial = [&](const IntVector& k) {
    for (const auto& em : ems) {
      for (const auto& row : em.rows) {
        mpz_class s = 0;
        for (std::size_t i = 0; i < n; ++i) s += row[i] * k[i];
        if (s != 0) return false;
      }
      mpz_class s = 0;
      for (std::size_t i = 0; i < n; ++i) s += em.sign[i] * k[i];
      if (mpz_odd_p(s.get_mpz_t())) return false;
    }
    return true;
  };
  auto logs_trivial = [&](const IntVector& k) {
    for (const auto& row : log_rows) {
      Interval s = Interval::from_int(0);
      for (std::size_t i = 0; i < n; ++i) s = s + Interval::from_int(k[i]) * row[i];
      if (!s.contains_zero()) return false;
    }
    return true;
  };

  bool unknown = false;
  std::size_t image_candidates = 0;
  for (long k = 1; k <= cap && out.verdict != DepVerdict::Dependent; ++k) {
    for_each_of_norm(n, k, [&](const IntVector& kv) {
      if (!first_nonzero_positive(kv) || !norms_trivial(kv) || !logs_trivial(kv)) return false;
      ++image_candidates;
      const FractionRep prod = fraction_power_product(pres, gammas, kv);
      const Equality eq = element_eq(pres, prod.num, prod.den);
      out.transcript.push_back("candidate " + vec_str(kv) + ": " + to_string(eq) + " in K");
      if (eq == Equality::Unknown) unknown = true;
      if (eq != Equality::Equal) return false;
      out.verdict = DepVerdict::Dependent;
      out.relation = kv;
      return true;
    });
  }
  if (out.verdict == DepVerdict::Dependent) return out;
  out.transcript.push_back(std::to_string(image_candidates) + " candidates survived the image tests");
  out.verdict = unknown ? DepVerdict::Unknown : DepVerdict::IndependentAtCap;
  return out;
}

ExpResult solve_exponential(const ExpEquationProblem& prob, const ConstantPack& pack, const MultDepCaps& caps) {
  const Presentation& pres = prob.pres;
  const std::size_t s = prob.gammas.size();
  expects(s >= 1, "no bases");
  expects(prob.cap <= 64, "exponent cap too large");
  for (const ZPoly* x : {&prob.a, &prob.b, &prob.c}) {
    expects(x->nvars() == pres.r, "coefficient has the wrong number of variables");
    expects(element_eq(pres, *x, ZPoly(pres.r)) == Equality::NotEqual, "a, b, c must be nonzero in A");
  }
  for (const auto& g : prob.gammas) {
    expects(g.num.nvars() == pres.r && g.den.nvars() == pres.r, "base has the wrong number of variables");
  }

  ExpResult out;
  out.independence = mult_dep_general(reduce_domain(pres), prob.gammas, caps, pack);
  expects(out.independence.verdict != DepVerdict::Dependent, "bases are multiplicatively dependent");

  unsigned long d = pres.d();
  BigFloat h = pres.h();
  auto absorb = [&](const ZPoly& f) {
    d = std::max<unsigned long>(d, static_cast<unsigned long>(std::max(f.degree(), 0)));
    h = max(h, log_height(f));
  };
  for (const ZPoly* x : {&prob.a, &prob.b, &prob.c}) absorb(*x);
  for (const auto& g : prob.gammas) {
    absorb(g.num);
    absorb(g.den);
  }
  out.bound = thm13_bound(d, h, pres.r, s, pack);

  const long E = static_cast<long>(prob.cap);
  std::vector<std::vector<ZPoly>> num_pow(s), den_pow(s);
  for (std::size_t i = 0; i < s; ++i) {
    for (long e = 0; e <= E; ++e) {
      num_pow[i].push_back(prob.gammas[i].num.pow(static_cast<unsigned>(e)));
      den_pow[i].push_back(prob.gammas[i].den.pow(static_cast<unsigned>(e)));
    }
  }
  // N_v / D_v = Π γ_i^{v_i}
  auto parts = [&](const IntVector& v) {
    ZPoly N = ZPoly::constant(pres.r, 1), Dn = ZPoly::constant(pres.r, 1);
    for (std::size_t i = 0; i < s; ++i) {
      const long e = v[i].get_si();
      N *= e >= 0 ? num_pow[i][e] : den_pow[i][-e];
      Dn *= e >= 0 ? den_pow[i][e] : num_pow[i][-e];
    }
    return std::make_pair(N, Dn);
  };

  const Fingerprinter fp(pres);
  const std::size_t side = static_cast<std::size_t>(2 * E + 1);
  std::size_t total = 1;
  for (std::size_t i = 0; i < 2 * s; ++i) total *= side;
  out.pairs_checked = total;
  std::mutex mu;
  parallel_for(total, [&](std::size_t idx) {
    IntVector v(s), w(s);
    for (std::size_t i = 0; i < 2 * s; ++i) {
      const long e = static_cast<long>(idx % side) - E;
      idx /= side;
      (i < s ? v[i] : w[i - s]) = e;
    }
    const auto [Nv, Dv] = parts(v);
    const auto [Nw, Dw] = parts(w);
    const ZPoly expr = prob.a * Nv * Dw + prob.b * Nw * Dv - prob.c * Dv * Dw;
    if (!expr.is_zero()) {
      const auto res = fp(expr);
      if (std::any_of(res.begin(), res.end(), [](unsigned long x) { return x != 0; })) return;
    }
    const Equality eq = expr.is_zero() ? Equality::Equal : element_eq(pres, expr, ZPoly(pres.r));
    std::lock_guard lock(mu);
    if (eq == Equality::Unknown) ++out.undecided;
    if (eq == Equality::Equal) out.solutions.push_back({std::move(v), std::move(w)});
  });
  std::sort(out.solutions.begin(), out.solutions.end(), [](const ExpSolution& x, const ExpSolution& y) {
    return std::tie(x.v, x.w) < std::tie(y.v, y.w);
  });
  for (const auto& sol : out.solutions) {
    const mpz_class top = std::max(max_norm(sol.v), max_norm(sol.w));
    ensures(LogValue::from_int(top) <= out.bound, "solution exponents exceed the bound");
  }
  return out;
}

namespace {

// g | f^m for m large enough to absorb every multiplicity in g.
bool divides_power_of(const ZPoly& g, const ZPoly& f) {
  if (g.is_zero()) return false;
  const unsigned long m = static_cast<unsigned long>(std::max(g.degree(), 0)) +
                          mpz_sizeinbase(content(g).get_mpz_t(), 2);
  return exact_divide(f.pow(static_cast<unsigned>(m)), g).has_value();
}

std::string rep_key(const CanonicalRep& c) {
  std::string k;
  for (const auto& p : c.P) k += to_string(p) + ";";
  return k + "/" + to_string(c.Q);
}

}  // namespace

bool is_unit_in_B(const ReducedDomain& rd, const CanonicalRep& alpha) {
  const std::size_t q = rd.q(), D = rd.D();
  expects(alpha.P.size() == D, "representation has the wrong length");
  const ZPoly f = rd.f.with_nvars(q);
  if (!divides_power_of(alpha.Q.with_nvars(q), f)) return false;
  std::vector<std::size_t> embed(q);
  for (std::size_t i = 0; i < q; ++i) embed[i] = i;
  ZPoly num(q + 1);
  for (std::size_t j = 0; j < D; ++j) {
    num += alpha.P[j].with_nvars(q).remap(embed, q + 1) * ZPoly::variable(q + 1, q, static_cast<std::uint32_t>(j));
  }
  if (num.is_zero()) return false;
  const ZPoly norm = D == 1 ? num : resultant_in(rd.minimal_polynomial(), num, q);
  return divides_power_of(norm.with_nvars(q), f);
}

BUnitSearch enumerate_b_unit_solutions(const ReducedDomain& rd, const BUnitSearchCaps& caps) {
  expects(caps.max_deg >= 0 && caps.max_coeff >= 1, "caps must be nonnegative");
  const std::size_t r = rd.pres.r, q = rd.q(), D = rd.D();
  BUnitSearch out;
  out.degree_bound = degree_bound_3_13(q, D, rd.d1());

  const auto monos = monomials_up_to(q, caps.max_deg);
  const std::size_t slots = D * monos.size();
  const long side = 2 * caps.max_coeff + 1;
  std::size_t per_k = 1;
  for (std::size_t i = 0; i < slots; ++i) {
    expects(per_k < (std::size_t{1} << 40) / static_cast<std::size_t>(side), "search box too large");
    per_k *= static_cast<std::size_t>(side);
  }
  std::vector<ZPoly> f_pow{ZPoly::constant(r, 1)};
  for (unsigned k = 1; k <= caps.max_k; ++k) f_pow.push_back(f_pow.back() * rd.f);
  out.candidates = per_k * f_pow.size();

  std::mutex mu;
  std::map<std::string, BUnitSolution> found;
  std::size_t units = 0;
  parallel_for(out.candidates, [&](std::size_t idx) {
    const std::size_t k = idx / per_k;
    std::size_t rest = idx % per_k;
    std::vector<ZPoly> Ps(D, ZPoly(r));
    for (std::size_t slot = 0; slot < slots; ++slot) {
      const long c = static_cast<long>(rest % static_cast<std::size_t>(side)) - caps.max_coeff;
      rest /= static_cast<std::size_t>(side);
      if (c == 0) continue;
      Exponent e(r, 0);
      const Exponent& m = monos[slot % monos.size()];
      std::copy(m.begin(), m.end(), e.begin());
      Ps[slot / monos.size()].add_term(e, c);
    }
    if (std::all_of(Ps.begin(), Ps.end(), [](const ZPoly& p) { return p.is_zero(); })) return;
    const CanonicalRep eps = normalize_rep(Ps, f_pow[k]);
    if (!is_unit_in_B(rd, eps)) return;
    std::vector<ZPoly> Pe(D, ZPoly(r));
    for (std::size_t j = 0; j < D; ++j) Pe[j] = -eps.P[j];
    Pe[0] += eps.Q;
    const bool eta_nonzero = std::any_of(Pe.begin(), Pe.end(), [](const ZPoly& p) { return !p.is_zero(); });
    std::optional<CanonicalRep> eta;
    if (eta_nonzero) {
      eta = normalize_rep(std::move(Pe), eps.Q);
      if (!is_unit_in_B(rd, *eta)) eta.reset();
    }
    std::lock_guard lock(mu);
    ++units;
    if (eta) found.emplace(rep_key(eps), BUnitSolution{eps, *eta});
  });
  out.units = units;  // counts representations, duplicates included
  for (auto& [key, sol] : found) {
    out.max_degree = std::max({out.max_degree, sol.eps.deg_bar(), sol.eta.deg_bar()});
    out.solutions.push_back(std::move(sol));
  }
  return out;
}

}  // namespace effkit
