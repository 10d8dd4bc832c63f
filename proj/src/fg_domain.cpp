#include "effkit/fg_domain.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "effkit/errors.hpp"
#include "effkit/parallel.hpp"
#include "effkit/poly_algo.hpp"
#include "effkit/univariate.hpp"

namespace effkit {

Presentation Presentation::make(std::size_t r, std::size_t q, std::vector<ZPoly> gens) {
  if (r == 0) throw BadInput("presentation needs at least one variable");
  if (q > r) throw BadInput("transcendence split exceeds the variable count");
  Presentation p;
  p.r = r;
  p.q = q;
  for (auto& g : gens) {
    if (g.nvars() != r) {
      if (g.is_constant()) {
        g = ZPoly::constant(r, g.constant_term());
      } else {
        throw BadInput("generator has the wrong number of variables");
      }
    }
    if (!g.is_zero()) p.gens.push_back(std::move(g));
  }
  return p;
}

unsigned long Presentation::d() const {
  int d = 1;
  for (const auto& g : gens) d = std::max(d, g.degree());
  return static_cast<unsigned long>(d);
}

mpz_class Presentation::max_coeff() const {
  mpz_class h = 0;
  for (const auto& g : gens) h = std::max(h, max_abs_coeff(g));
  return h;
}

BigFloat Presentation::h() const {
  const mpz_class H = max_coeff();
  return H <= 1 ? BigFloat(1.0) : max(BigFloat(1.0), log_int(H));
}

std::string to_string(Equality e) {
  switch (e) {
    case Equality::Equal: return "Equal";
    case Equality::NotEqual: return "NotEqual";
    case Equality::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(DomainStatus s) {
  switch (s) {
    case DomainStatus::Verified: return "Verified";
    case DomainStatus::Refuted: return "Refuted";
    case DomainStatus::Unknown: return "Unknown";
  }
  return "?";
}

MembershipOptions domain_membership_options() {
  MembershipOptions o;
  o.ring = CoeffRing::Integer;
  o.delta_max = 6;
  o.hermann_jump_limit = 24;
  return o;
}

namespace {

ZPoly lift(const ZPoly& a, std::size_t r) {
  if (a.nvars() == r) return a;
  expects(a.is_constant(), "element has the wrong number of variables");
  return ZPoly::constant(r, a.constant_term());
}

Equality from_verdict(Verdict v) {
  switch (v) {
    case Verdict::Member: return Equality::Equal;
    case Verdict::NonMember: return Equality::NotEqual;
    case Verdict::Unknown: return Equality::Unknown;
  }
  return Equality::Unknown;
}

// Reduce a by generators whose leading coefficient in their top variable is
// ±1; the element of A is unchanged. The quotients are added to `cofactors`
// scaled by `scale` when given (cofactors[i] pairs with gens[i]).
ZPoly reduce_by_monic(const Presentation& p, ZPoly a, PolyVector* cofactors, const ZPoly& scale) {
  for (std::size_t i = 0; i < p.gens.size(); ++i) {
    ZPoly g = p.gens[i];
    std::size_t var = p.r;
    for (std::size_t v = p.r; v-- > 0;) {
      if (g.degree_in(v) > 0) {
        var = v;
        break;
      }
    }
    if (var == p.r) continue;
    const ZPoly lc = coefficients_in(g, var).back();
    if (!lc.is_constant() || abs(lc.constant_term()) != 1) continue;
    if (lc.constant_term() < 0) g = -g;
    if (a.degree_in(var) < g.degree_in(var)) continue;
    ZPoly rem = pseudo_remainder(a, g, var);
    auto quot = exact_divide(a - rem, g);
    ensures(quot.has_value(), "monic reduction left a non-multiple");
    if (cofactors) {
      ZPoly adj = scale * *quot;
      if (lc.constant_term() < 0) adj = -adj;
      (*cofactors)[i] = (*cofactors)[i] + to_rational(adj);
    }
    a = std::move(rem);
  }
  return a;
}

unsigned long eval_mod(const ZPoly& f, const std::vector<unsigned long>& x, unsigned long p) {
  unsigned long sum = 0;
  for (const auto& [e, c] : f.terms()) {
    unsigned long t = mpz_fdiv_ui(c.get_mpz_t(), p);
    for (std::size_t i = 0; i < e.size() && t; ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) t = t * x[i] % p;
    }
    sum = (sum + t) % p;
  }
  return sum;
}

}  // namespace

EqualityResult element_eq_detail(const Presentation& p, const ElementRep& a, const ElementRep& b,
                                 const MembershipOptions& opts) {
  EqualityResult out;
  const ZPoly diff = lift(a, p.r) - lift(b, p.r);
  if (p.gens.empty()) {
    out.verdict = diff.is_zero() ? Equality::Equal : Equality::NotEqual;
    out.membership.verdict = diff.is_zero() ? Verdict::Member : Verdict::NonMember;
    out.membership.certificate = "polynomial ring";
    return out;
  }
  out.membership = ideal_membership(p.gens, diff, opts);
  out.verdict = from_verdict(out.membership.verdict);
  return out;
}

Equality element_eq(const Presentation& p, const ElementRep& a, const ElementRep& b,
                    const MembershipOptions& opts) {
  return element_eq_detail(p, a, b, opts).verdict;
}

Equality fraction_eq(const Presentation& p, const FractionRep& a, const FractionRep& b,
                     const MembershipOptions& opts) {
  return element_eq(p, lift(a.num, p.r) * lift(b.den, p.r), lift(b.num, p.r) * lift(a.den, p.r),
                    opts);
}

InverseResult find_inverse(const Presentation& p, const ElementRep& a0,
                           const MembershipOptions& opts) {
  InverseResult out;
  const ZPoly a = lift(a0, p.r);
  std::vector<ZPoly> gens{a};
  gens.insert(gens.end(), p.gens.begin(), p.gens.end());
  auto m = ideal_membership(gens, ZPoly::constant(p.r, 1), opts);
  out.detail = m.certificate;
  if (m.verdict == Verdict::NonMember) {
    out.proven_non_unit = true;
    return out;
  }
  if (m.verdict != Verdict::Member) return out;
  // a·x0 + Σ x_i f_i = 1, so a·x0 - 1 = -Σ x_i f_i.
  PolyVector cert(p.gens.size(), QPoly(p.r));
  for (std::size_t i = 0; i < p.gens.size(); ++i) cert[i] = -m.cofactors[i + 1];
  ZPoly inv = to_integer(m.cofactors[0]);
  // a·(x0 - k g) - 1 = -Σ x_i f_i - a·k·g
  PolyVector adjust(p.gens.size(), QPoly(p.r));
  inv = reduce_by_monic(p, inv, &adjust, a);
  for (std::size_t i = 0; i < p.gens.size(); ++i) cert[i] = cert[i] - adjust[i];
  ensures(verify_cofactors(p.gens, a * inv - ZPoly::constant(p.r, 1), cert),
          "inverse certificate does not verify");
  out.inverse = std::move(inv);
  out.certificate = std::move(cert);
  return out;
}

// ---- fingerprints ----------------------------------------------------------------------

Fingerprinter::Fingerprinter(const Presentation& p, std::size_t point_budget) {
  for (unsigned long prime : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL}) {
    std::size_t total = 1;
    bool fits = true;
    for (std::size_t i = 0; i < p.r; ++i) {
      total *= prime;
      if (total > point_budget) {
        fits = false;
        break;
      }
    }
    if (!fits) continue;
    Field field{prime, {}};
    std::vector<unsigned long> x(p.r, 0);
    for (std::size_t n = 0; n < total; ++n) {
      std::size_t k = n;
      for (std::size_t i = 0; i < p.r; ++i) {
        x[i] = k % prime;
        k /= prime;
      }
      bool zero = true;
      for (const auto& g : p.gens) {
        if (eval_mod(g, x, prime) != 0) {
          zero = false;
          break;
        }
      }
      if (zero) field.points.push_back(x);
    }
    if (!field.points.empty()) fields_.push_back(std::move(field));
  }
}

std::vector<unsigned long> Fingerprinter::operator()(const ElementRep& a) const {
  std::vector<unsigned long> out;
  for (const auto& f : fields_) {
    for (const auto& x : f.points) out.push_back(eval_mod(a, x, f.p));
  }
  return out;
}

std::size_t Fingerprinter::point_count() const {
  std::size_t n = 0;
  for (const auto& f : fields_) n += f.points.size();
  return n;
}

// ---- unit equations by enumeration -----------------------------------------------------

UnitEnumeration enumerate_unit_solutions(const Presentation& p, const ElementRep& a0,
                                         const ElementRep& b0, const ElementRep& c0, long size_cap,
                                         const MembershipOptions& opts) {
  const ZPoly a = lift(a0, p.r), b = lift(b0, p.r), c = lift(c0, p.r);
  const Fingerprinter fp(p);
  UnitEnumeration out;

  const auto candidates = polys_of_size(p.r, size_cap);
  out.candidates = candidates.size();
  std::vector<std::size_t> plausible;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto v = fp(candidates[i]);
    if (std::find(v.begin(), v.end(), 0UL) == v.end()) plausible.push_back(i);
  }

  std::vector<InverseResult> inverses(plausible.size());
  parallel_for(plausible.size(),
               [&](std::size_t k) { inverses[k] = find_inverse(p, candidates[plausible[k]], opts); });

  struct Unit {
    ZPoly rep, inv;
    PolyVector cert;
    std::vector<unsigned long> print;
  };
  std::vector<Unit> units;
  for (std::size_t k = 0; k < plausible.size(); ++k) {
    if (!inverses[k].inverse) {
      if (!inverses[k].proven_non_unit) ++out.undecided;
      continue;
    }
    const ZPoly& rep = candidates[plausible[k]];
    auto print = fp(rep);
    bool duplicate = false;
    for (const auto& u : units) {
      if (u.print != print) continue;
      const Equality e = element_eq(p, rep, u.rep, opts);
      if (e == Equality::Equal) {
        duplicate = true;
        break;
      }
      if (e == Equality::Unknown) ++out.undecided;
    }
    if (duplicate) continue;
    units.push_back({rep, *inverses[k].inverse, inverses[k].certificate, std::move(print)});
    out.units.push_back(rep);
  }

  // a·eps + b·eta - c vanishes at every fingerprint point for a solution
  const auto pa = fp(a), pb = fp(b), pc = fp(c);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  {
    std::vector<unsigned long> primes;
    // recover the modulus of each fingerprint slot
    const auto slots = fp(ZPoly::constant(p.r, -1));  // -1 ≡ p - 1
    for (auto s : slots) primes.push_back(s + 1);
    for (std::size_t i = 0; i < units.size(); ++i) {
      for (std::size_t j = 0; j < units.size(); ++j) {
        bool ok = true;
        for (std::size_t s = 0; s < primes.size() && ok; ++s) {
          const unsigned long m = primes[s];
          ok = (pa[s] * units[i].print[s] + pb[s] * units[j].print[s] + m - pc[s]) % m == 0;
        }
        if (ok) pairs.emplace_back(i, j);
      }
    }
  }
  std::vector<EqualityResult> checks(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t k) {
    const auto& [i, j] = pairs[k];
    checks[k] = element_eq_detail(p, a * units[i].rep + b * units[j].rep, c, opts);
  });
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (checks[k].verdict == Equality::Unknown) ++out.undecided;
    if (checks[k].verdict != Equality::Equal) continue;
    const auto& [i, j] = pairs[k];
    UnitSolution s{units[i].rep, units[i].inv, units[j].rep, units[j].inv,
                   units[i].cert,  units[j].cert, checks[k].membership.cofactors};
    if (p.gens.empty()) s.cert_equation.clear();
    ensures(verify_unit_solution(p, a, b, c, s), "unit solution does not re-verify");
    out.solutions.push_back(std::move(s));
  }
  return out;
}

bool verify_unit_solution(const Presentation& p, const ElementRep& a0, const ElementRep& b0,
                          const ElementRep& c0, const UnitSolution& s) {
  const ZPoly one = ZPoly::constant(p.r, 1);
  const ZPoly a = lift(a0, p.r), b = lift(b0, p.r), c = lift(c0, p.r);
  auto holds = [&](const ZPoly& target, const PolyVector& cert) {
    if (p.gens.empty()) return target.is_zero();
    return cert.size() == p.gens.size() && verify_cofactors(p.gens, target, cert);
  };
  return holds(s.eps * s.eps_inv - one, s.cert_eps) && holds(s.eta * s.eta_inv - one, s.cert_eta) &&
         holds(a * s.eps + b * s.eta - c, s.cert_equation);
}

// ---- domain checks -----------------------------------------------------------------------

namespace {

std::vector<std::size_t> occurring_vars(const ZPoly& f) {
  std::vector<std::size_t> vs;
  for (std::size_t v = 0; v < f.nvars(); ++v) {
    if (f.degree_in(v) > 0) vs.push_back(v);
  }
  return vs;
}

// Candidate splits g = u·w of a generator with neither factor a unit of Z[X].
std::vector<std::pair<ZPoly, ZPoly>> splits_of(const ZPoly& g) {
  std::vector<std::pair<ZPoly, ZPoly>> out;
  const std::size_t n = g.nvars();
  const mpz_class c = content(g);
  const ZPoly pp = primitive_part(g);
  if (c > 1 && !pp.is_constant()) out.emplace_back(ZPoly::constant(n, c), pp);
  const auto vars = occurring_vars(pp);
  if (vars.size() == 1) {
    const std::size_t v = vars[0];
    const ZUni u = uni_from(pp.remap(std::vector<std::size_t>(n, 0), 1));
    auto fac = factor(u);
    unsigned total = 0;
    for (const auto& [f, e] : fac.factors) total += e;
    if (total >= 2) {
      std::vector<std::size_t> back{v};
      ZPoly first = to_poly(fac.factors[0].first).remap(back, n);
      auto rest = exact_divide(pp, first);
      ensures(rest.has_value(), "univariate factor does not divide");
      out.emplace_back(first, *rest);
    }
  }
  for (std::size_t v : vars) {
    const ZPoly cont = multipoly_gcd(coefficients_in(pp, v));
    if (!cont.is_constant()) {
      auto rest = exact_divide(pp, cont);
      ensures(rest.has_value(), "content does not divide");
      out.emplace_back(cont, *rest);
    }
  }
  return out;
}

// A primitive nonconstant g in at most two variables that is provably
// irreducible over Q by the cheap criteria available here.
bool provably_irreducible(const ZPoly& g) {
  if (content(g) != 1 || g.is_constant()) return false;
  const auto vars = occurring_vars(g);
  const std::size_t n = g.nvars();
  if (vars.size() == 1) {
    return irreducible_over_q(uni_from(g.remap(std::vector<std::size_t>(n, 0), 1)));
  }
  if (vars.size() == 2) {
    for (std::size_t v : vars) {
      if (g.degree_in(v) != 1) continue;
      const auto coeffs = coefficients_in(g, v);  // g = c1·X_v + c0
      if (multipoly_gcd(coeffs[0], coeffs[1]).is_constant()) return true;
    }
  }
  return false;
}

}  // namespace

DomainCheck check_domain(const Presentation& p) {
  DomainCheck out;
  if (p.gens.empty()) {
    out.status = DomainStatus::Verified;
    out.reason = "polynomial ring over Z";
    return out;
  }
  MembershipOptions opts = domain_membership_options();
  for (long n = 1; n <= 12; ++n) {
    auto m = ideal_membership(p.gens, ZPoly::constant(p.r, n), opts);
    if (m.verdict == Verdict::Member) {
      out.status = DomainStatus::Refuted;
      out.integer_in_ideal = n;
      out.reason = "the integer " + std::to_string(n) + " lies in I";
      return out;
    }
  }
  MembershipOptions qopts = opts;
  qopts.ring = CoeffRing::Rational;
  if (ideal_membership(p.gens, ZPoly::constant(p.r, 1), qopts).verdict == Verdict::Member) {
    out.status = DomainStatus::Refuted;
    out.reason = "1 lies in the ideal over Q, so I meets Z";
    return out;
  }
  for (const auto& g : p.gens) {
    for (auto& [u, w] : splits_of(g)) {
      const auto mu = ideal_membership(p.gens, u, opts);
      if (mu.verdict != Verdict::NonMember) continue;
      const auto mw = ideal_membership(p.gens, w, opts);
      if (mw.verdict != Verdict::NonMember) continue;
      out.status = DomainStatus::Refuted;
      out.reason = "zero divisors " + to_string(u) + " and " + to_string(w);
      out.zero_divisors = std::make_pair(u, w);
      return out;
    }
  }
  if (p.gens.size() == 1 && provably_irreducible(p.gens[0])) {
    out.status = DomainStatus::Verified;
    out.reason = "single primitive generator irreducible over Q";
    return out;
  }
  out.reason = "no zero divisor found and no irreducibility certificate";
  return out;
}

DomainCheck check_transcendence_split(const Presentation& p, long size_cap) {
  DomainCheck out;
  if (p.q == 0) {
    out.reason = "empty transcendence basis";
    return out;
  }
  auto only_basis = [&](const ZPoly& f) {
    for (std::size_t v : occurring_vars(f)) {
      if (v >= p.q) return false;
    }
    return true;
  };
  for (const auto& g : p.gens) {
    if (only_basis(g)) {
      out.status = DomainStatus::Refuted;
      out.reason = "generator " + to_string(g) + " involves only the basis variables";
      return out;
    }
  }
  std::vector<std::size_t> embed(p.q);
  for (std::size_t i = 0; i < p.q; ++i) embed[i] = i;
  MembershipOptions opts = domain_membership_options();
  opts.delta_max = 3;
  for (const auto& f : polys_of_size(p.q, size_cap)) {
    if (f.is_constant()) continue;
    const ZPoly g = f.remap(embed, p.r);
    if (ideal_membership(p.gens, g, opts).verdict == Verdict::Member) {
      out.status = DomainStatus::Refuted;
      out.reason = "relation " + to_string(g) + " lies in I";
      return out;
    }
  }
  out.reason = "no relation among the basis variables of size ≤ " + std::to_string(size_cap);
  return out;
}

}  // namespace effkit
