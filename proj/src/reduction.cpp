#include "effkit/reduction.hpp"

#include <algorithm>
#include <map>

#include "effkit/errors.hpp"
#include "effkit/exact_linalg.hpp"
#include "effkit/poly_algo.hpp"

namespace effkit {

namespace {

// Monomials of A0 (first q variables) of degree ≤ delta, as exponents in r variables.
std::vector<Exponent> a0_monomials(std::size_t q, std::size_t r, int delta) {
  std::vector<Exponent> out;
  for (const auto& e : monomials_up_to(q, delta)) {
    Exponent f(r, 0);
    std::copy(e.begin(), e.end(), f.begin());
    out.push_back(std::move(f));
  }
  if (q == 0) out = {Exponent(r, 0)};
  return out;
}

int deg0(const ZPoly& f) { return f.is_zero() ? 0 : f.degree(); }

BigFloat log_height(const ZPoly& f) {
  const mpz_class H = max_abs_coeff(f);
  return H <= 1 ? BigFloat(0.0) : log_int(H);
}

// Divide a vector of A0 elements by their gcd; sign fixed by `lead`.
ZPoly normalize_by_gcd(std::vector<ZPoly>& parts, std::size_t lead) {
  ZPoly g = multipoly_gcd(parts);
  if (g.is_zero()) return g;
  if (parts[lead].leading_coeff() < 0) g = -g;
  for (auto& x : parts) {
    auto qt = exact_divide(x, g);
    ensures(qt.has_value(), "gcd does not divide");
    x = *qt;
  }
  return g;
}

PolyVector scale_down(const std::vector<ZPoly>& cof, const mpz_class& c) {
  mpq_class s(mpz_class(1), c);
  s.canonicalize();
  PolyVector out;
  for (const auto& x : cof) out.push_back(to_rational(x) * s);
  return out;
}

// Cofactors over Q for target ∈ I, from a fresh membership search.
std::optional<PolyVector> rational_cofactors(const Presentation& p, const ZPoly& target,
                                             int delta_max) {
  if (p.gens.empty()) {
    if (target.is_zero()) return PolyVector{};
    return std::nullopt;
  }
  MembershipOptions o;
  o.ring = CoeffRing::Rational;
  o.delta_max = delta_max;
  auto m = ideal_membership(p.gens, target, o);
  if (m.verdict != Verdict::Member) return std::nullopt;
  return m.cofactors;
}

}  // namespace

LogValue reduction_degree_bound(unsigned long d, unsigned long r, const ConstantPack& pack) {
  // (2d)^{exp(C r)}: ln ln = C r + ln ln(2d)
  const BigFloat lnln = BigFloat(pack.C_expO_r) * BigFloat(static_cast<double>(r)) +
                        log(log(BigFloat(2.0 * static_cast<double>(std::max(1UL, d)))));
  return LogValue::from_loglog(lnln);
}

LogValue reduction_height_bound(unsigned long d, const BigFloat& h, unsigned long r,
                                const ConstantPack& pack) {
  return reduction_degree_bound(d, r, pack) * LogValue::from_value(h + BigFloat(1.0));
}

std::vector<std::vector<ZPoly>> block_kernel(const std::vector<UnknownBlock>& blocks,
                                             std::size_t nvars) {
  std::map<Exponent, std::size_t> row_of;
  struct Entry {
    std::size_t row, col;
    mpz_class value;
  };
  std::vector<Entry> entries;
  std::size_t col = 0;
  for (const auto& b : blocks) {
    for (const auto& m : b.monomials) {
      const ZPoly product = b.multiplier.shifted(m);
      for (const auto& [e, c] : product.terms()) {
        auto [it, inserted] = row_of.try_emplace(e, row_of.size());
        entries.push_back({it->second, col, c});
      }
      ++col;
    }
  }
  IntMatrix U(row_of.size(), col);
  for (const auto& en : entries) U(en.row, en.col) += en.value;
  std::vector<std::vector<ZPoly>> out;
  for (const auto& y : kernel_basis_int(U)) {
    std::vector<ZPoly> v;
    std::size_t k = 0;
    for (const auto& b : blocks) {
      ZPoly poly(nvars);
      for (const auto& m : b.monomials) poly.add_term(m, y[k++]);
      v.push_back(std::move(poly));
    }
    out.push_back(std::move(v));
  }
  return out;
}

// ---- minimal polynomial of w -------------------------------------------------------------

namespace {

// Pick a kernel vector whose parts satisfy `ok`: single vectors first, then
// weighted sums.
std::optional<std::vector<ZPoly>> choose(const std::vector<std::vector<ZPoly>>& kernel,
                                         const std::function<bool(const std::vector<ZPoly>&)>& ok) {
  for (const auto& v : kernel) {
    if (ok(v)) return v;
  }
  if (kernel.empty()) return std::nullopt;
  for (long salt = 1; salt <= 3; ++salt) {
    std::vector<ZPoly> sum = kernel[0];
    for (std::size_t k = 1; k < kernel.size(); ++k) {
      const mpz_class c = static_cast<long>(k) * salt + 1;
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += kernel[k][i] * c;
    }
    if (ok(sum)) return sum;
  }
  return std::nullopt;
}

ZPoly weighted_sum(const Presentation& p, const std::vector<long>& weights) {
  ZPoly W(p.r);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    W += ZPoly::variable(p.r, p.q + i) * mpz_class(weights[i]);
  }
  return W;
}

MinimalPolyData trivial_data(const Presentation& p, const std::vector<long>& weights) {
  MinimalPolyData mp;
  mp.D = 1;
  mp.W = weighted_sum(p, weights);
  mp.G = {ZPoly::constant(p.r, 1), ZPoly::constant(p.r, -1)};
  mp.F = mp.G;
  mp.Y = ZPoly::constant(p.r, 1);
  mp.delta = 0;
  return mp;
}

unsigned long pow_ul(unsigned long b, std::size_t e) {
  unsigned long r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

std::optional<MinimalPolyData> minimal_poly(const Presentation& p, const std::vector<long>& weights,
                                            const ReductionOptions& opts,
                                            std::optional<std::size_t> max_D) {
  expects(weights.size() == p.t(), "one weight per algebraic generator");
  if (p.t() == 0) return trivial_data(p, weights);
  const std::size_t cap = max_D.value_or(pow_ul(p.d(), p.t()));
  const ZPoly W = weighted_sum(p, weights);
  std::vector<ZPoly> Wpow{ZPoly::constant(p.r, 1)};
  for (std::size_t D = 1; D <= cap; ++D) {
    while (Wpow.size() <= D) Wpow.push_back(Wpow.back() * W);
    for (int delta = 0; delta <= opts.delta_max; ++delta) {
      std::vector<UnknownBlock> blocks;
      const auto a0 = a0_monomials(p.q, p.r, delta);
      for (std::size_t i = 0; i <= D; ++i) blocks.push_back({Wpow[D - i], a0});
      const auto cof = monomials_up_to(p.r, delta + static_cast<int>(D));
      for (const auto& g : p.gens) blocks.push_back({-g, cof});
      auto kernel = block_kernel(blocks, p.r);
      auto pick = choose(kernel, [D](const std::vector<ZPoly>& v) {
        return !v[0].is_zero() && !v[D].is_zero();
      });
      if (!pick) continue;
      MinimalPolyData mp;
      mp.D = D;
      mp.W = W;
      mp.delta = delta;
      mp.G.assign(pick->begin(), pick->begin() + static_cast<long>(D) + 1);
      std::vector<ZPoly> cofactors(pick->begin() + static_cast<long>(D) + 1, pick->end());
      const ZPoly g = normalize_by_gcd(mp.G, 0);
      ZPoly lhs(p.r);
      for (std::size_t i = 0; i <= D; ++i) lhs += mp.G[i] * Wpow[D - i];
      if (g.is_constant()) {
        mp.cofactors = scale_down(cofactors, g.constant_term());
      } else {
        auto c = rational_cofactors(p, lhs, opts.delta_max + static_cast<int>(D) + 2);
        if (!c) throw SearchExhausted("minimal polynomial relation lost after gcd division");
        mp.cofactors = *c;
      }
      ensures(p.gens.empty() ? lhs.is_zero() : verify_cofactors(p.gens, lhs, mp.cofactors),
              "minimal polynomial relation does not verify");
      if (D == 1) {
        mp.F = {ZPoly::constant(p.r, 1), ZPoly::constant(p.r, -1)};
        mp.Y = ZPoly::constant(p.r, 1);
      } else {
        mp.F.push_back(ZPoly::constant(p.r, 1));
        ZPoly g0pow = ZPoly::constant(p.r, 1);
        for (std::size_t i = 1; i <= D; ++i) {
          mp.F.push_back(mp.G[i] * g0pow);
          g0pow *= mp.G[0];
        }
        mp.Y = mp.G[0] * W;
      }
      return mp;
    }
  }
  return std::nullopt;
}

PrimitiveElement find_primitive(const Presentation& p, const ReductionOptions& opts) {
  PrimitiveElement out;
  const std::size_t t = p.t();
  if (t == 0) return out;
  const unsigned long bound = pow_ul(p.d(), t);
  if (t == 1) {
    out.weights = {1};
    auto mp = minimal_poly(p, out.weights, opts);
    if (!mp) throw SearchExhausted("no minimal polynomial for the algebraic generator");
    out.D = mp->D;
    out.tuples_tried = 1;
    return out;
  }
  std::size_t best = 0;
  for (long norm = 1;; ++norm) {
    if (best >= bound) break;
    if (best > 0 && static_cast<unsigned long>(norm) > best * best) break;
    if (static_cast<unsigned long>(norm) > bound * bound) break;
    // all tuples in [-norm, norm]^t with max |a_i| = norm, lexicographic
    std::vector<long> a(t, -norm);
    while (true) {
      const bool on_shell = std::any_of(a.begin(), a.end(), [&](long v) { return std::abs(v) == norm; });
      if (on_shell) {
        ++out.tuples_tried;
        auto mp = minimal_poly(p, a, opts, bound);
        if (mp && mp->D > best) {
          best = mp->D;
          out.weights = a;
          out.D = best;
          if (best >= bound) break;
        }
      }
      std::size_t i = t;
      while (i > 0 && a[i - 1] == norm) a[--i] = -norm;
      if (i == 0) break;
      ++a[i - 1];
    }
  }
  if (best == 0) throw SearchExhausted("no primitive element within the weight window");
  return out;
}

// ---- canonical representations -----------------------------------------------------------

int CanonicalRep::deg_bar() const {
  int d = deg0(Q);
  for (const auto& x : P) d = std::max(d, deg0(x));
  return d;
}

mpz_class CanonicalRep::height_bar() const {
  mpz_class h = max_abs_coeff(Q);
  for (const auto& x : P) h = std::max(h, max_abs_coeff(x));
  return h;
}

unsigned long ReducedDomain::d0() const {
  int d = 1;
  for (std::size_t i = 1; i < mp.F.size(); ++i) d = std::max(d, deg0(mp.F[i]));
  return static_cast<unsigned long>(d);
}

unsigned long ReducedDomain::d1() const {
  return std::max(d0(), static_cast<unsigned long>(std::max(0, deg0(f))));
}

BigFloat ReducedDomain::h0() const {
  BigFloat h(1.0);
  for (std::size_t i = 1; i < mp.F.size(); ++i) h = max(h, log_height(mp.F[i]));
  return h;
}

BigFloat ReducedDomain::h1() const { return max(h0(), log_height(f)); }

ZPoly ReducedDomain::minimal_polynomial() const {
  const std::size_t n = pres.q + 1;
  std::vector<std::size_t> map(pres.r, pres.q);
  for (std::size_t i = 0; i < pres.q; ++i) map[i] = i;
  ZPoly F(n);
  for (std::size_t i = 0; i <= mp.D; ++i) {
    F += mp.F[i].remap(map, n) * ZPoly::variable(n, pres.q, static_cast<std::uint32_t>(mp.D - i));
  }
  return F;
}

namespace {

ZPoly lift_to(const ZPoly& a, std::size_t r) {
  if (a.nvars() == r) return a;
  expects(a.is_constant(), "element has the wrong number of variables");
  return ZPoly::constant(r, a.constant_term());
}

}  // namespace

CanonicalResult canonical_rep(const ReducedDomain& rd, const FractionRep& alpha,
                              const ReductionOptions& opts) {
  const Presentation& p = rd.pres;
  const ZPoly num = lift_to(alpha.num, p.r), den = lift_to(alpha.den, p.r);
  expects(!num.is_zero(), "canonical representation of zero");
  expects(!den.is_zero(), "zero denominator");
  if (!p.gens.empty()) {
    MembershipOptions mo = domain_membership_options();
    mo.delta_max = 3;
    expects(ideal_membership(p.gens, den, mo).verdict != Verdict::Member, "denominator lies in I");
    expects(ideal_membership(p.gens, num, mo).verdict != Verdict::Member, "numerator lies in I");
  }
  const std::size_t D = rd.D();
  std::vector<ZPoly> Ypow{ZPoly::constant(p.r, 1)};
  for (std::size_t j = 1; j < D; ++j) Ypow.push_back(Ypow.back() * rd.mp.Y);
  const int extra = std::max(deg0(num), deg0(den) + static_cast<int>(D - 1) * deg0(rd.mp.Y));

  for (int delta = 0; delta <= opts.delta_max; ++delta) {
    std::vector<UnknownBlock> blocks;
    const auto a0 = a0_monomials(p.q, p.r, delta);
    for (std::size_t j = 0; j < D; ++j) blocks.push_back({-(den * Ypow[j]), a0});
    blocks.push_back({num, a0});
    const auto cof = monomials_up_to(p.r, delta + extra);
    for (const auto& g : p.gens) blocks.push_back({-g, cof});
    auto kernel = block_kernel(blocks, p.r);
    auto pick = choose(kernel, [D](const std::vector<ZPoly>& v) { return !v[D].is_zero(); });
    if (!pick) continue;

    CanonicalResult out;
    out.delta = delta;
    std::vector<ZPoly> parts(pick->begin(), pick->begin() + static_cast<long>(D) + 1);
    std::vector<ZPoly> cofactors(pick->begin() + static_cast<long>(D) + 1, pick->end());
    const ZPoly g = normalize_by_gcd(parts, D);
    out.rep.P.assign(parts.begin(), parts.begin() + static_cast<long>(D));
    out.rep.Q = parts[D];
    ZPoly lhs = out.rep.Q * num;
    for (std::size_t j = 0; j < D; ++j) lhs -= den * out.rep.P[j] * Ypow[j];
    if (g.is_constant()) {
      out.cofactors = scale_down(cofactors, g.constant_term());
    } else {
      auto c = rational_cofactors(p, lhs, delta + extra + 2);
      if (!c) throw SearchExhausted("canonical relation lost after gcd division");
      out.cofactors = *c;
    }
    ensures(p.gens.empty() ? lhs.is_zero() : verify_cofactors(p.gens, lhs, out.cofactors),
            "canonical representation does not verify");

    const unsigned long dstar = std::max<unsigned long>(
        {p.d(), static_cast<unsigned long>(deg0(num)), static_cast<unsigned long>(deg0(den))});
    const BigFloat hstar = max(p.h(), max(log_height(num), log_height(den)));
    out.cert_deg = {"canonical degree", reduction_degree_bound(dstar, p.r, opts.pack),
                    LogValue::from_int(out.rep.deg_bar())};
    out.cert_height = {"canonical height", reduction_height_bound(dstar, hstar, p.r, opts.pack),
                       LogValue::from_int(out.rep.height_bar() <= 1 ? mpz_class(1) : out.rep.height_bar())};
    // observed is H itself; the bound is on log H, so compare log H ≤ bound
    out.cert_height.observed = LogValue::from_log(
        out.rep.height_bar() <= 1 ? BigFloat(0.0) : log_int(out.rep.height_bar()));
    ensures(out.cert_deg.holds() && out.cert_height.holds(),
            "canonical representation exceeds its certificate");
    return out;
  }
  throw SearchExhausted("no canonical representation up to degree " +
                        std::to_string(opts.delta_max));
}

FractionRep to_fraction(const ReducedDomain& rd, const CanonicalRep& c) {
  const std::size_t r = rd.pres.r;
  ZPoly num(r), Ypow = ZPoly::constant(r, 1);
  for (const auto& Pj : c.P) {
    num += Pj * Ypow;
    Ypow *= rd.mp.Y;
  }
  return {num, c.Q};
}

ReducedDomain reduce_domain(const Presentation& p, const ReductionOptions& opts) {
  ReducedDomain rd;
  rd.pres = p;
  rd.f = ZPoly::constant(p.r, 1);
  if (p.t() == 0) {
    rd.mp = trivial_data(p, {});
    return rd;
  }
  const auto prim = find_primitive(p, opts);
  rd.weights = prim.weights;
  auto mp = minimal_poly(p, prim.weights, opts);
  ensures(mp.has_value() && mp->D == prim.D, "minimal polynomial degree is unstable");
  rd.mp = std::move(*mp);
  const unsigned long dt = pow_ul(p.d(), p.t());
  ensures(rd.D() <= dt, "extension degree exceeds d^t");
  for (long a : rd.weights) {
    ensures(static_cast<unsigned long>(std::abs(a)) <= rd.D() * rd.D(), "weight exceeds D^2");
  }
  rd.certificates.push_back(
      {"extension degree D <= d^t", LogValue::from_int(dt), LogValue::from_int(rd.D())});
  int degF = 0;
  mpz_class hF = 0;
  for (const auto& Fi : rd.mp.F) {
    degF = std::max(degF, deg0(Fi));
    hF = std::max(hF, max_abs_coeff(Fi));
  }
  rd.certificates.push_back({"minimal polynomial degree", reduction_degree_bound(p.d(), p.r, opts.pack),
                             LogValue::from_int(degF)});
  rd.certificates.push_back({"minimal polynomial height",
                             reduction_height_bound(p.d(), p.h(), p.r, opts.pack),
                             LogValue::from_log(hF <= 1 ? BigFloat(0.0) : log_int(hF))});
  for (std::size_t i = 0; i < p.t(); ++i) {
    rd.y_reps.push_back(canonical_rep(rd, {ZPoly::variable(p.r, p.q + i), ZPoly::constant(p.r, 1)},
                                      opts).rep);
  }
  for (const auto& c : rd.certificates) ensures(c.holds(), c.name + " certificate fails");
  return rd;
}

ZPoly build_B(ReducedDomain& rd, const std::vector<FractionRep>& alphas,
              const ReductionOptions& opts) {
  const Presentation& p = rd.pres;
  ZPoly f = ZPoly::constant(p.r, 1);
  for (const auto& c : rd.y_reps) f *= c.Q;
  unsigned long dstar = p.d();
  BigFloat hstar = p.h();
  for (const auto& a : alphas) {
    f *= canonical_rep(rd, a, opts).rep.Q;
    f *= canonical_rep(rd, {a.den, a.num}, opts).rep.Q;
    dstar = std::max<unsigned long>({dstar, static_cast<unsigned long>(deg0(lift_to(a.num, p.r))),
                                     static_cast<unsigned long>(deg0(lift_to(a.den, p.r)))});
    hstar = max(hstar, max(log_height(a.num), log_height(a.den)));
  }
  f = sign_normalize(f);
  rd.f = f;
  const LogValue n1 = LogValue::from_int(static_cast<long>(alphas.size()) + 1);
  rd.certificates.push_back({"denominator degree", n1 * reduction_degree_bound(dstar, p.r, opts.pack),
                             LogValue::from_int(deg0(f))});
  rd.certificates.push_back({"denominator height",
                             n1 * reduction_height_bound(dstar, hstar, p.r, opts.pack),
                             LogValue::from_int(max_abs_coeff(f))});
  // the height certificate compares log H(f) with the bound's value
  rd.certificates.back().observed = LogValue::from_log(log_height(f));
  for (const auto& c : rd.certificates) ensures(c.holds(), c.name + " certificate fails");
  return f;
}

// ---- lifting representatives ---------------------------------------------------------------

namespace {

std::pair<Certificate, Certificate> lift_certificates(const ReducedDomain& rd, const FractionRep& lambda,
                                                      const CanonicalRep& beta, const ZPoly& rep,
                                                      const ConstantPack& pack) {
  const Presentation& p = rd.pres;
  unsigned long d0 = std::max<unsigned long>(
      {p.d(), static_cast<unsigned long>(deg0(lift_to(lambda.num, p.r))),
       static_cast<unsigned long>(deg0(lift_to(lambda.den, p.r))),
       static_cast<unsigned long>(beta.deg_bar())});
  BigFloat h0 = max(p.h(), max(log_height(lambda.num), log_height(lambda.den)));
  h0 = max(h0, beta.height_bar() <= 1 ? BigFloat(0.0) : log_int(beta.height_bar()));
  // (2 d0)^{exp(C r log* r)}
  const BigFloat r = BigFloat(static_cast<double>(p.r));
  const BigFloat lnln = BigFloat(pack.C_expO_r) * r * log_star(r) +
                        log(log(BigFloat(2.0 * static_cast<double>(d0))));
  const LogValue base = LogValue::from_loglog(lnln);
  const LogValue h1 = LogValue::from_value(h0 + BigFloat(1.0));
  Certificate cd{"lifted representative degree", base * h1, LogValue::from_int(deg0(rep))};
  Certificate ch{"lifted representative height",
                 base * h1.pow(BigFloat(static_cast<double>(p.r + 1))),
                 LogValue::from_log(log_height(rep))};
  return {cd, ch};
}

std::optional<LiftResult> lift_impl(const ReducedDomain& rd, const FractionRep& lambda,
                                    const CanonicalRep& beta, const MembershipOptions& opts,
                                    const ConstantPack& pack, bool inverse) {
  const Presentation& p = rd.pres;
  const ZPoly a = lift_to(lambda.num, p.r), b = lift_to(lambda.den, p.r);
  const FractionRep frac = to_fraction(rd, beta);
  const ZPoly Qa = beta.Q * a;
  const ZPoly bP = b * frac.num;
  std::vector<ZPoly> gens{inverse ? bP : Qa};
  gens.insert(gens.end(), p.gens.begin(), p.gens.end());
  auto m = ideal_membership(gens, inverse ? Qa : bP, opts);
  if (m.verdict != Verdict::Member) return std::nullopt;
  LiftResult out;
  out.rep = to_integer(m.cofactors[0]);
  out.membership = std::move(m);
  std::tie(out.cert_deg, out.cert_height) = lift_certificates(rd, lambda, beta, out.rep, pack);
  ensures(out.cert_deg.holds() && out.cert_height.holds(), "lifted representative exceeds its bound");
  return out;
}

}  // namespace

std::optional<LiftResult> lift_representative(const ReducedDomain& rd, const FractionRep& lambda,
                                              const CanonicalRep& beta, const MembershipOptions& opts,
                                              const ConstantPack& pack) {
  return lift_impl(rd, lambda, beta, opts, pack, false);
}

std::optional<LiftResult> lift_inverse_representative(const ReducedDomain& rd,
                                                      const FractionRep& lambda,
                                                      const CanonicalRep& beta,
                                                      const MembershipOptions& opts,
                                                      const ConstantPack& pack) {
  return lift_impl(rd, lambda, beta, opts, pack, true);
}

}  // namespace effkit
