#include "effkit/poly_linear.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "effkit/errors.hpp"
#include "effkit/poly_algo.hpp"

namespace effkit {

int PolySystem::max_degree() const {
  int d = 0;
  for (const auto& row : A) {
    for (const auto& e : row) d = std::max(d, e.degree());
  }
  if (b) {
    for (const auto& e : *b) d = std::max(d, e.degree());
  }
  return d;
}

void PolySystem::validate() const {
  if (A.empty()) throw BadInput("polynomial system without equations");
  const std::size_t n = A.front().size();
  for (const auto& row : A) {
    if (row.size() != n) throw BadInput("ragged polynomial matrix");
    for (const auto& e : row) {
      if (e.nvars() != nvars) throw BadInput("polynomial system entries differ in variable count");
    }
  }
  if (b) {
    if (b->size() != A.size()) throw BadInput("right-hand side length mismatch");
    for (const auto& e : *b) {
      if (e.nvars() != nvars) throw BadInput("right-hand side differs in variable count");
    }
  }
  if (ring == CoeffRing::Integer) {
    auto integral = [](const QPoly& p) {
      return std::all_of(p.terms().begin(), p.terms().end(),
                         [](const auto& t) { return t.second.get_den() == 1; });
    };
    for (const auto& row : A) {
      for (const auto& e : row) {
        if (!integral(e)) throw BadInput("integer system with a non-integral entry");
      }
    }
    if (b) {
      for (const auto& e : *b) {
        if (!integral(e)) throw BadInput("integer system with a non-integral right-hand side");
      }
    }
  }
}

// ---- coefficient systems ----------------------------------------------------------

namespace {
Exponent add_exp(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

std::map<Exponent, std::size_t> index_of(const std::vector<Exponent>& mons) {
  std::map<Exponent, std::size_t> idx;
  for (std::size_t k = 0; k < mons.size(); ++k) idx.emplace(mons[k], k);
  return idx;
}

template <class T>
PolyVector polys_from(std::span<const T> y, const std::vector<Exponent>& mons, std::size_t nvars) {
  const std::size_t M = mons.size();
  const std::size_t n = M == 0 ? 0 : y.size() / M;
  PolyVector x(n, QPoly(nvars));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < M; ++k) {
      const auto& c = y[j * M + k];
      if (c != 0) x[j].add_term(mons[k], mpq_class(c));
    }
  }
  return x;
}

// Coefficients of x in the (column block, monomial) layout given by idx.
RatVector flatten(const PolyVector& x, const std::map<Exponent, std::size_t>& idx) {
  const std::size_t M = idx.size();
  RatVector v(x.size() * M);
  for (std::size_t j = 0; j < x.size(); ++j) {
    for (const auto& [e, c] : x[j].terms()) v[j * M + idx.at(e)] = c;
  }
  return v;
}

int vector_degree(const PolyVector& x) {
  int d = kDegZero;
  for (const auto& p : x) d = std::max(d, p.degree());
  return d;
}
}  // namespace

PolyVector CoefficientSystem::to_polys(std::span<const mpq_class> y, std::size_t nvars) const {
  return polys_from(y, unknown_monomials, nvars);
}

PolyVector CoefficientSystem::to_polys(std::span<const mpz_class> y, std::size_t nvars) const {
  return polys_from(y, unknown_monomials, nvars);
}

CoefficientSystem assemble(const PolySystem& sys, int delta) {
  sys.validate();
  expects(delta >= 0, "negative degree cap");
  const std::size_t N = sys.nvars, m = sys.rows(), n = sys.cols();
  int d = 0;  // degree of A only; monomials of b beyond delta + d are unreachable
  for (const auto& row : sys.A) {
    for (const auto& e : row) d = std::max(d, e.degree());
  }
  CoefficientSystem cs;
  cs.unknown_monomials = monomials_up_to(N, delta);
  const std::size_t M = cs.unknown_monomials.size();
  const std::vector<Exponent> out_mons = monomials_up_to(N, delta + d);
  const auto out_idx = index_of(out_mons);
  const std::size_t R = out_mons.size();

  std::vector<RatVector> rows(m * R, RatVector(n * M));
  RatVector rhs(m * R);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [e, c] : sys.A[i][j].terms()) {
        for (std::size_t k = 0; k < M; ++k) {
          rows[i * R + out_idx.at(add_exp(e, cs.unknown_monomials[k]))][j * M + k] += c;
        }
      }
    }
    if (sys.b) {
      for (const auto& [e, c] : (*sys.b)[i].terms()) {
        auto it = out_idx.find(e);
        if (it == out_idx.end()) {
          cs.rhs_out_of_reach = true;
          continue;
        }
        rhs[i * R + it->second] = c;
      }
    }
  }
  cs.U = IntMatrix(m * R, n * M);
  cs.rhs = IntVector(m * R);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    mpz_class l = rhs[r].get_den();
    for (const auto& c : rows[r]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    for (std::size_t c = 0; c < n * M; ++c) {
      if (rows[r][c] != 0) {
        mpq_class v = rows[r][c] * l;
        cs.U(r, c) = v.get_num();
      }
    }
    mpq_class v = rhs[r] * l;
    cs.rhs[r] = v.get_num();
  }
  return cs;
}

std::vector<PolyVector> truncated_kernel_space(const PolySystem& sys, int delta) {
  PolySystem hom = sys;
  hom.b.reset();
  CoefficientSystem cs = assemble(hom, delta);
  std::vector<PolyVector> out;
  for (const auto& y : kernel_basis_int(cs.U)) out.push_back(cs.to_polys(std::span<const mpz_class>(y), sys.nvars));
  return out;
}

std::vector<PolyVector> truncated_kernel(const PolySystem& sys, int delta) {
  const std::size_t N = sys.nvars;
  std::vector<PolyVector> gens;
  for (int level = 0; level <= delta; ++level) {
    std::vector<PolyVector> space = truncated_kernel_space(sys, level);
    if (space.empty()) continue;
    const auto idx = index_of(monomials_up_to(N, level));
    IncrementalSpan span(sys.cols() * idx.size());
    for (const auto& g : gens) {
      for (const auto& mu : monomials_up_to(N, level - vector_degree(g))) {
        PolyVector shifted = g;
        for (auto& p : shifted) p = p.shifted(mu);
        span.add(flatten(shifted, idx));
      }
    }
    for (auto& v : space) {
      if (span.add(flatten(v, idx))) gens.push_back(std::move(v));
    }
  }
  return gens;
}

std::optional<PolyVector> solve_at_degree(const PolySystem& sys, int delta) {
  expects(sys.b.has_value(), "solve requires a right-hand side");
  CoefficientSystem cs = assemble(sys, delta);
  if (cs.rhs_out_of_reach) return std::nullopt;
  auto q = solve_rational(cs.U, cs.rhs);
  if (!q) return std::nullopt;
  if (sys.ring == CoeffRing::Rational) return cs.to_polys(std::span<const mpq_class>(*q), sys.nvars);
  auto z = solve_int_small(cs.U, cs.rhs);
  if (!z) return std::nullopt;
  return cs.to_polys(std::span<const mpz_class>(*z), sys.nvars);
}

PolySolveResult solve_poly_linear(const PolySystem& sys, int delta_max) {
  sys.validate();
  PolySolveResult r;
  r.delta_max = delta_max;
  if (sys.nvars == 0) {
    r.theoretical_bound = 0;
  } else {
    auto caps = section2_caps(sys.rows(), static_cast<unsigned long>(std::max(1, sys.max_degree())),
                              BigFloat(1.0), sys.nvars, ConstantPack{});
    r.theoretical_bound = caps.hermann_deg;
  }
  for (int delta = 0; delta <= delta_max; ++delta) {
    if (auto x = solve_at_degree(sys, delta)) {
      r.x = std::move(x);
      r.degree = delta;
      return r;
    }
  }
  return r;
}

// ---- ideal membership -------------------------------------------------------------

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Member: return "Member";
    case Verdict::NonMember: return "NonMember";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

bool verify_cofactors(const std::vector<ZPoly>& gens, const ZPoly& b, const PolyVector& x) {
  if (x.size() != gens.size()) return false;
  QPoly sum(b.nvars());
  for (std::size_t i = 0; i < gens.size(); ++i) sum += x[i] * to_rational(gens[i]);
  return sum == to_rational(b);
}

namespace {

// Element of (Z/n)[e]/(e^k), coefficients reduced into [0, n).
struct Jet {
  std::vector<unsigned long> c;
};

Jet jet_mul(const Jet& a, const Jet& b, unsigned long n) {
  const std::size_t k = a.c.size();
  Jet r{std::vector<unsigned long>(k, 0)};
  for (std::size_t i = 0; i < k; ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; i + j < k; ++j) {
      r.c[i + j] = (r.c[i + j] + a.c[i] * b.c[j]) % n;
    }
  }
  return r;
}

unsigned long residue(const mpz_class& v, unsigned long n) {
  return mpz_fdiv_ui(v.get_mpz_t(), n);
}

// Evaluate f at the jet point X_i -> base_i + tangent_i e.
Jet jet_eval(const ZPoly& f, const std::vector<std::vector<Jet>>& powers, unsigned long n,
             std::size_t k) {
  Jet sum{std::vector<unsigned long>(k, 0)};
  for (const auto& [e, c] : f.terms()) {
    Jet term{std::vector<unsigned long>(k, 0)};
    term.c[0] = residue(c, n);
    if (term.c[0] == 0) continue;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term = jet_mul(term, powers[i][e[i]], n);
    }
    for (std::size_t t = 0; t < k; ++t) sum.c[t] = (sum.c[t] + term.c[t]) % n;
  }
  return sum;
}

bool is_zero_jet(const Jet& j) {
  return std::all_of(j.c.begin(), j.c.end(), [](unsigned long v) { return v == 0; });
}

// Odometer over {0..n-1}^len; returns false after the last vector.
bool next_digits(std::vector<unsigned long>& d, unsigned long n) {
  for (auto& x : d) {
    if (++x < n) return true;
    x = 0;
  }
  return false;
}

mpq_class eval_rational(const ZPoly& f, const std::vector<mpq_class>& u) {
  mpq_class s = 0;
  for (const auto& [e, c] : f.terms()) {
    mpq_class t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::uint32_t p = 0; p < e[i]; ++p) t *= u[i];
    }
    s += t;
  }
  return s;
}

LogValue cofactor_height(const PolyVector& x) {
  mpz_class H = 0;
  for (const auto& p : x) {
    for (const auto& [e, c] : p.terms()) {
      H = std::max({H, mpz_class(abs(c.get_num())), mpz_class(c.get_den())});
    }
  }
  return LogValue::from_int(H);
}

bool exceeds_height_cap(const PolyVector& x, long cap) {
  const mpz_class limit = floor_exp(cap);
  for (const auto& p : x) {
    for (const auto& [e, c] : p.terms()) {
      if (abs(c.get_num()) > limit) return true;
    }
  }
  return false;
}

}  // namespace

std::string ModularWitness::describe() const {
  std::ostringstream os;
  os << "all generators vanish and b does not at X = (";
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (i) os << ", ";
    os << base[i];
    if (jet_order > 1 && tangent[i] != 0) os << " + " << tangent[i] << "e";
  }
  os << ") over Z/" << modulus;
  if (jet_order > 1) os << "[e]/(e^" << jet_order << ")";
  return os.str();
}

std::optional<ModularWitness> find_modular_witness(const std::vector<ZPoly>& gens, const ZPoly& b,
                                                   std::size_t budget) {
  const std::size_t N = b.nvars();
  int maxdeg = std::max(0, b.degree());
  for (const auto& g : gens) maxdeg = std::max(maxdeg, g.degree());
  const unsigned long moduli[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32};
  std::size_t spent = 0;
  for (unsigned jet_order : {1U, 2U, 3U}) {
    for (unsigned long n : moduli) {
      // points: n^N bases, times n^N tangents for jets
      double count = std::pow(static_cast<double>(n), static_cast<double>(N) * (jet_order > 1 ? 2 : 1));
      if (spent + count > static_cast<double>(budget)) continue;
      spent += static_cast<std::size_t>(count);
      std::vector<unsigned long> base(N, 0), tangent(N, 0);
      do {
        do {
          if (jet_order > 1 && std::all_of(tangent.begin(), tangent.end(),
                                           [](unsigned long v) { return v == 0; }))
            continue;
          std::vector<std::vector<Jet>> powers(N);
          for (std::size_t i = 0; i < N; ++i) {
            Jet x{std::vector<unsigned long>(jet_order, 0)};
            x.c[0] = base[i] % n;
            if (jet_order > 1) x.c[1] = tangent[i] % n;
            Jet p{std::vector<unsigned long>(jet_order, 0)};
            p.c[0] = 1 % n;
            powers[i].push_back(p);
            for (int k = 1; k <= maxdeg; ++k) powers[i].push_back(jet_mul(powers[i].back(), x, n));
          }
          bool all_vanish = true;
          for (const auto& g : gens) {
            if (!is_zero_jet(jet_eval(g, powers, n, jet_order))) {
              all_vanish = false;
              break;
            }
          }
          if (all_vanish && !is_zero_jet(jet_eval(b, powers, n, jet_order))) {
            return ModularWitness{n, jet_order, base, tangent};
          }
        } while (jet_order > 1 && next_digits(tangent, n));
      } while (next_digits(base, n));
    }
  }
  return std::nullopt;
}

std::optional<std::vector<mpq_class>> find_rational_witness(const std::vector<ZPoly>& gens,
                                                            const ZPoly& b) {
  const std::size_t N = b.nvars();
  std::vector<mpq_class> coords;
  if (N <= 2) {
    for (long den = 1; den <= 3; ++den) {
      for (long num = -4; num <= 4; ++num) {
        if (std::gcd(num, den) != 1) continue;
        coords.emplace_back(num, den);
      }
    }
  } else {
    for (long v = -2; v <= 2; ++v) coords.emplace_back(v);
  }
  std::vector<unsigned long> digit(N, 0);
  do {
    std::vector<mpq_class> u(N);
    for (std::size_t i = 0; i < N; ++i) u[i] = coords[digit[i]];
    bool all_vanish = std::all_of(gens.begin(), gens.end(),
                                  [&](const ZPoly& g) { return eval_rational(g, u) == 0; });
    if (all_vanish && eval_rational(b, u) != 0) return u;
  } while (next_digits(digit, coords.size()));
  return std::nullopt;
}

MembershipResult ideal_membership(const std::vector<ZPoly>& gens, const ZPoly& b,
                                  const MembershipOptions& opts) {
  if (gens.empty()) throw BadInput("ideal without generators");
  const std::size_t N = b.nvars();
  for (const auto& g : gens) {
    if (g.nvars() != N) throw BadInput("generators and target differ in variable count");
  }
  const bool over_q = opts.ring == CoeffRing::Rational;
  const std::size_t m = gens.size();

  MembershipResult res;
  int d = std::max(1, b.degree());
  mpz_class H = std::max(mpz_class(1), max_abs_coeff(b));
  for (const auto& g : gens) {
    d = std::max(d, g.degree());
    H = std::max(H, max_abs_coeff(g));
  }
  const BigFloat h = max(BigFloat(1.0), log_int(H));
  res.caps = section2_caps(1, static_cast<unsigned long>(d), h, std::max<std::size_t>(N, 1), opts.pack);

  auto member = [&](PolyVector x, std::string how) {
    ensures(verify_cofactors(gens, b, x), "membership certificate failed to re-verify");
    res.verdict = Verdict::Member;
    res.degree = vector_degree(x);
    res.height = cofactor_height(x);
    res.cofactors = std::move(x);
    res.certificate = std::move(how);
    return res;
  };
  auto non_member = [&](std::string how) {
    res.verdict = Verdict::NonMember;
    res.certificate = std::move(how);
    return res;
  };

  if (b.is_zero()) return member(PolyVector(m, QPoly(N)), "b is zero");
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < m; ++i) {
    if (!gens[i].is_zero()) live.push_back(i);
  }
  if (live.empty()) return non_member("the ideal is zero and b is not");

  // A generator that is a unit of the coefficient ring.
  for (std::size_t i : live) {
    const ZPoly& g = gens[i];
    if (!g.is_constant()) continue;
    const mpz_class c = g.constant_term();
    if (over_q || abs(c) == 1) {
      PolyVector x(m, QPoly(N));
      x[i] = to_rational(b) * (mpq_class(1) / mpq_class(c));
      return member(std::move(x), "a generator is a unit");
    }
  }

  // Principal ideal: membership is divisibility.
  if (live.size() == 1) {
    const std::size_t i = live.front();
    PolyVector x(m, QPoly(N));
    if (over_q) {
      if (auto q = exact_divide(to_rational(b), to_rational(gens[i]))) {
        x[i] = *q;
        return member(std::move(x), "principal ideal, exact division over Q");
      }
    } else if (auto q = exact_divide(b, gens[i])) {
      x[i] = to_rational(*q);
      return member(std::move(x), "principal ideal, exact division over Z");
    }
    return non_member("principal ideal whose generator does not divide b");
  }

  // Every generator is a multiple of their gcd.
  std::vector<ZPoly> live_gens;
  for (std::size_t i : live) live_gens.push_back(gens[i]);
  const ZPoly g = multipoly_gcd(live_gens);
  if (over_q || N == 1) {
    const ZPoly gp = primitive_part(g);
    if (!gp.is_constant() && !exact_divide(to_rational(b), to_rational(gp))) {
      return non_member("the gcd of the generators (" + to_string(gp) + ") does not divide b over Q");
    }
  }
  if (!over_q && !(g.is_constant() && abs(g.constant_term()) == 1) && !exact_divide(b, g)) {
    return non_member("the gcd of the generators (" + to_string(g) + ") does not divide b");
  }

  if (opts.search_witnesses) {
    if (auto u = find_rational_witness(live_gens, b)) {
      std::ostringstream os;
      os << "all generators vanish and b does not at the rational point (";
      for (std::size_t i = 0; i < u->size(); ++i) os << (i ? ", " : "") << (*u)[i].get_str();
      os << ")";
      return non_member(os.str());
    }
    if (!over_q) {
      if (auto w = find_modular_witness(live_gens, b)) return non_member(w->describe());
    }
  }

  PolySystem sys;
  sys.nvars = N;
  sys.ring = opts.ring;
  sys.A = {PolyVector()};
  for (const auto& gi : gens) sys.A[0].push_back(to_rational(gi));
  sys.b = PolyVector{to_rational(b)};

  const auto hermann = res.caps.hermann_deg;
  // Over Q in one variable the gcd test above already settled membership, and
  // the degree bound guarantees cofactors up to it.
  int cap = opts.delta_max;
  if (over_q && N == 1 && hermann) cap = std::max<long>(cap, static_cast<long>(*hermann));

  for (int delta = 0; delta <= cap; ++delta) {
    res.delta_reached = delta;
    auto x = solve_at_degree(sys, delta);
    if (!x) continue;
    if (opts.height_cap && exceeds_height_cap(*x, *opts.height_cap)) continue;
    return member(std::move(*x), "cofactors found at degree " + std::to_string(delta));
  }

  // No rational cofactors up to the degree bound rules out membership for both
  // rings; past the search cap the bound is only tried when it is small.
  if (hermann && static_cast<long>(*hermann) <= std::max<long>(cap, opts.hermann_jump_limit)) {
    const int top = static_cast<int>(*hermann);
    PolySystem qsys = sys;
    qsys.ring = CoeffRing::Rational;
    auto x = solve_at_degree(qsys, top);
    if (!x) return non_member("no rational cofactors up to the degree bound " + std::to_string(top));
    if (top > cap) {
      if (over_q && !(opts.height_cap && exceeds_height_cap(*x, *opts.height_cap))) {
        return member(std::move(*x), "cofactors found at the degree bound " + std::to_string(top));
      }
      if (!over_q) {
        auto z = solve_at_degree(sys, top);
        if (z && !(opts.height_cap && exceeds_height_cap(*z, *opts.height_cap))) {
          return member(std::move(*z), "cofactors found at degree " + std::to_string(top));
        }
      }
    }
  }
  res.verdict = Verdict::Unknown;
  res.certificate = "no cofactors up to degree " + std::to_string(cap) + " and no witness found";
  return res;
}

}  // namespace effkit
