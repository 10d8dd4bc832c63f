#include "effkit/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "effkit/errors.hpp"
#include "effkit/poly_algo.hpp"

namespace effkit {

namespace {

constexpr mpfr_prec_t kIsolatePrec = 128;
constexpr mpfr_prec_t kMaxPrec = 1 << 15;

// ---- approximate roots over MPFR ------------------------------------------

struct Cx {
  BigFloat re, im;
};

Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator*(const Cx& a, const Cx& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
BigFloat norm2(const Cx& a) { return a.re * a.re + a.im * a.im; }
Cx operator/(const Cx& a, const Cx& b) {
  const BigFloat d = norm2(b);
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

// f(z) and f'(z) by Horner.
std::pair<Cx, Cx> horner(const std::vector<BigFloat>& c, const Cx& z, mpfr_prec_t p) {
  Cx v{BigFloat(0.0, p), BigFloat(0.0, p)}, d = v;
  for (std::size_t k = c.size(); k-- > 0;) {
    d = d * z + v;
    v = v * z + Cx{c[k], BigFloat(0.0, p)};
  }
  return {v, d};
}

// Aberth iteration from `z` (resized and seeded on a circle when empty).
void aberth(const ZUni& f, std::vector<Cx>& z, mpfr_prec_t p) {
  const std::size_t n = static_cast<std::size_t>(degree(f));
  std::vector<BigFloat> c;
  for (const auto& a : f) c.push_back(BigFloat::from_int(a, MPFR_RNDN, p));
  if (z.size() != n) {
    // Fujiwara-type radius from the coefficient sizes
    double rho = 1e-2;
    const double lead = std::fabs(f.back().get_d());
    for (std::size_t k = 0; k < n; ++k) {
      if (f[k] == 0) continue;
      rho = std::max(rho, 2 * std::pow(std::fabs(f[k].get_d()) / lead, 1.0 / static_cast<double>(n - k)));
    }
    z.clear();
    for (std::size_t k = 0; k < n; ++k) {
      const double t = 2 * M_PI * static_cast<double>(k) / static_cast<double>(n) + 0.7;
      z.push_back({BigFloat(rho * std::cos(t), p), BigFloat(rho * std::sin(t), p)});
    }
  } else {
    for (auto& w : z) w = {add(w.re, BigFloat(0.0, p)), add(w.im, BigFloat(0.0, p))};
  }
  const BigFloat eps2 = pow(BigFloat(2.0, p), BigFloat(-2.0 * static_cast<double>(p - 16), p));
  for (int iter = 0; iter < 600; ++iter) {
    bool converged = true;
    for (std::size_t i = 0; i < n; ++i) {
      auto [v, d] = horner(c, z[i], p);
      if (v.re.is_zero() && v.im.is_zero()) continue;
      if (d.re.is_zero() && d.im.is_zero()) {
        z[i].re = z[i].re + BigFloat(1e-3, p);  // critical point: nudge
        converged = false;
        continue;
      }
      const Cx N = v / d;
      Cx s{BigFloat(0.0, p), BigFloat(0.0, p)};
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const Cx diff = z[i] - z[j];
        if (diff.re.is_zero() && diff.im.is_zero()) continue;
        s = s + Cx{BigFloat(1.0, p), BigFloat(0.0, p)} / diff;
      }
      const Cx w = N / (Cx{BigFloat(1.0, p), BigFloat(0.0, p)} - N * s);
      z[i] = z[i] - w;
      if (norm2(w) > eps2 * (BigFloat(1.0, p) + norm2(z[i]))) converged = false;
    }
    if (converged) return;
  }
}

// 2^{-2p}: iterates of real roots drift towards imaginary parts like 2^{-10^6}.
mpq_class tiny(mpfr_prec_t p) {
  mpz_class d;
  mpz_ui_pow_ui(d.get_mpz_t(), 2, static_cast<unsigned long>(2 * p));
  return mpq_class(1, d);
}

mpq_class flush_tiny(const BigFloat& x, mpfr_prec_t p) {
  if (x.is_zero() || mpfr_get_exp(x.raw()) < -2 * p) return 0;
  return x.to_rational();
}

// Disks D(z_i, n·|W_i|) with W_i = f(z_i) / (lc Π_{j≠i} (z_i - z_j)) cover the
// roots, and a disk disjoint from the others holds exactly one root. The boxes
// circumscribe the disks; success requires them to be pairwise disjoint.
std::optional<std::vector<RationalBox>> certify(const ZUni& f, const std::vector<Cx>& z,
                                                mpfr_prec_t p) {
  const std::size_t n = z.size();
  std::vector<mpq_class> re(n), im(n);
  std::vector<ComplexInterval> zi(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (z[i].re.is_nan() || z[i].im.is_nan() || z[i].re.is_inf() || z[i].im.is_inf()) {
      return std::nullopt;
    }
    re[i] = flush_tiny(z[i].re, p);
    im[i] = flush_tiny(z[i].im, p);
    zi[i] = ComplexInterval::from_rat(re[i], im[i], p);
  }
  const Interval lc = Interval::from_int(f.back(), p);
  std::vector<RationalBox> boxes(n);
  for (std::size_t i = 0; i < n; ++i) {
    ComplexInterval den{lc, Interval::from_int(0, p)};
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) den = den * (zi[i] - zi[j]);
    }
    if (den.contains_zero()) return std::nullopt;
    const ComplexInterval W = evaluate(f, zi[i]) / den;
    const BigFloat R = mul(W.abs().hi(), BigFloat(static_cast<double>(n), p), MPFR_RNDU);
    if (R.is_inf() || R.is_nan()) return std::nullopt;
    // enlarging a disk keeps it a cover; tiny radii would only bloat the rationals
    const mpq_class r = std::max(flush_tiny(R, p), tiny(p));
    boxes[i] = {re[i] - r, re[i] + r, im[i] - r, im[i] + r};
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (boxes[i].intersects(boxes[j])) return std::nullopt;
    }
  }
  return boxes;
}

struct Isolation {
  std::vector<RationalBox> boxes;
  mpfr_prec_t prec = 0;
};

Isolation isolate_raw(const ZUni& f, mpfr_prec_t p) {
  const int n = degree(f);
  expects(n >= 1, "root isolation of a constant");
  if (n == 1) {
    const mpq_class r(-f[0], f[1]);
    mpq_class c = r;
    c.canonicalize();
    return {{RationalBox{c, c, 0, 0}}, p};
  }
  std::vector<Cx> z;
  for (; p <= kMaxPrec; p *= 2) {
    aberth(f, z, p);
    if (auto boxes = certify(f, z, p)) return {std::move(*boxes), p};
  }
  throw DefectError("root isolation did not converge");
}

void canonical_order(std::vector<RationalBox>& boxes) {
  std::sort(boxes.begin(), boxes.end(),
            [](const RationalBox& a, const RationalBox& b) { return a.re_mid() < b.re_mid(); });
  std::size_t start = 0;
  while (start < boxes.size()) {
    std::size_t end = start + 1;
    mpq_class reach = boxes[start].re_hi;
    while (end < boxes.size() && boxes[end].re_lo <= reach) {
      reach = std::max(reach, boxes[end].re_hi);
      ++end;
    }
    std::sort(boxes.begin() + static_cast<long>(start), boxes.begin() + static_cast<long>(end),
              [](const RationalBox& a, const RationalBox& b) { return a.im_mid() < b.im_mid(); });
    start = end;
  }
}

std::string key_of(const ZUni& f) {
  std::string k;
  for (const auto& c : f) k += c.get_str(16) + ",";
  return k;
}

const Isolation& canonical(const ZUni& f) {
  static std::mutex mu;
  static std::map<std::string, Isolation> cache;
  const std::string key = key_of(f);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  Isolation iso = isolate_raw(f, kIsolatePrec);
  canonical_order(iso.boxes);
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(iso)).first->second;  // map nodes are stable
}

ComplexInterval whole_plane() {
  const Interval all(BigFloat::inf(-1), BigFloat::inf(1));
  return {all, all};
}

ZPoly in_var(const ZUni& f, std::size_t var) {
  ZPoly out(2);
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k] == 0) continue;
    Exponent e(2, 0);
    e[var] = static_cast<std::uint32_t>(k);
    out.add_term(e, f[k]);
  }
  return out;
}

ZUni resultant_y(const ZPoly& a, const ZPoly& b) {
  const ZPoly r = resultant_in(a, b, 1);
  ensures(!r.is_zero(), "vanishing resultant in algebraic arithmetic");
  return uni_from(r.with_nvars(1));
}

}  // namespace

// ---- boxes -----------------------------------------------------------------

bool RationalBox::intersects(const RationalBox& o) const {
  return re_lo <= o.re_hi && o.re_lo <= re_hi && im_lo <= o.im_hi && o.im_lo <= im_hi;
}

bool RationalBox::intersects(const ComplexInterval& z) const {
  const mpfr_prec_t p = std::max(z.re.lo().precision(), kWorkPrec);
  return BigFloat::from_rat(re_lo, MPFR_RNDD, p) <= z.re.hi() &&
         z.re.lo() <= BigFloat::from_rat(re_hi, MPFR_RNDU, p) &&
         BigFloat::from_rat(im_lo, MPFR_RNDD, p) <= z.im.hi() &&
         z.im.lo() <= BigFloat::from_rat(im_hi, MPFR_RNDU, p);
}

ComplexInterval RationalBox::to_interval(mpfr_prec_t prec) const {
  return {Interval(BigFloat::from_rat(re_lo, MPFR_RNDD, prec), BigFloat::from_rat(re_hi, MPFR_RNDU, prec)),
          Interval(BigFloat::from_rat(im_lo, MPFR_RNDD, prec), BigFloat::from_rat(im_hi, MPFR_RNDU, prec))};
}

std::string RationalBox::str(int digits) const {
  auto s = [&](const mpq_class& q) { return BigFloat::from_rat(q).to_string(digits); };
  return "[" + s(re_lo) + ", " + s(re_hi) + "] + i[" + s(im_lo) + ", " + s(im_hi) + "]";
}

std::vector<RationalBox> isolate_roots(const ZUni& f, mpfr_prec_t prec) {
  const Isolation& canon = canonical(f);
  if (prec <= canon.prec || degree(f) == 1) return canon.boxes;
  for (mpfr_prec_t p = prec; p <= kMaxPrec; p *= 2) {
    const Isolation fine = isolate_raw(f, p);
    std::vector<RationalBox> out(canon.boxes.size());
    std::vector<int> hits(canon.boxes.size(), 0);
    bool unique = true;
    for (const auto& b : fine.boxes) {
      std::size_t found = 0, at = 0;
      for (std::size_t k = 0; k < canon.boxes.size(); ++k) {
        if (b.intersects(canon.boxes[k])) {
          ++found;
          at = k;
        }
      }
      if (found != 1) {
        unique = false;
        break;
      }
      out[at] = b;
      ++hits[at];
    }
    if (unique && std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; })) return out;
  }
  throw DefectError("could not refine root boxes consistently");
}

// ---- algebraic numbers -----------------------------------------------------

AlgebraicNumber AlgebraicNumber::rational(const mpq_class& q0) {
  mpq_class q = q0;
  q.canonicalize();
  return AlgebraicNumber(ZUni{-q.get_num(), q.get_den()}, 0, RationalBox{q, q, 0, 0});
}

AlgebraicNumber AlgebraicNumber::root_of(const ZUni& irreducible, std::size_t index) {
  const ZUni P = primitive_of(irreducible);
  expects(effkit::degree(P) >= 1 && irreducible_over_q(P), "minimal polynomial must be irreducible");
  const auto& boxes = isolate_roots(P);
  expects(index < boxes.size(), "root index out of range");
  return AlgebraicNumber(P, index, boxes[index]);
}

bool AlgebraicNumber::is_zero() const { return degree() == 1 && minpoly_[0] == 0; }

std::optional<mpq_class> AlgebraicNumber::as_rational() const {
  if (degree() != 1) return std::nullopt;
  mpq_class q(-minpoly_[0], minpoly_[1]);
  q.canonicalize();
  return q;
}

ComplexInterval AlgebraicNumber::enclosure(mpfr_prec_t prec) const {
  const mpfr_prec_t p = std::max(prec, kWorkPrec);
  if (degree() == 1) return box_.to_interval(p);
  return isolate_roots(minpoly_, prec)[index_].to_interval(p);
}

std::string AlgebraicNumber::str() const {
  if (auto q = as_rational()) return q->get_str();
  std::ostringstream os;
  os << "root " << index_ << " of " << to_string(to_poly(minpoly_), VarNames{"x", true}) << " ≈ "
     << BigFloat::from_rat(box_.re_mid()).to_string(12);
  // a box meeting the real axis holds a real root (a conjugate pair would overlap)
  if (box_.im_lo > 0 || box_.im_hi < 0) os << " + " << BigFloat::from_rat(box_.im_mid()).to_string(12) << "i";
  return os.str();
}

AlgebraicNumber identify_root(const ZUni& R, const std::function<ComplexInterval(mpfr_prec_t)>& enclose) {
  expects(degree(R) >= 1, "identify_root needs a nonconstant polynomial");
  const auto fac = factor(R);
  for (mpfr_prec_t p = kIsolatePrec; p <= kMaxPrec; p *= 2) {
    const ComplexInterval E = enclose(p);
    std::vector<std::pair<const ZUni*, std::size_t>> cands;
    for (const auto& [g, e] : fac.factors) {
      const auto boxes = isolate_roots(g, p);
      for (std::size_t k = 0; k < boxes.size(); ++k) {
        if (boxes[k].intersects(E)) cands.emplace_back(&g, k);
      }
    }
    ensures(!cands.empty(), "no root of the annihilating polynomial in the enclosure");
    if (cands.size() == 1) {
      const ZUni& g = *cands[0].first;
      return AlgebraicNumber(g, cands[0].second, isolate_roots(g)[cands[0].second]);
    }
  }
  throw DefectError("could not separate the roots of the annihilating polynomial");
}

std::vector<AlgebraicNumber> roots_of(const ZUni& f) {
  expects(degree(f) >= 1, "roots of a constant");
  const ZUni sq = squarefree_part(f);
  const auto fac = factor(sq);
  const std::size_t n = static_cast<std::size_t>(degree(sq));
  for (mpfr_prec_t p = kIsolatePrec; p <= kMaxPrec; p *= 2) {
    const auto fboxes = isolate_roots(sq, p);
    std::vector<std::optional<AlgebraicNumber>> slot(n);
    bool ok = true;
    for (const auto& [g, e] : fac.factors) {
      const auto gboxes = isolate_roots(g, p);
      for (std::size_t k = 0; k < gboxes.size() && ok; ++k) {
        std::size_t found = 0, at = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (gboxes[k].intersects(fboxes[i])) {
            ++found;
            at = i;
          }
        }
        if (found != 1 || slot[at]) {
          ok = false;
        } else {
          slot[at] = AlgebraicNumber::root_of(g, k);
        }
      }
    }
    if (!ok) continue;
    std::vector<AlgebraicNumber> out;
    for (auto& s : slot) {
      ensures(s.has_value(), "a root was not matched to a factor");
      out.push_back(std::move(*s));
    }
    return out;
  }
  throw DefectError("could not match factor roots");
}

AlgebraicNumber operator-(const AlgebraicNumber& a) {
  if (auto q = a.as_rational()) return AlgebraicNumber::rational(-*q);
  ZUni P = a.minpoly();
  for (std::size_t k = 1; k < P.size(); k += 2) P[k] = -P[k];
  return identify_root(P, [&](mpfr_prec_t p) {
    const ComplexInterval e = a.enclosure(p);
    return ComplexInterval{-e.re, -e.im};
  });
}

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  const auto qa = a.as_rational(), qb = b.as_rational();
  if (qa && qb) return AlgebraicNumber::rational(*qa + *qb);
  // Res_Y(A(Y), B(X - Y))
  const ZPoly X = ZPoly::variable(2, 0), Y = ZPoly::variable(2, 1);
  ZPoly shifted(2);
  const ZUni& B = b.minpoly();
  for (std::size_t k = B.size(); k-- > 0;) shifted = shifted * (X - Y) + ZPoly::constant(2, B[k]);
  const ZUni R = resultant_y(in_var(a.minpoly(), 1), shifted);
  return identify_root(R, [&](mpfr_prec_t p) { return a.enclosure(p) + b.enclosure(p); });
}

AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a + (-b); }

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_zero() || b.is_zero()) return AlgebraicNumber::rational(0);
  const auto qa = a.as_rational(), qb = b.as_rational();
  if (qa && qb) return AlgebraicNumber::rational(*qa * *qb);
  // Res_Y(A(Y), Y^m B(X/Y))
  const ZUni& B = b.minpoly();
  const std::size_t m = B.size() - 1;
  ZPoly homog(2);
  for (std::size_t k = 0; k <= m; ++k) {
    if (B[k] != 0) homog.add_term(Exponent{static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(m - k)}, B[k]);
  }
  const ZUni R = resultant_y(in_var(a.minpoly(), 1), homog);
  return identify_root(R, [&](mpfr_prec_t p) { return a.enclosure(p) * b.enclosure(p); });
}

AlgebraicNumber inverse(const AlgebraicNumber& a) {
  expects(!a.is_zero(), "inverse of zero");
  if (auto q = a.as_rational()) return AlgebraicNumber::rational(1 / *q);
  ZUni P(a.minpoly().rbegin(), a.minpoly().rend());
  return identify_root(P, [&](mpfr_prec_t p) {
    const ComplexInterval e = a.enclosure(p);
    if (e.contains_zero()) return whole_plane();
    return ComplexInterval::from_rat(1, 0, std::max(p, kWorkPrec)) / e;
  });
}

AlgebraicNumber evaluate(const QUni& c0, const AlgebraicNumber& theta) {
  const QUni c = trimmed(c0);
  if (degree(c) <= 0) return AlgebraicNumber::rational(c.empty() ? mpq_class(0) : c[0]);
  if (auto q = theta.as_rational()) return AlgebraicNumber::rational(evaluate(c, *q));
  mpz_class den = 1;
  for (const auto& a : c) den = lcm(den, mpz_class(a.get_den()));
  ZPoly lin(2);  // den·X - den·c(Y)
  lin.add_term(Exponent{1, 0}, den);
  for (std::size_t k = 0; k < c.size(); ++k) {
    const mpq_class v = c[k] * den;
    if (v != 0) lin.add_term(Exponent{0, static_cast<std::uint32_t>(k)}, -mpz_class(v));
  }
  const ZUni R = resultant_y(in_var(theta.minpoly(), 1), lin);
  return identify_root(R, [&](mpfr_prec_t p) { return evaluate(c, theta.enclosure(p)); });
}

Interval mahler_log(const ZUni& f) {
  expects(!trimmed(f).empty(), "Mahler measure of zero");
  const auto fac = factor(trimmed(f));
  Interval total = log(Interval::from_int(abs(fac.unit)));
  const Interval one = Interval::from_int(1);
  for (const auto& [g, e] : fac.factors) {
    Interval m = log(Interval::from_int(g.back()));
    for (const auto& b : isolate_roots(g)) m = m + log(max(one, b.to_interval().abs()));
    total = total + m * Interval::from_int(e);
  }
  return total;
}

Interval alg_height_interval(const AlgebraicNumber& a) {
  return mahler_log(a.minpoly()) / Interval::from_int(a.degree());
}

LogValue alg_height(const AlgebraicNumber& a) {
  return LogValue::from_value(max(BigFloat(0.0), alg_height_interval(a).hi()));
}

}  // namespace effkit
