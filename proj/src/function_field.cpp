#include "effkit/function_field.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "effkit/errors.hpp"
#include "effkit/parallel.hpp"
#include "effkit/poly_algo.hpp"

namespace effkit {

namespace {

QUni scaled(QUni f, const mpq_class& c) {
  for (auto& a : f) a *= c;
  return trimmed(std::move(f));
}

QUni pow(const QUni& f, unsigned e) {
  QUni r{mpq_class(1)};
  for (unsigned i = 0; i < e; ++i) r = r * f;
  return r;
}

// Exact quotient a / b over Q, or empty optional when b ∤ a.
std::optional<QUni> divides(const QUni& a, const QUni& b) {
  auto [q, r] = divmod(a, b);
  if (!r.empty()) return std::nullopt;
  return q;
}

// Multiplicity of the irreducible p in f ≠ 0; f is replaced by the cofactor.
int strip(QUni& f, const QUni& p) {
  int k = 0;
  while (degree(f) >= degree(p)) {
    auto q = divides(f, p);
    if (!q) break;
    f = std::move(*q);
    ++k;
  }
  return k;
}

QPoly to_qpoly(const QUni& f) {
  QPoly p(1);
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k] != 0) p.add_term(Exponent{static_cast<std::uint32_t>(k)}, f[k]);
  }
  return p;
}

QUni from_qpoly(const QPoly& f) {
  expects(f.nvars() <= 1, "expected a polynomial in z");
  QUni out;
  for (const auto& [e, c] : f.terms()) {
    const std::size_t k = e.empty() ? 0 : e[0];
    if (out.size() <= k) out.resize(k + 1);
    out[k] = c;
  }
  return trimmed(std::move(out));
}

std::string text(const QUni& f) { return to_string(to_qpoly(f), VarNames{"z", true}); }

// Integer primitive form of a polynomial over Q.
ZUni primitive(const QUni& f) { return primitive_of(f); }

}  // namespace

QUni monic(const QUni& f) {
  if (f.empty()) return f;
  return scaled(f, 1 / mpq_class(f.back()));
}

QUni monic_gcd(const QUni& a, const QUni& b) {
  QUni x = trimmed(a), y = trimmed(b);
  while (!y.empty()) {
    QUni r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

FFElement::FFElement(QUni num, QUni den) : num_(trimmed(std::move(num))), den_(trimmed(std::move(den))) {
  expects(!den_.empty(), "zero denominator");
  if (num_.empty()) {
    den_ = {mpq_class(1)};
    return;
  }
  const QUni g = monic_gcd(num_, den_);
  if (degree(g) > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  const mpq_class lc = den_.back();
  num_ = scaled(num_, 1 / lc);
  den_ = scaled(den_, 1 / lc);
}

FFElement FFElement::constant(const mpq_class& c) { return FFElement(QUni{c}, QUni{mpq_class(1)}); }

FFElement FFElement::from_text(const std::string& num, const std::string& den) {
  return FFElement(from_qpoly(parse_qpoly(num, 1)), from_qpoly(parse_qpoly(den, 1)));
}

FFElement operator+(const FFElement& a, const FFElement& b) {
  return FFElement(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
FFElement operator-(const FFElement& a, const FFElement& b) {
  return FFElement(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
FFElement operator*(const FFElement& a, const FFElement& b) {
  return FFElement(a.num_ * b.num_, a.den_ * b.den_);
}
FFElement operator/(const FFElement& a, const FFElement& b) {
  expects(!b.is_zero(), "division by zero in Q(z)");
  return FFElement(a.num_ * b.den_, a.den_ * b.num_);
}

std::string FFElement::str() const {
  if (degree(den_) == 0) return text(num_);
  return "(" + text(num_) + ")/(" + text(den_) + ")";
}

Place infinite_place() { return Place{true, {}}; }

std::string Place::str() const { return infinite ? "inf" : text(p); }

Place parse_place(const std::string& raw) {
  std::string s;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s == "inf" || s == "oo" || s == "∞") return infinite_place();
  QUni p;
  try {
    p = from_qpoly(parse_qpoly(s, 1));
  } catch (const PreconditionViolation& e) {
    throw BadInput("place '" + raw + "': " + e.what());
  }
  if (degree(p) < 1) throw BadInput("place '" + raw + "' is constant");
  if (!irreducible_over_q(primitive(p))) throw BadInput("place '" + raw + "' is reducible over Q");
  return Place{false, monic(p)};
}

std::vector<Place> parse_places(const std::string& list) {
  std::vector<Place> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Place v = parse_place(item);
    if (std::find(out.begin(), out.end(), v) != out.end()) {
      throw BadInput("place '" + item + "' listed twice");
    }
    out.push_back(std::move(v));
  }
  if (out.empty()) throw BadInput("empty place set");
  return out;
}

int ff_valuation(const FFElement& x, const Place& v) {
  expects(!x.is_zero(), "valuation of zero");
  if (v.infinite) return degree(x.den()) - degree(x.num());
  QUni n = x.num(), d = x.den();
  return strip(n, v.p) - strip(d, v.p);
}

long weighted_valuation_sum(const FFElement& x) {
  expects(!x.is_zero(), "valuation of zero");
  long sum = ff_valuation(x, infinite_place());
  for (const QUni* part : {&x.num(), &x.den()}) {
    if (degree(*part) <= 0) continue;
    for (const auto& [p, e] : factor(primitive(*part)).factors) {
      const Place v{false, monic(to_rational(p))};
      // each place is counted once, from the side where it occurs
      sum += static_cast<long>(v.degree()) * ff_valuation(x, v);
    }
  }
  return sum;
}

long ff_height(const std::vector<QUni>& tuple) {
  std::vector<ZUni> ints;
  for (const auto& f : tuple) {
    if (!trimmed(f).empty()) ints.push_back(primitive(f));
  }
  expects(!ints.empty(), "height of the zero tuple");
  // clearing denominators and contents rescales by Q*, which H ignores
  ZUni g = ints.front();
  for (const auto& f : ints) g = gcd(g, f);
  long h = 0;
  for (const auto& f : ints) h = std::max<long>(h, degree(f) - degree(g));
  return h;
}

long ff_height(const FFElement& x) {
  return std::max(degree(x.num()), degree(x.den()));
}

long mason_bound(long s, long g) {
  expects(s >= 1 && g >= 0, "need |S| ≥ 1 and g ≥ 0");
  return s + 2 * g - 2;
}

long genus_bound(long d, long m, long maxdeg) {
  expects(d >= 1, "extension degree must be positive");
  return (d - 1) * m * maxdeg;
}

bool is_s_unit(const FFElement& x, const std::vector<Place>& S) {
  if (x.is_zero()) return false;
  for (QUni part : {x.num(), x.den()}) {
    for (const auto& v : S) {
      if (!v.infinite) strip(part, v.p);
    }
    if (degree(part) != 0) return false;
  }
  return true;
}

namespace {

// Exponent vectors e ∈ Z^k with Σ max(0, e_i)·w_i ≤ B and Σ max(0, -e_i)·w_i ≤ B.
void signed_box(const std::vector<int>& w, long B, std::vector<std::vector<int>>& out) {
  std::vector<int> e(w.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, long pos, long neg) -> void {
    if (i == w.size()) {
      out.push_back(e);
      return;
    }
    for (int k = -static_cast<int>((B - neg) / w[i]); k <= (B - pos) / w[i]; ++k) {
      e[i] = k;
      self(self, i + 1, pos + std::max(k, 0) * w[i], neg + std::max(-k, 0) * w[i]);
    }
    e[i] = 0;
  };
  rec(rec, 0, 0, 0);
}

// Nonnegative vectors with Σ f_i·w_i ≤ B.
void nonneg_box(const std::vector<int>& w, long B, std::vector<std::vector<int>>& out) {
  std::vector<int> f(w.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, long used) -> void {
    if (i == w.size()) {
      out.push_back(f);
      return;
    }
    for (int k = 0; used + static_cast<long>(k) * w[i] <= B; ++k) {
      f[i] = k;
      self(self, i + 1, used + static_cast<long>(k) * w[i]);
    }
    f[i] = 0;
  };
  rec(rec, 0, 0);
}

mpq_class at(const QUni& f, std::size_t i) { return i < f.size() ? f[i] : mpq_class(0); }

// c, d ∈ Q with M = c·N + d·T, both nonzero; nullopt otherwise.
std::optional<std::pair<mpq_class, mpq_class>> combine(const QUni& M, const QUni& N, const QUni& T) {
  const std::size_t n = std::max({M.size(), N.size(), T.size()});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const mpq_class det = at(N, i) * at(T, j) - at(N, j) * at(T, i);
      if (det == 0) continue;
      mpq_class c = (at(M, i) * at(T, j) - at(M, j) * at(T, i)) / det;
      mpq_class d = (at(N, i) * at(M, j) - at(N, j) * at(M, i)) / det;
      if (c == 0 || d == 0) return std::nullopt;
      if (scaled(N, c) + scaled(T, d) != M) return std::nullopt;
      return std::make_pair(c, d);
    }
  }
  return std::nullopt;  // N and T proportional: only the excluded trivial case
}

}  // namespace

FFSolveResult solve_ff_sunit(const std::vector<Place>& S) {
  expects(std::any_of(S.begin(), S.end(), [](const Place& v) { return v.infinite; }),
          "the infinite place must lie in S");
  FFSolveResult res;
  long total = 0;
  std::vector<QUni> primes;
  std::vector<int> weights;
  for (const auto& v : S) {
    total += v.degree();
    if (!v.infinite) {
      primes.push_back(v.p);
      weights.push_back(v.degree());
    }
  }
  res.bound = mason_bound(total, 0);
  if (res.bound <= 0) return res;  // x ∈ Q* is forced

  std::vector<std::vector<int>> box;
  signed_box(weights, res.bound, box);
  res.exponent_vectors = box.size();

  std::mutex mu;
  parallel_for(box.size(), [&](std::size_t idx) {
    const auto& e = box[idx];
    if (std::all_of(e.begin(), e.end(), [](int k) { return k == 0; })) return;
    QUni N{mpq_class(1)}, M{mpq_class(1)};
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) N = N * pow(primes[i], e[i]);
      if (e[i] < 0) M = M * pow(primes[i], -e[i]);
    }
    // 1 - c·N/M = d·T/M with T monic and supported on S
    std::vector<std::vector<int>> tails;
    nonneg_box(weights, std::max(degree(N), degree(M)), tails);
    for (const auto& f : tails) {
      QUni T{mpq_class(1)};
      for (std::size_t i = 0; i < f.size(); ++i) T = T * pow(primes[i], f[i]);
      auto cd = combine(M, N, T);
      if (!cd) continue;
      FFElement x(scaled(N, cd->first), M), y(scaled(T, cd->second), M);
      ensures(x + y == FFElement::constant(1), "S-unit solution fails x + y = 1");
      ensures(is_s_unit(x, S) && is_s_unit(y, S), "solution outside the S-units");
      if (x.is_constant() || y.is_constant()) continue;
      FFSolution sol{x, y, std::max(ff_height(x), ff_height(y))};
      ensures(sol.height <= res.bound, "solution exceeds the Mason bound");
      std::lock_guard lock(mu);
      res.solutions.push_back(std::move(sol));
    }
  });
  std::sort(res.solutions.begin(), res.solutions.end(), [](const auto& a, const auto& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.x.str() < b.x.str();
  });
  res.solutions.erase(std::unique(res.solutions.begin(), res.solutions.end(),
                                  [](const auto& a, const auto& b) { return a.x == b.x; }),
                      res.solutions.end());
  return res;
}

RootHeightCheck root_height_sum(const std::vector<FFElement>& roots) {
  // coefficients of Π (X - y_i), lowest first
  std::vector<FFElement> F{FFElement::constant(1)};
  RootHeightCheck out;
  for (const auto& y : roots) {
    std::vector<FFElement> next(F.size() + 1);
    for (std::size_t k = 0; k < F.size(); ++k) {
      next[k + 1] = next[k + 1] + F[k];
      next[k] = next[k] - F[k] * y;
    }
    F = std::move(next);
    out.height_sum += ff_height(y);
  }
  for (const auto& c : F) {
    expects(degree(c.den()) == 0, "coefficient " + c.str() + " is not a polynomial in z");
    out.max_coeff_degree = std::max<long>(out.max_coeff_degree, std::max(degree(c.num()), 0));
  }
  ensures(out.height_sum == out.max_coeff_degree, "root heights disagree with coefficient degrees");
  return out;
}

}  // namespace effkit
