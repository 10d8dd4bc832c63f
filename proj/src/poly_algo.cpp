#include "effkit/poly_algo.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "effkit/bigfloat.hpp"

namespace effkit {

template class Poly<mpz_class>;
template class Poly<mpq_class>;

int total_degree(const Exponent& e) {
  long s = 0;
  for (auto v : e) s += v;
  return static_cast<int>(s);
}

bool deglex_less(const Exponent& a, const Exponent& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

QPoly to_rational(const ZPoly& p) {
  QPoly r(p.nvars());
  for (const auto& [e, c] : p.terms()) r.add_term(e, mpq_class(c));
  return r;
}

std::pair<ZPoly, mpz_class> clear_denominators(const QPoly& p) {
  mpz_class l = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    mpq_class v = c * l;
    r.add_term(e, v.get_num());
  }
  return {r, l};
}

ZPoly to_integer(const QPoly& p) {
  ZPoly r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (c.get_den() != 1) throw BadInput("polynomial has a non-integer coefficient");
    r.add_term(e, c.get_num());
  }
  return r;
}

namespace {
void monomials_of_degree(std::size_t n, int d, std::size_t pos, Exponent& cur,
                         std::vector<Exponent>& out) {
  if (pos + 1 == n) {
    cur[pos] = static_cast<std::uint32_t>(d);
    out.push_back(cur);
    return;
  }
  for (int k = 0; k <= d; ++k) {
    cur[pos] = static_cast<std::uint32_t>(k);
    monomials_of_degree(n, d - k, pos + 1, cur, out);
  }
}
}  // namespace

std::vector<Exponent> monomials_up_to(std::size_t n, int d) {
  std::vector<Exponent> out;
  if (d < 0) return out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  for (int k = 0; k <= d; ++k) {
    std::vector<Exponent> level;
    Exponent cur(n, 0);
    monomials_of_degree(n, k, 0, cur, level);
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

bool deglex_less(const ZPoly& a, const ZPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  auto sorted = [](const ZPoly& p) {
    std::vector<std::pair<Exponent, mpz_class>> v(p.terms().begin(), p.terms().end());
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
      return deglex_less(y.first, x.first);
    });
    return v;
  };
  auto ta = sorted(a), tb = sorted(b);
  for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
    if (ta[i].first != tb[i].first) return deglex_less(ta[i].first, tb[i].first);
    if (ta[i].second != tb[i].second) return ta[i].second < tb[i].second;
  }
  return ta.size() < tb.size();
}

mpz_class max_abs_coeff(const ZPoly& f) {
  mpz_class m = 0;
  for (const auto& [e, c] : f.terms()) {
    if (abs(c) > m) m = abs(c);
  }
  return m;
}

mpz_class content(const ZPoly& f) {
  mpz_class g = 0;
  for (const auto& [e, c] : f.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive_part(const ZPoly& f) {
  mpz_class g = content(f);
  if (g <= 1) return f;
  ZPoly r(f.nvars());
  for (const auto& [e, c] : f.terms()) r.add_term(e, mpz_class(c / g));
  return r;
}

// ---- sizes ------------------------------------------------------------------

mpz_class floor_exp(long k) {
  expects(k >= 0, "floor_exp of a negative exponent");
  if (k == 0) return 1;
  mpfr_prec_t prec = 64 + 2 * static_cast<mpfr_prec_t>(k);
  BigFloat x(static_cast<double>(k), prec);
  return exp(x, MPFR_RNDD).floor();
}

double Size::to_double() const {
  if (is_log()) return log_int(height_).to_double();
  return static_cast<double>(int_);
}

std::strong_ordering operator<=>(const Size& a, const Size& b) {
  if (!a.is_log() && !b.is_log()) return a.int_ <=> b.int_;
  if (a.is_log() && b.is_log()) return cmp(a.height_, b.height_) <=> 0;
  // log H against an integer n: log H < n iff H ≤ floor(e^n) (e^n is irrational).
  if (a.is_log()) {
    return (a.height_ <= floor_exp(b.int_)) ? std::strong_ordering::less
                                             : std::strong_ordering::greater;
  }
  return (b.height_ <= floor_exp(a.int_)) ? std::strong_ordering::greater
                                           : std::strong_ordering::less;
}

SizeTriple poly_measures(const ZPoly& f) {
  SizeTriple t;
  t.deg = f.degree();
  t.height = max_abs_coeff(f);
  long base = std::max(1, t.deg);
  t.s = (t.height > floor_exp(base)) ? Size::of_log(t.height) : Size::of_int(base);
  return t;
}

// ---- division and gcd -------------------------------------------------------

namespace {
template <class R>
std::optional<Poly<R>> exact_divide_impl(const Poly<R>& a, const Poly<R>& b) {
  expects(!b.is_zero(), "division by the zero polynomial");
  expects(a.nvars() == b.nvars(), "division across different rings");
  const std::size_t n = a.nvars();
  Poly<R> q(n), r = a;
  const Exponent lb = b.leading_term().first;
  const R cb = b.leading_term().second;
  while (!r.is_zero()) {
    const auto& lt = r.leading_term();
    Exponent e(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (lt.first[i] < lb[i]) return std::nullopt;
      e[i] = lt.first[i] - lb[i];
    }
    R c;
    if constexpr (std::is_same_v<R, mpz_class>) {
      if (!mpz_divisible_p(lt.second.get_mpz_t(), cb.get_mpz_t())) return std::nullopt;
      mpz_divexact(c.get_mpz_t(), lt.second.get_mpz_t(), cb.get_mpz_t());
    } else {
      c = lt.second / cb;
    }
    q.add_term(e, c);
    r -= b.shifted(e) * c;
  }
  return q;
}

ZPoly content_in(const ZPoly& f, std::size_t var) {
  return multipoly_gcd(coefficients_in(f, var));
}

ZPoly primitive_in(const ZPoly& f, std::size_t var) {
  ZPoly c = content_in(f, var);
  auto q = exact_divide(f, c);
  ensures(q.has_value(), "content does not divide its polynomial");
  return *q;
}

ZPoly gcd_rec(const ZPoly& f, const ZPoly& g) {
  const std::size_t n = f.nvars();
  if (f.is_zero()) return sign_normalize(g);
  if (g.is_zero()) return sign_normalize(f);
  int var = -1;
  for (std::size_t i = n; i-- > 0;) {
    if (f.degree_in(i) > 0 || g.degree_in(i) > 0) {
      var = static_cast<int>(i);
      break;
    }
  }
  if (var < 0) {
    mpz_class a = f.constant_term(), b = g.constant_term(), c;
    mpz_gcd(c.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return ZPoly::constant(n, c);
  }
  const auto v = static_cast<std::size_t>(var);
  ZPoly cf = content_in(f, v), cg = content_in(g, v);
  ZPoly c = gcd_rec(cf, cg);
  ZPoly a = *exact_divide(f, cf), b = *exact_divide(g, cg);
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  ZPoly prim = ZPoly::constant(n, mpz_class(1));
  while (true) {
    if (b.degree_in(v) == 0) break;  // primitive and free of X_v: a unit
    ZPoly r = pseudo_remainder(a, b, v);
    if (r.is_zero()) {
      prim = b;
      break;
    }
    a = std::move(b);
    b = primitive_in(r, v);
  }
  return sign_normalize(c * prim);
}
}  // namespace

std::optional<ZPoly> exact_divide(const ZPoly& a, const ZPoly& b) { return exact_divide_impl(a, b); }
std::optional<QPoly> exact_divide(const QPoly& a, const QPoly& b) { return exact_divide_impl(a, b); }

ZPoly sign_normalize(const ZPoly& f) {
  if (!f.is_zero() && f.leading_coeff() < 0) return -f;
  return f;
}

std::vector<ZPoly> coefficients_in(const ZPoly& f, std::size_t var) {
  int d = f.degree_in(var);
  std::vector<ZPoly> cs(d < 0 ? 0 : static_cast<std::size_t>(d) + 1, ZPoly(f.nvars()));
  for (const auto& [e, c] : f.terms()) {
    Exponent g = e;
    g[var] = 0;
    cs[e[var]].add_term(g, c);
  }
  return cs;
}

ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b, std::size_t var) {
  const std::size_t n = a.nvars();
  int db = b.degree_in(var);
  expects(db >= 0, "pseudo-remainder by zero");
  std::vector<ZPoly> bc = coefficients_in(b, var);
  const ZPoly& lb = bc.back();
  ZPoly r = a;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    int dr = r.degree_in(var);
    ZPoly lr = coefficients_in(r, var).back();
    Exponent shift(n, 0);
    shift[var] = static_cast<std::uint32_t>(dr - db);
    r = lb * r - (lr * b).shifted(shift);
  }
  return r;
}

ZPoly multipoly_gcd(const ZPoly& f, const ZPoly& g) {
  expects(f.nvars() == g.nvars(), "gcd across different rings");
  expects(!(f.is_zero() && g.is_zero()), "gcd of two zero polynomials");
  return gcd_rec(f, g);
}

ZPoly multipoly_gcd(const std::vector<ZPoly>& fs) {
  expects(!fs.empty(), "gcd of an empty list");
  ZPoly g(fs.front().nvars());
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    g = g.is_zero() ? sign_normalize(f) : gcd_rec(g, f);
    if (g.is_constant() && abs(g.constant_term()) == 1) break;
  }
  return g;
}

// ---- evaluation -------------------------------------------------------------

EvalResult poly_eval_int(const ZPoly& g, const std::vector<mpz_class>& u) {
  EvalResult r;
  r.value = g.evaluate(u);
  int deg = g.degree();
  mpz_class H = max_abs_coeff(g);
  mpz_class m = 1;
  for (const auto& x : u) m = std::max(m, mpz_class(abs(x)));
  mpz_class mpow = 1;
  if (deg > 0) mpz_pow_ui(mpow.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(deg));
  mpz_class degq = 1;
  if (deg >= 2) mpz_ui_pow_ui(degq.get_mpz_t(), static_cast<unsigned long>(deg), u.size());
  r.stated_bound = degq * H * mpow;
  r.term_count_bound = mpz_class(static_cast<unsigned long>(g.size())) * H * mpow;
  r.within_stated_bound = abs(r.value) <= r.stated_bound;
  return r;
}

// ---- enumeration ------------------------------------------------------------

std::size_t for_each_poly_of_size(std::size_t n, long sigma,
                                  const std::function<void(const ZPoly&)>& visit) {
  if (sigma < 1) return 0;
  const std::vector<Exponent> mons = monomials_up_to(n, static_cast<int>(sigma));
  const long bound = floor_exp(sigma).get_si();
  std::vector<long> digits(mons.size(), -bound);
  // Start from the all-(-bound) vector and run an odometer over [-bound, bound].
  ZPoly cur(n);
  for (std::size_t i = 0; i < mons.size(); ++i) cur.add_term(mons[i], mpz_class(-bound));
  std::size_t count = 0;
  auto set_digit = [&](std::size_t i, long v) {
    cur.add_term(mons[i], mpz_class(v - digits[i]));
    digits[i] = v;
  };
  while (true) {
    if (!cur.is_zero()) {
      visit(cur);
      ++count;
    }
    std::size_t i = 0;
    while (i < mons.size() && digits[i] == bound) {
      set_digit(i, -bound);
      ++i;
    }
    if (i == mons.size()) break;
    set_digit(i, digits[i] + 1);
  }
  return count;
}

std::vector<ZPoly> polys_of_size(std::size_t n, long sigma) {
  std::vector<std::pair<Size, ZPoly>> all;
  for_each_poly_of_size(n, sigma, [&](const ZPoly& f) { all.emplace_back(poly_measures(f).s, f); });
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return deglex_less(a.second, b.second);
  });
  std::vector<ZPoly> out;
  out.reserve(all.size());
  for (auto& [s, f] : all) out.push_back(std::move(f));
  return out;
}

// ---- text form --------------------------------------------------------------

namespace {
class Parser {
 public:
  Parser(const std::string& text, std::size_t nvars) : s_(text), n_(nvars) {}

  QPoly parse() {
    QPoly r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

  // Largest variable index mentioned (ignoring Y); -1 if none. Sets saw_y.
  static long scan_max_index(const std::string& s, bool& saw_y) {
    long mx = -1;
    saw_y = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
      char ch = s[i];
      if (ch == 'Y') {
        saw_y = true;
      } else if (ch == 'X' || ch == 'x' || ch == 'z') {
        std::size_t j = i + 1;
        long idx = 0;
        bool any = false;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
          idx = idx * 10 + (s[j] - '0');
          any = true;
          ++j;
        }
        mx = std::max(mx, any ? idx - 1 : 0L);
      }
    }
    return mx;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw BadInput("polynomial parse error at offset " + std::to_string(pos_) + " (" + why +
                   "): " + s_);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_atom() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'X' || c == 'x' ||
           c == 'z' || c == 'Y';
  }

  QPoly expr() {
    QPoly r(n_);
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek('+')) {
        ++pos_;
      } else if (peek('-')) {
        ++pos_;
        sign = -1;
      } else if (!first) {
        break;
      }
      QPoly t = term();
      if (sign < 0) t = -t;
      r += t;
      first = false;
    }
    return r;
  }

  QPoly term() {
    QPoly r = power();
    while (true) {
      if (peek('*')) {
        ++pos_;
        r *= power();
      } else if (peek('/')) {
        ++pos_;
        QPoly d = power();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        r *= mpq_class(1 / d.constant_term());
      } else if (starts_atom()) {
        r *= power();
      } else {
        break;
      }
    }
    return r;
  }

  QPoly power() {
    QPoly a = atom();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      mpz_class k = number();
      if (k < 0 || k > 100000) fail("bad exponent");
      a = a.pow(static_cast<unsigned>(k.get_ui()));
    }
    return a;
  }

  mpz_class number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  QPoly atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return QPoly::constant(n_, mpq_class(number()));
    if (c == '(') {
      ++pos_;
      QPoly r = expr();
      if (!peek(')')) fail("expected )");
      ++pos_;
      return r;
    }
    if (c == 'Y') {
      ++pos_;
      if (n_ == 0) fail("Y needs a known variable count");
      return QPoly::variable(n_, n_ - 1);
    }
    if (c == 'X' || c == 'x' || c == 'z') {
      ++pos_;
      std::size_t idx = 0;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        mpz_class k = number();
        if (k < 1) fail("variable indices start at 1");
        idx = k.get_ui() - 1;
      }
      if (idx >= n_) fail("variable index exceeds the ring");
      return QPoly::variable(n_, idx);
    }
    fail("unexpected character");
  }

  const std::string& s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

template <class R>
std::string poly_text(const Poly<R>& f, const VarNames& names) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<Exponent, R>> ts(f.terms().begin(), f.terms().end());
  std::sort(ts.begin(), ts.end(),
            [](const auto& a, const auto& b) { return deglex_less(b.first, a.first); });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : ts) {
    R mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.name(i, f.nvars());
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}
}  // namespace

QPoly parse_qpoly(const std::string& text, std::size_t nvars) {
  bool saw_y = false;
  long mx = Parser::scan_max_index(text, saw_y);
  std::size_t n = nvars;
  if (n == 0) {
    if (saw_y) throw BadInput("Y needs an explicit variable count: " + text);
    n = static_cast<std::size_t>(mx + 1);
  }
  return Parser(text, n).parse();
}

ZPoly parse_poly(const std::string& text, std::size_t nvars) {
  return to_integer(parse_qpoly(text, nvars));
}

std::string VarNames::name(std::size_t i, std::size_t nvars) const {
  if (single_bare && nvars == 1) return stem;
  return stem + std::to_string(i + 1);
}

std::string to_string(const ZPoly& f, const VarNames& names) { return poly_text(f, names); }
std::string to_string(const QPoly& f, const VarNames& names) { return poly_text(f, names); }

}  // namespace effkit
