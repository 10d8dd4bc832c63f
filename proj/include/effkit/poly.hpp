#pragma once

#include <gmpxx.h>

#include <climits>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "effkit/errors.hpp"

namespace effkit {

using Exponent = std::vector<std::uint32_t>;

// Total degree of the zero polynomial; compares below every real degree.
inline constexpr int kDegZero = INT_MIN;

int total_degree(const Exponent& e);

// Degree-lexicographic comparison of monomials (ascending).
bool deglex_less(const Exponent& a, const Exponent& b);

// Sparse polynomial in nvars variables over R (mpz_class or mpq_class).
// Terms are keyed lexicographically on the exponent vector, so the last entry
// is the leading term for the lex order X1 > X2 > ...
template <class R>
class Poly {
 public:
  using Coeff = R;
  using Terms = std::map<Exponent, R>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const R& c) {
    Poly p(nvars);
    if (c != 0) p.terms_.emplace(Exponent(nvars, 0), c);
    return p;
  }
  static Poly variable(std::size_t nvars, std::size_t i, std::uint32_t power = 1) {
    expects(i < nvars, "variable index out of range");
    Exponent e(nvars, 0);
    e[i] = power;
    Poly p(nvars);
    p.terms_.emplace(std::move(e), R(1));
    return p;
  }
  static Poly monomial(Exponent e, const R& c) {
    Poly p(e.size());
    if (c != 0) p.terms_.emplace(std::move(e), c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }

  int degree() const {
    int d = kDegZero;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }
  int degree_in(std::size_t var) const {
    int d = kDegZero;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
  }
  R coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? R(0) : it->second;
  }
  R constant_term() const { return coeff(Exponent(nvars_, 0)); }
  const std::pair<const Exponent, R>& leading_term() const {
    expects(!terms_.empty(), "leading term of the zero polynomial");
    return *terms_.rbegin();
  }
  const R& leading_coeff() const { return leading_term().second; }

  void add_term(const Exponent& e, const R& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    check_nvars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check_nvars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, R(-c));
    return *this;
  }
  Poly& operator*=(const R& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= s;
    }
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const R& s) { return a *= s; }
  friend Poly operator*(const R& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_nvars(b);
    Poly r(a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, R(ca * cb));
      }
    }
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Poly pow(unsigned k) const {
    Poly result = constant(nvars_, R(1)), base = *this;
    while (k > 0) {
      if (k & 1U) result *= base;
      k >>= 1U;
      if (k > 0) base *= base;
    }
    return result;
  }

  // Multiply by the monomial X^e.
  Poly shifted(const Exponent& e) const {
    Poly r(nvars_);
    Exponent f(nvars_);
    for (const auto& [ea, c] : terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) f[i] = ea[i] + e[i];
      r.terms_.emplace_hint(r.terms_.end(), f, c);
    }
    return r;
  }

  // Replace X_i by vals[i]; all vals share one variable count (the result's).
  Poly substitute(const std::vector<Poly>& vals) const {
    expects(vals.size() == nvars_, "substitute needs one value per variable");
    std::size_t n = vals.empty() ? 0 : vals.front().nvars();
    Poly r(n);
    std::vector<std::vector<Poly>> powers(nvars_);
    for (const auto& [e, c] : terms_) {
      Poly t = constant(n, c);
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(constant(n, R(1)));
        while (pw.size() <= e[i]) pw.push_back(pw.back() * vals[i]);
        t *= pw[e[i]];
      }
      r += t;
    }
    return r;
  }

  R evaluate(const std::vector<R>& point) const {
    expects(point.size() == nvars_, "evaluation point has the wrong length");
    R sum = 0;
    for (const auto& [e, c] : terms_) {
      R t = c;
      for (std::size_t i = 0; i < nvars_; ++i) {
        for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
      }
      sum += t;
    }
    return sum;
  }

  Poly derivative(std::size_t var) const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponent f = e;
      --f[var];
      r.add_term(f, R(c * e[var]));
    }
    return r;
  }

  // Same polynomial viewed in n variables; dropped variables must not occur.
  Poly with_nvars(std::size_t n) const {
    Poly r(n);
    for (const auto& [e, c] : terms_) {
      Exponent f(n, 0);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (i < n) {
          f[i] = e[i];
        } else {
          expects(e[i] == 0, "with_nvars would drop an occurring variable");
        }
      }
      r.terms_.emplace(std::move(f), c);
    }
    return r;
  }

  // Rename variables: variable i becomes variable map[i] in a ring of n variables.
  Poly remap(const std::vector<std::size_t>& map, std::size_t n) const {
    expects(map.size() == nvars_, "remap needs one target per variable");
    Poly r(n);
    for (const auto& [e, c] : terms_) {
      Exponent f(n, 0);
      for (std::size_t i = 0; i < nvars_; ++i) f[map[i]] += e[i];
      r.add_term(f, c);
    }
    return r;
  }

 private:
  void check_nvars(const Poly& o) const {
    expects(nvars_ == o.nvars_, "polynomials live in different rings");
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

using ZPoly = Poly<mpz_class>;
using QPoly = Poly<mpq_class>;

extern template class Poly<mpz_class>;
extern template class Poly<mpq_class>;

QPoly to_rational(const ZPoly& p);
// Multiply by the lcm of denominators; returns the integer polynomial and that lcm.
std::pair<ZPoly, mpz_class> clear_denominators(const QPoly& p);
// Exact conversion; throws BadInput when a coefficient is not an integer.
ZPoly to_integer(const QPoly& p);

// All monomials in n variables of total degree ≤ d, in ascending degree-lex order.
std::vector<Exponent> monomials_up_to(std::size_t n, int d);

// Deterministic polynomial order: degree, then terms compared from the top in
// degree-lex order (monomial first, then coefficient).
bool deglex_less(const ZPoly& a, const ZPoly& b);

}  // namespace effkit
