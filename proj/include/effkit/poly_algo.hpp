#pragma once

#include <gmpxx.h>

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "effkit/log_value.hpp"
#include "effkit/poly.hpp"

namespace effkit {

// max |coefficient|, exact; 0 for the zero polynomial.
mpz_class max_abs_coeff(const ZPoly& f);
// gcd of the coefficients, positive; 0 for the zero polynomial.
mpz_class content(const ZPoly& f);
ZPoly primitive_part(const ZPoly& f);

// The size s(f) = max(1, deg f, log H(f)) kept exactly: either an integer or
// the logarithm of an integer, with comparisons done without floats.
class Size {
 public:
  static Size of_int(long v) { return Size(v, 0); }
  static Size of_log(const mpz_class& height) { return Size(0, height); }

  bool is_log() const { return height_ != 0; }
  long int_value() const { return int_; }
  const mpz_class& height() const { return height_; }
  double to_double() const;

  friend std::strong_ordering operator<=>(const Size& a, const Size& b);
  friend bool operator==(const Size& a, const Size& b) { return (a <=> b) == 0; }

 private:
  Size(long v, mpz_class h) : int_(v), height_(std::move(h)) {}
  long int_;
  mpz_class height_;  // nonzero iff the size is log(height_)
};

// floor(e^k) for k ≥ 0, exact.
mpz_class floor_exp(long k);

struct SizeTriple {
  int deg = kDegZero;  // kDegZero for the zero polynomial
  mpz_class height;    // H(f) = max |coeff|; the height h = log H
  Size s = Size::of_int(1);

  // h(f) = log H(f); zero polynomial maps to LogValue 0 (log = -inf).
  LogValue h() const { return LogValue::from_int(height); }
};

SizeTriple poly_measures(const ZPoly& f);

// Exact quotient a/b when b divides a in Z[X] (resp. Q[X]); nullopt otherwise.
std::optional<ZPoly> exact_divide(const ZPoly& a, const ZPoly& b);
std::optional<QPoly> exact_divide(const QPoly& a, const QPoly& b);

// gcd in Z[X1..Xn], leading coefficient (lex, X1 > X2 > ...) positive.
ZPoly multipoly_gcd(const ZPoly& f, const ZPoly& g);
ZPoly multipoly_gcd(const std::vector<ZPoly>& fs);
// Flip sign so that the lex-leading coefficient is positive.
ZPoly sign_normalize(const ZPoly& f);

// Pseudo-remainder of a by b with respect to variable var.
ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b, std::size_t var);

// Coefficients of f as a polynomial in X_var (index = power); entries keep nvars
// and do not involve X_var.
std::vector<ZPoly> coefficients_in(const ZPoly& f, std::size_t var);

struct EvalResult {
  mpz_class value;
  // The bound q·log deg g + h(g) + deg g·log max(1,|u|) as the integer whose
  // log it is: deg^q · H(g) · max(1,|u|)^deg (deg^q read as 1 when deg ≤ 1).
  mpz_class stated_bound;
  // A bound that always holds: (#terms) · H(g) · max(1,|u|)^deg.
  mpz_class term_count_bound;
  bool within_stated_bound = false;
};

EvalResult poly_eval_int(const ZPoly& g, const std::vector<mpz_class>& u);

// Visit every nonzero integer polynomial in n variables with s(f) ≤ sigma
// (deg ≤ sigma and |coeff| ≤ e^sigma). Returns the number visited.
std::size_t for_each_poly_of_size(std::size_t n, long sigma,
                                  const std::function<void(const ZPoly&)>& visit);

// All of the above, sorted by (s, degree-lex).
std::vector<ZPoly> polys_of_size(std::size_t n, long sigma);

// ---- text form -------------------------------------------------------------

// Parse "3*X1^2*X2 - 5". Variables X<k>, x<k>, z<k> denote index k-1; a bare
// X, x or z is index 0; Y is the last variable. nvars = 0 infers the count.
QPoly parse_qpoly(const std::string& text, std::size_t nvars = 0);
ZPoly parse_poly(const std::string& text, std::size_t nvars = 0);

// Variable naming used when printing.
struct VarNames {
  std::string stem = "X";
  bool single_bare = false;  // print a one-variable ring as bare stem ("z")
  std::string name(std::size_t i, std::size_t nvars) const;
};

std::string to_string(const ZPoly& f, const VarNames& names = {});
std::string to_string(const QPoly& f, const VarNames& names = {});

}  // namespace effkit
