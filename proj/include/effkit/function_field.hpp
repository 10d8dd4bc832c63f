#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "effkit/univariate.hpp"

namespace effkit {

// Elements of Q(z) as num/den with gcd 1 and den monic.
class FFElement {
 public:
  FFElement() : num_{}, den_{mpq_class(1)} {}
  FFElement(QUni num, QUni den);  // den ≠ 0; normalizes
  static FFElement constant(const mpq_class& c);
  static FFElement from_text(const std::string& num, const std::string& den = "1");

  const QUni& num() const { return num_; }
  const QUni& den() const { return den_; }
  bool is_zero() const { return num_.empty(); }
  bool is_constant() const { return degree(num_) <= 0 && degree(den_) == 0; }

  friend FFElement operator+(const FFElement& a, const FFElement& b);
  friend FFElement operator-(const FFElement& a, const FFElement& b);
  friend FFElement operator*(const FFElement& a, const FFElement& b);
  friend FFElement operator/(const FFElement& a, const FFElement& b);
  friend bool operator==(const FFElement& a, const FFElement& b) = default;

  std::string str() const;

 private:
  QUni num_, den_;
};

// Monic gcd over Q; gcd(0, 0) = 0.
QUni monic_gcd(const QUni& a, const QUni& b);
QUni monic(const QUni& f);

// The infinite place, or a monic irreducible p ∈ Q[z].
struct Place {
  bool infinite = false;
  QUni p;
  int degree() const { return infinite ? 1 : effkit::degree(p); }
  std::string str() const;
  friend bool operator==(const Place&, const Place&) = default;
};
Place infinite_place();
// "inf" or a polynomial in z; throws BadInput when reducible or constant.
Place parse_place(const std::string& text);
std::vector<Place> parse_places(const std::string& comma_list);

int ff_valuation(const FFElement& x, const Place& v);  // x ≠ 0
// Σ_v deg(v)·v(x) over the places in the support of x and ∞ (always 0).
long weighted_valuation_sum(const FFElement& x);

// Height of the point (f_1 : ... : f_n) after clearing denominators and the
// common gcd: the maximum degree. H(x) = H(1, x).
long ff_height(const std::vector<QUni>& tuple);
long ff_height(const FFElement& x);

long mason_bound(long s, long g);
long genus_bound(long d, long m, long maxdeg);

// x is an S-unit when its numerator and denominator factor over the finite places of S.
bool is_s_unit(const FFElement& x, const std::vector<Place>& S);

struct FFSolution {
  FFElement x, y;
  long height = 0;  // max(H(x), H(y))
};
struct FFSolveResult {
  long bound = 0;  // Mason bound with places counted by degree
  std::vector<FFSolution> solutions;
  std::size_t exponent_vectors = 0;
};
// All x + y = 1 with x, y S-units outside Q*. Requires ∞ ∈ S.
FFSolveResult solve_ff_sunit(const std::vector<Place>& S);

// Σ H(y_i) for F = Π (X - y_i); throws PreconditionViolation when a
// coefficient of F is not a polynomial. Also checks the sum equals the
// maximal coefficient degree and throws DefectError otherwise.
struct RootHeightCheck {
  long height_sum = 0;
  long max_coeff_degree = 0;
};
RootHeightCheck root_height_sum(const std::vector<FFElement>& roots);

}  // namespace effkit
