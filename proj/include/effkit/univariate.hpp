#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "effkit/interval.hpp"
#include "effkit/poly.hpp"

namespace effkit {

// Dense univariate polynomials, coefficients from X^0 upward, no trailing
// zeros (the zero polynomial is the empty vector).
using ZUni = std::vector<mpz_class>;
using QUni = std::vector<mpq_class>;

int degree(const ZUni& f);  // -1 for zero
int degree(const QUni& f);

ZUni trimmed(ZUni f);
QUni trimmed(QUni f);

ZUni uni_from(const ZPoly& f);  // f must have nvars = 1 (or be constant)
ZPoly to_poly(const ZUni& f);
QUni to_rational(const ZUni& f);
// Primitive integer multiple with positive leading coefficient (0 stays 0).
ZUni primitive_of(const QUni& f);
ZUni primitive_of(const ZUni& f);
mpz_class content(const ZUni& f);

ZUni operator+(const ZUni& a, const ZUni& b);
ZUni operator-(const ZUni& a, const ZUni& b);
ZUni operator*(const ZUni& a, const ZUni& b);
QUni operator+(const QUni& a, const QUni& b);
QUni operator-(const QUni& a, const QUni& b);
QUni operator*(const QUni& a, const QUni& b);
ZUni derivative(const ZUni& f);
QUni derivative(const QUni& f);

// Division with remainder over Q; b ≠ 0.
std::pair<QUni, QUni> divmod(const QUni& a, const QUni& b);
// Quotient over Z when b divides a exactly.
std::optional<ZUni> exact_quotient(const ZUni& a, const ZUni& b);
// Primitive gcd over Q with positive leading coefficient; gcd(0, 0) = 0.
ZUni gcd(const ZUni& a, const ZUni& b);

mpz_class evaluate(const ZUni& f, const mpz_class& x);
mpq_class evaluate(const QUni& f, const mpq_class& x);
ComplexInterval evaluate(const ZUni& f, const ComplexInterval& x);
ComplexInterval evaluate(const QUni& f, const ComplexInterval& x);

mpz_class resultant(const ZUni& f, const ZUni& g);
// Disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f); 1 for degree ≤ 1.
mpz_class discriminant(const ZUni& f);

// f = unit · Π p_i^{e_i} with p_i primitive, irreducible over Q, positive
// leading coefficient; `unit` is the signed content.
struct UniFactorization {
  mpz_class unit;
  std::vector<std::pair<ZUni, unsigned>> factors;  // ascending degree, then coefficients
};
UniFactorization factor(const ZUni& f);
bool irreducible_over_q(const ZUni& f);  // degree ≥ 1
// Squarefree part, primitive.
ZUni squarefree_part(const ZUni& f);

// Resultant and discriminant with respect to variable `var` for multivariate
// integer polynomials, via the Sylvester matrix and fraction-free elimination.
ZPoly resultant_in(const ZPoly& f, const ZPoly& g, std::size_t var);
ZPoly discriminant_in(const ZPoly& f, std::size_t var);

}  // namespace effkit
