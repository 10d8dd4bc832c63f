#pragma once

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "effkit/interval.hpp"
#include "effkit/log_value.hpp"
#include "effkit/univariate.hpp"

namespace effkit {

// Closed complex rectangle with rational corners.
struct RationalBox {
  mpq_class re_lo, re_hi, im_lo, im_hi;

  bool intersects(const RationalBox& o) const;
  bool intersects(const ComplexInterval& z) const;  // conservative: may say yes when disjoint
  ComplexInterval to_interval(mpfr_prec_t prec = kWorkPrec) const;
  mpq_class re_mid() const { return (re_lo + re_hi) / 2; }
  mpq_class im_mid() const { return (im_lo + im_hi) / 2; }
  std::string str(int digits = 12) const;
};

// Boxes isolating the complex roots of a squarefree integer polynomial, one
// per root, pairwise disjoint. The order is canonical: by real part, with
// roots whose real boxes overlap ordered by imaginary part. A precision above
// the canonical one returns finer boxes in the same order.
std::vector<RationalBox> isolate_roots(const ZUni& squarefree, mpfr_prec_t prec = 0);

// A root of an irreducible primitive integer polynomial, identified by its
// position in the canonical root order.
class AlgebraicNumber {
 public:
  AlgebraicNumber() : AlgebraicNumber(rational(0)) {}
  static AlgebraicNumber rational(const mpq_class& q);
  static AlgebraicNumber root_of(const ZUni& irreducible, std::size_t index);

  const ZUni& minpoly() const { return minpoly_; }
  std::size_t index() const { return index_; }
  const RationalBox& box() const { return box_; }
  int degree() const { return effkit::degree(minpoly_); }
  bool is_zero() const;
  std::optional<mpq_class> as_rational() const;
  ComplexInterval enclosure(mpfr_prec_t prec = kWorkPrec) const;
  std::string str() const;

  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return a.minpoly_ == b.minpoly_ && a.index_ == b.index_;
  }

 private:
  AlgebraicNumber(ZUni minpoly, std::size_t index, RationalBox box)
      : minpoly_(std::move(minpoly)), index_(index), box_(std::move(box)) {}
  friend AlgebraicNumber identify_root(const ZUni&, const std::function<ComplexInterval(mpfr_prec_t)>&);

  ZUni minpoly_;
  std::size_t index_ = 0;
  RationalBox box_;
};

// The unique root of some irreducible factor of R lying in every enclosure
// enclose(prec), for increasing precision. R must vanish at the target.
AlgebraicNumber identify_root(const ZUni& R, const std::function<ComplexInterval(mpfr_prec_t)>& enclose);

// All distinct roots of f ≠ 0 (nonconstant), in the canonical order of its squarefree part.
std::vector<AlgebraicNumber> roots_of(const ZUni& f);

AlgebraicNumber operator-(const AlgebraicNumber& a);
AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber inverse(const AlgebraicNumber& a);  // a ≠ 0

// c(θ) for a rational polynomial c, computed in Q(θ).
AlgebraicNumber evaluate(const QUni& c, const AlgebraicNumber& theta);

// log M(minpoly) / deg, as a rigorous enclosure.
Interval mahler_log(const ZUni& f);  // log of the Mahler measure, f ≠ 0
Interval alg_height_interval(const AlgebraicNumber& a);
// Upper end of the enclosure.
LogValue alg_height(const AlgebraicNumber& a);

}  // namespace effkit
