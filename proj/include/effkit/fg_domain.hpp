#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "effkit/bigfloat.hpp"
#include "effkit/poly.hpp"
#include "effkit/poly_linear.hpp"

namespace effkit {

// A ≅ Z[X1..Xr]/(f1..fm) with X1..Xq declared algebraically independent and
// X(q+1)..Xr algebraic over Q(X1..Xq).
struct Presentation {
  std::size_t r = 0;
  std::size_t q = 0;
  std::vector<ZPoly> gens;

  // Validates shapes; the zero generators are dropped. Throws BadInput.
  static Presentation make(std::size_t r, std::size_t q, std::vector<ZPoly> gens);

  std::size_t t() const { return r - q; }
  std::size_t m() const { return gens.size(); }
  unsigned long d() const;      // max(1, max deg f_i)
  mpz_class max_coeff() const;  // max |coefficient| over the generators
  BigFloat h() const;           // max(1, log max_coeff)
};

// Elements are represented by integer polynomials in r variables.
using ElementRep = ZPoly;

// num/den in the fraction field; den must not lie in I.
struct FractionRep {
  ZPoly num;
  ZPoly den;
};

enum class Equality { Equal, NotEqual, Unknown };
std::string to_string(Equality e);

// Membership settings used by the domain operations.
MembershipOptions domain_membership_options();

struct EqualityResult {
  Equality verdict = Equality::Unknown;
  MembershipResult membership;  // for a - b in I
};
EqualityResult element_eq_detail(const Presentation& p, const ElementRep& a, const ElementRep& b,
                                 const MembershipOptions& opts = domain_membership_options());
Equality element_eq(const Presentation& p, const ElementRep& a, const ElementRep& b,
                    const MembershipOptions& opts = domain_membership_options());

// Fraction equality: a.num·b.den - b.num·a.den ∈ I.
Equality fraction_eq(const Presentation& p, const FractionRep& a, const FractionRep& b,
                     const MembershipOptions& opts = domain_membership_options());

struct InverseResult {
  std::optional<ElementRep> inverse;  // a·inverse - 1 ∈ I, verified
  PolyVector certificate;             // cofactors of (a, f1..fm) summing to 1
  bool proven_non_unit = false;       // 1 ∉ (a) + I, by a sound witness
  std::string detail;
};
InverseResult find_inverse(const Presentation& p, const ElementRep& a,
                           const MembershipOptions& opts = domain_membership_options());

// Residues of an element at the points of V(I) over small prime fields; equal
// elements have equal fingerprints.
class Fingerprinter {
 public:
  explicit Fingerprinter(const Presentation& p, std::size_t point_budget = 4096);
  std::vector<unsigned long> operator()(const ElementRep& a) const;
  std::size_t point_count() const;

 private:
  struct Field {
    unsigned long p;
    std::vector<std::vector<unsigned long>> points;
  };
  std::vector<Field> fields_;
};

struct UnitSolution {
  ElementRep eps, eps_inv, eta, eta_inv;
  // Cofactors with respect to f1..fm (over Z) for eps·eps_inv - 1,
  // eta·eta_inv - 1 and a·eps + b·eta - c.
  PolyVector cert_eps, cert_eta, cert_equation;
};

struct UnitEnumeration {
  std::vector<UnitSolution> solutions;
  std::vector<ElementRep> units;  // distinct units of size ≤ cap, in search order
  std::size_t candidates = 0;     // polynomials of size ≤ cap examined
  std::size_t undecided = 0;      // unit tests or equalities left Unknown
};

// Solutions of a·eps + b·eta = c with eps, eta units represented by
// polynomials of size ≤ size_cap, one representative pair per solution.
UnitEnumeration enumerate_unit_solutions(const Presentation& p, const ElementRep& a,
                                         const ElementRep& b, const ElementRep& c, long size_cap,
                                         const MembershipOptions& opts = domain_membership_options());

// Independent re-check of the three memberships by multiplication.
bool verify_unit_solution(const Presentation& p, const ElementRep& a, const ElementRep& b,
                          const ElementRep& c, const UnitSolution& s);

enum class DomainStatus { Verified, Refuted, Unknown };
std::string to_string(DomainStatus s);

struct DomainCheck {
  DomainStatus status = DomainStatus::Unknown;
  std::string reason;
  std::optional<std::pair<ZPoly, ZPoly>> zero_divisors;  // both ∉ I, product ∈ I
  std::optional<mpz_class> integer_in_ideal;
};
DomainCheck check_domain(const Presentation& p);

// Looks for a nonzero polynomial in X1..Xq lying in I, which would refute the
// declared transcendence split. Refuted or Unknown only.
DomainCheck check_transcendence_split(const Presentation& p, long size_cap = 1);

}  // namespace effkit
