#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "effkit/algebraic.hpp"
#include "effkit/reduction.hpp"

namespace effkit {

// lhs ≤ rhs, both rigorous enclosures; holds() only when certain.
struct InequalityReport {
  std::string name;
  Interval lhs, rhs;
  bool holds() const { return lhs.certainly_le(rhs); }
  std::string describe() const;
};

// Δ_F·F_D·f as a polynomial in z_1..z_q (Δ_F = 1 when D = 1). Checks
// deg ≤ (2D-1)d0 + d1 ≤ 2D·d1.
ZPoly build_H(const ReducedDomain& rd);

// First u in {-N..N}^q with H(u) ≠ 0, by increasing max-norm and then
// lexicographically. Throws SearchExhausted when every point is a zero.
std::vector<mpz_class> find_good_point(const ZPoly& H, long N);

struct ZeroCount {
  mpz_class zeros;
  mpz_class bound;  // d·(2N+1)^{q-1}
};
// Zeros of g ≠ 0 on {-N..N}^q; requires 2N+1 > deg g.
ZeroCount count_zeros(const ZPoly& g, long N);

struct SpecializedFiber {
  std::vector<mpz_class> u;
  ZUni F_u;
  std::vector<AlgebraicNumber> roots;  // y_1(u)..y_D(u) in canonical order
};
// Requires H(u) ≠ 0.
SpecializedFiber make_fiber(const ReducedDomain& rd, const std::vector<mpz_class>& u);

// A0 elements (r variables, only z_1..z_q occurring) at u.
mpz_class eval_at(const ZPoly& g, const std::vector<mpz_class>& u);

// σ_{u,j}(α) = Σ P_i(u)/Q(u) · y_j(u)^i. Throws PreconditionViolation when Q(u) = 0.
AlgebraicNumber specialize(const ReducedDomain& rd, const SpecializedFiber& fiber, std::size_t j,
                           const CanonicalRep& alpha);

// Arithmetic of B on canonical representations, reducing y^D with F.
CanonicalRep normalize_rep(std::vector<ZPoly> P, ZPoly Q);
CanonicalRep b_add(const ReducedDomain& rd, const CanonicalRep& a, const CanonicalRep& b);
CanonicalRep b_mul(const ReducedDomain& rd, const CanonicalRep& a, const CanonicalRep& b);

struct HomomorphismCheck {
  bool sum = false, product = false;
  bool ok() const { return sum && product; }
};
// σ(a + b) = σ(a) + σ(b) and σ(ab) = σ(a)σ(b): the left sides through B,
// the right sides through algebraic-number arithmetic.
HomomorphismCheck check_homomorphism(const ReducedDomain& rd, const SpecializedFiber& fiber,
                                     std::size_t j, const CanonicalRep& a, const CanonicalRep& b);

// |h(G) - Σ h(α_i)| ≤ m for monic G ∈ Z[X] of degree m.
InequalityReport verify_root_height_sum(const ZUni& G);

struct Reconstruction {
  mpz_class q;
  std::vector<mpz_class> p;  // p_0..p_{m-1}, gcd(q, p) = 1, q > 0
  InequalityReport report;   // log max(|q|,|p_j|) ≤ 2m² + (m-1)h(G) + Σ h(β_j)
};
// Integers with β_i = Σ_j (p_j/q) α_i^j, where α_1..α_m are the distinct roots
// of the monic G. Throws NotRepresentable when no such rational tuple exists.
Reconstruction reconstruct_coeffs(const ZUni& G, const std::vector<AlgebraicNumber>& alphas,
                                  const std::vector<AlgebraicNumber>& betas);

// |g1|_p ≤ (4N)^{q·D1(D1+1)/2} · max{|g1(u)|_p : |u| ≤ N, g2(u) ≠ 0}, exactly.
struct PlaceCheck {
  mpz_class place;  // 0 for the archimedean place
  mpq_class lhs, rhs;
  bool holds() const { return lhs <= rhs; }
};
// Checked at ∞, every prime ≤ 13, the prime factors of the coefficients of g1
// found by trial division, and `extra_primes`.
std::vector<PlaceCheck> coeff_bound_from_values(const ZPoly& g1, const ZPoly& g2, long N,
                                                const std::vector<mpz_class>& extra_primes = {});

// D² + q(D log d0 + log deḡα) + D h0 + h̄(α) + (D d0 + deḡα) log max(1,|u|),
// with log deḡα read as 0 for constant α.
Interval specialized_height_bound(const ReducedDomain& rd, const CanonicalRep& alpha,
                                  const std::vector<mpz_class>& u);
// h(σ_{u,j}(α)) against the bound, for every j.
std::vector<InequalityReport> verify_specialized_heights(const ReducedDomain& rd,
                                                         const SpecializedFiber& fiber,
                                                         const CanonicalRep& alpha);

// 5N⁴(h1+1)² + 2D(h1+1)·H_obs.
Interval height_lift_bound(const ReducedDomain& rd, long N, const Interval& H_obs);
// The least admissible N is max(deḡα, 2D·d0 + 2(q+1)(d1+1)).
long height_lift_N(const ReducedDomain& rd, const CanonicalRep& alpha);
// h̄(α) against the bound, with H_obs the largest h(α_j(u)) over all |u| ≤ N with H(u) ≠ 0.
InequalityReport verify_height_lift(const ReducedDomain& rd, const CanonicalRep& alpha);

// log of D^{2D-1}(d0^q e^{h0} max(1,|u|)^{d0})^{2D-2}.
Interval discriminant_bound(const ReducedDomain& rd, const std::vector<mpz_class>& u);
// |disc(minimal polynomial of y_j(u))| against the bound, for every j. The field
// discriminant divides it, so this is the stronger check.
std::vector<InequalityReport> verify_discriminants(const ReducedDomain& rd,
                                                   const SpecializedFiber& fiber);

}  // namespace effkit
