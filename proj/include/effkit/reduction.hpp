#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "effkit/bigfloat.hpp"
#include "effkit/effective_bounds.hpp"
#include "effkit/fg_domain.hpp"
#include "effkit/log_value.hpp"

namespace effkit {

// Elements of A0 = Z[X1..Xq] are kept as polynomials in all r variables in
// which only X1..Xq occur, so they multiply directly with representatives.

struct ReductionOptions {
  int delta_max = 6;  // degree cap for the A0-unknowns in each linear system
  ConstantPack pack;
};

// Polynomial-in-unknowns equation Σ_b multiplier_b · u_b = 0, where u_b ranges
// over Q-combinations of the monomials of block b.
struct UnknownBlock {
  ZPoly multiplier;
  std::vector<Exponent> monomials;
};
// Q-basis of the solutions, as one integer polynomial per block.
std::vector<std::vector<ZPoly>> block_kernel(const std::vector<UnknownBlock>& blocks,
                                             std::size_t nvars);

struct MinimalPolyData {
  std::size_t D = 1;
  std::vector<ZPoly> G;  // G_0..G_D in A0, gcd 1, G_0 lex-leading coefficient > 0
  std::vector<ZPoly> F;  // F_0 = 1, F_1..F_D in A0: minimal polynomial of y = G_0·w
  ZPoly W;               // Σ a_i X_{q+i}
  ZPoly Y;               // G_0·W, or 1 when D = 1
  PolyVector cofactors;  // Σ G_i W^{D-i} = Σ cofactors_j f_j (rational)
  int delta = -1;        // degree level at which G was found
};

// Least-D relation Σ G_i W^{D-i} ∈ I with G_0·G_D ≠ 0 for W = Σ a_i X_{q+i},
// D ascending up to max_D (default d^t). nullopt when none is found.
std::optional<MinimalPolyData> minimal_poly(const Presentation& p, const std::vector<long>& weights,
                                            const ReductionOptions& opts = {},
                                            std::optional<std::size_t> max_D = std::nullopt);

struct PrimitiveElement {
  std::vector<long> weights;
  std::size_t D = 1;
  std::size_t tuples_tried = 0;
};
// Weights by increasing max-norm, then lexicographically; keeps the first
// tuple reaching the largest degree. Stops once the norm exceeds best_D^2 or
// the degree reaches d^t. Throws SearchExhausted when nothing is found.
PrimitiveElement find_primitive(const Presentation& p, const ReductionOptions& opts = {});

// α = Q^{-1} Σ_j P_j y^j with gcd(P, Q) = 1 and Q lex-leading coefficient > 0.
struct CanonicalRep {
  std::vector<ZPoly> P;  // P_0..P_{D-1} in A0
  ZPoly Q;
  int deg_bar() const;          // max total degree of the components (0 for constants)
  mpz_class height_bar() const; // max |coefficient| over the components
  LogValue h_bar() const { return LogValue::from_int(height_bar()); }
};

struct Certificate {
  std::string name;
  LogValue bound;
  LogValue observed;
  bool holds() const { return observed <= bound; }
};

struct ReducedDomain {
  Presentation pres;
  std::vector<long> weights;
  MinimalPolyData mp;
  ZPoly f;  // denominator of B = A0[y, f^{-1}], in A0
  std::vector<CanonicalRep> y_reps;  // canonical representations of y_1..y_t

  std::size_t q() const { return pres.q; }
  std::size_t t() const { return pres.t(); }
  std::size_t D() const { return mp.D; }
  // d0 = max(1, deg F_i), d1 = max(d0, deg f), h0 = max(1, h(F_i)), h1 = max(h0, h(f))
  unsigned long d0() const;
  unsigned long d1() const;
  BigFloat h0() const;
  BigFloat h1() const;
  // F as a polynomial in X1..Xq and a last variable T (q + 1 variables).
  ZPoly minimal_polynomial() const;
  std::vector<Certificate> certificates;
};

// The pipeline up to y and F (f = 1 until build_B). t = 0 gives the trivial
// data D = 1, y = 1, F = T - 1.
ReducedDomain reduce_domain(const Presentation& p, const ReductionOptions& opts = {});

struct CanonicalResult {
  CanonicalRep rep;
  PolyVector cofactors;  // Q·num - den·Σ P_j Y^j = Σ cofactors_i f_i (rational)
  int delta = -1;
  Certificate cert_deg, cert_height;
};
// Throws SearchExhausted when no representation is found below the cap, and
// PreconditionViolation for a zero numerator or a denominator in I.
CanonicalResult canonical_rep(const ReducedDomain& rd, const FractionRep& alpha,
                              const ReductionOptions& opts = {});

// Σ_j P_j Y^j and Q as a fraction of representatives.
FractionRep to_fraction(const ReducedDomain& rd, const CanonicalRep& c);

// f = Π Q_{y_i} · Π Q_{α_i} Q_{α_i^{-1}}, sign-normalized; sets rd.f and
// appends the degree/height certificates.
ZPoly build_B(ReducedDomain& rd, const std::vector<FractionRep>& alphas,
              const ReductionOptions& opts = {});

struct LiftResult {
  ZPoly rep;
  MembershipResult membership;
  Certificate cert_deg, cert_height;
};
// A representative of ε from the canonical representation beta of λ·ε, where
// λ = lambda.num / lambda.den. nullopt when the search is capped.
std::optional<LiftResult> lift_representative(const ReducedDomain& rd, const FractionRep& lambda,
                                              const CanonicalRep& beta,
                                              const MembershipOptions& opts = domain_membership_options(),
                                              const ConstantPack& pack = {});
// A representative of ε^{-1} for a unit ε, from the same data.
std::optional<LiftResult> lift_inverse_representative(
    const ReducedDomain& rd, const FractionRep& lambda, const CanonicalRep& beta,
    const MembershipOptions& opts = domain_membership_options(), const ConstantPack& pack = {});

// (2d)^{exp(C r)} and (2d)^{exp(C r)}(h+1): the shape of the reduction bounds.
LogValue reduction_degree_bound(unsigned long d, unsigned long r, const ConstantPack& pack);
LogValue reduction_height_bound(unsigned long d, const BigFloat& h, unsigned long r,
                                const ConstantPack& pack);

}  // namespace effkit
