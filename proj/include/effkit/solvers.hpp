#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

#include "effkit/effective_bounds.hpp"
#include "effkit/exact_linalg.hpp"
#include "effkit/fg_domain.hpp"
#include "effkit/log_value.hpp"
#include "effkit/reduction.hpp"

namespace effkit {

// a·ε + b·η = c with ε = ±Π p_i^{e_i}, |e_i| ≤ cap, and η an S-unit.
struct RationalSUnitProblem {
  std::vector<mpz_class> primes;
  mpq_class a = 1, b = 1, c = 1;
  unsigned long cap = 6;
};

struct SUnitSolution {
  mpq_class eps, eta;
  int sign = 1;          // sign of ε
  IntVector exponents;   // e_i of ε, aligned with the primes
  mpz_class height_eps;  // H(ε₁) = max(|num|, |den|) for ε₁ = aε/c
  mpz_class height_eta;  // the same for η₁ = bη/c
};

struct SUnitResult {
  std::vector<SUnitSolution> solutions;  // sorted by (exponents, sign)
  // Height bound for ε₁ + η₁ = 1 over S' = S ∪ primes(a, b, c), with
  // s = |S'| + 1, P = max S' and Q = Π S' (both 2 when S' is empty).
  LogValue bound;
  std::vector<mpz_class> scaled_primes;  // S'
  std::size_t candidates = 0;
};

// Throws PreconditionViolation for zero coefficients or a repeated or
// non-prime entry of S. Every solution is re-verified exactly and its scaled
// heights are checked against the bound (DefectError on violation).
SUnitResult solve_sunit_q(const RationalSUnitProblem& prob);

// True when every prime factor of num and den lies in primes (x ≠ 0).
bool is_s_unit_q(const mpq_class& x, std::span<const mpz_class> primes);

enum class DepVerdict { Dependent, Independent, IndependentAtCap, Unknown };
std::string to_string(DepVerdict v);

struct MultDepResult {
  DepVerdict verdict = DepVerdict::Unknown;
  IntVector relation;                    // Π γ_i^{k_i} = 1 when Dependent
  std::vector<std::string> transcript;   // human-readable verification steps
};

// Exact over Q: exponents over the primes plus a sign component of order 2.
// The relation is the first vector of an LLL-reduced basis of the relation
// lattice, with its first nonzero entry positive.
MultDepResult mult_dep_q(std::span<const mpq_class> gammas);

// Π γ_i^{k_i} for rationals; k_i < 0 requires γ_i ≠ 0.
mpq_class power_product(std::span<const mpq_class> gammas, std::span<const mpz_class> k);

struct MultRepResult {
  bool representable = false;
  IntVector k;     // γ₀ = Π γ_i^{k_i}, verified
  LogValue bound;  // |k_i| ≤ lemma72_bound(1, max(1, h), 1, s).bound with h = max h(γ_i)
  bool within_bound = false;
};
// γ₁..γ_s must be multiplicatively independent (PreconditionViolation otherwise).
MultRepResult mult_rep_exponents(const mpq_class& gamma0, std::span<const mpq_class> gammas,
                                 const ConstantPack& pack = {});

struct MultDepCaps {
  long exponent_cap = 10;       // relations searched with |k_i| ≤ cap (and ≤ V)
  std::size_t points = 4;       // good points whose images are compared
  long point_norm = 16;         // largest |u| scanned for good points
};

// Relations among γ_i ∈ K* found through specializations: candidate k must make
// the norms of the images multiplicatively trivial at every point and the
// images themselves trivial in absolute value; survivors are verified in K.
// IndependentAtCap: no relation with |k_i| ≤ min(cap, V).
MultDepResult mult_dep_general(const ReducedDomain& rd, const std::vector<FractionRep>& gammas,
                               const MultDepCaps& caps = {}, const ConstantPack& pack = {});

struct ExpEquationProblem {
  Presentation pres;
  std::vector<FractionRep> gammas;
  ElementRep a, b, c;
  unsigned long cap = 10;
};

struct ExpSolution {
  IntVector v, w;
};

struct ExpResult {
  std::vector<ExpSolution> solutions;  // sorted by (v, w)
  MultDepResult independence;
  LogValue bound;  // thm13_bound(d, h, r, s)
  std::size_t pairs_checked = 0;
  std::size_t undecided = 0;  // membership tests left Unknown
};

// a·Π γ^v + b·Π γ^w = c in A over the box |v_i|, |w_i| ≤ cap, tested as
// a·N_v·D_w + b·N_w·D_v - c·D_v·D_w ∈ I. Throws PreconditionViolation when
// the γ_i are dependent or a, b, c vanish.
ExpResult solve_exponential(const ExpEquationProblem& prob, const ConstantPack& pack = {},
                            const MultDepCaps& caps = {});

// True when α ∈ B = A0[y, f^{-1}] is a unit: Q and the numerator of
// N_{K/K0}(α) = Res_T(F, Σ P_j T^j) / Q^D both divide a power of f in A0.
bool is_unit_in_B(const ReducedDomain& rd, const CanonicalRep& alpha);

struct BUnitSearchCaps {
  int max_deg = 2;         // total degree of each P_j in z_1..z_q
  long max_coeff = 1;      // |coefficients| of the P_j
  unsigned max_k = 1;      // Q = f^k with k ≤ max_k
};

struct BUnitSolution {
  CanonicalRep eps, eta;
};

struct BUnitSearch {
  std::vector<BUnitSolution> solutions;  // ε₁ + η₁ = 1, both units of B, ordered by the printed form of ε₁
  std::size_t candidates = 0;
  std::size_t units = 0;
  mpz_class degree_bound;  // 4 q D² d1
  int max_degree = 0;      // largest deḡ over the solutions
};
// Brute force over α = Σ P_j y^j / f^k inside the caps.
BUnitSearch enumerate_b_unit_solutions(const ReducedDomain& rd, const BUnitSearchCaps& caps = {});

// Π γ_i^{k_i} as a fraction of representatives.
FractionRep fraction_power_product(const Presentation& p, const std::vector<FractionRep>& gammas,
                                   std::span<const mpz_class> k);

}  // namespace effkit
