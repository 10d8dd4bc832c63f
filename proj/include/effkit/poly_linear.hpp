#pragma once

#include <optional>
#include <string>
#include <vector>

#include "effkit/effective_bounds.hpp"
#include "effkit/exact_linalg.hpp"
#include "effkit/poly.hpp"

namespace effkit {

enum class CoeffRing { Rational, Integer };

using PolyVector = std::vector<QPoly>;

// A·x = b (or A·x = 0) with polynomial entries in nvars variables. Integer
// systems keep integral QPoly entries and ask for integral solutions.
struct PolySystem {
  std::size_t nvars = 0;
  std::vector<PolyVector> A;  // rows
  std::optional<PolyVector> b;
  CoeffRing ring = CoeffRing::Rational;

  std::size_t rows() const { return A.size(); }
  std::size_t cols() const { return A.empty() ? 0 : A.front().size(); }
  // max degree over A and b, at least 0
  int max_degree() const;
  void validate() const;
};

// The linear system on coefficients of x (entries of degree ≤ delta), one row
// per (equation, monomial of degree ≤ delta + d), rows scaled to integers.
struct CoefficientSystem {
  IntMatrix U;
  IntVector rhs;                  // zero when the system is homogeneous
  std::vector<Exponent> unknown_monomials;  // deglex up to delta, per column block
  bool rhs_out_of_reach = false;  // b has a monomial no product can reach

  PolyVector to_polys(std::span<const mpq_class> y, std::size_t nvars) const;
  PolyVector to_polys(std::span<const mpz_class> y, std::size_t nvars) const;
};
CoefficientSystem assemble(const PolySystem& sys, int delta);

// Q-basis of {x : A·x = 0, deg x_j ≤ delta}, integral and primitive.
std::vector<PolyVector> truncated_kernel_space(const PolySystem& sys, int delta);

// Module generators for the same space: generators are added degree by degree
// and kept only when not in the span of multiples of earlier ones.
std::vector<PolyVector> truncated_kernel(const PolySystem& sys, int delta);

// A solution with entries of degree ≤ delta, or nullopt.
std::optional<PolyVector> solve_at_degree(const PolySystem& sys, int delta);

struct PolySolveResult {
  std::optional<PolyVector> x;
  int degree = -1;     // delta at which x was found
  int delta_max = 0;   // search cap
  std::optional<unsigned long> theoretical_bound;  // (2md)^{2^N}, when it fits
};

// Iterative deepening delta = 0..delta_max.
PolySolveResult solve_poly_linear(const PolySystem& sys, int delta_max);

// ---- ideal membership ---------------------------------------------------------

enum class Verdict { Member, NonMember, Unknown };
std::string to_string(Verdict v);

struct MembershipOptions {
  int delta_max = 12;
  CoeffRing ring = CoeffRing::Integer;
  // When the degree bound for the rational system is at most this, the
  // rational system is also solved at that bound (a complete decision over Q).
  int hermann_jump_limit = 40;
  // Cofactor solutions with max |coefficient| above e^height_cap are discarded.
  std::optional<long> height_cap;
  bool search_witnesses = true;
  ConstantPack pack;
};

struct MembershipResult {
  Verdict verdict = Verdict::Unknown;
  PolyVector cofactors;  // Σ cofactors[i]·f_i = b; integral for the integer ring
  int degree = kDegZero;
  LogValue height;       // log max(|num|, |den|) over cofactor coefficients
  int delta_reached = -1;
  std::string certificate;  // how the verdict was reached
  Section2Caps caps;
};

MembershipResult ideal_membership(const std::vector<ZPoly>& gens, const ZPoly& b,
                                  const MembershipOptions& opts = {});

// Independent check that Σ x_i f_i = b holds exactly.
bool verify_cofactors(const std::vector<ZPoly>& gens, const ZPoly& b, const PolyVector& x);

// A point of (Z/n)[e]/(e^k) (k = 1: plain residues) where every generator
// vanishes and b does not, found by exhaustive search within the budget.
struct ModularWitness {
  unsigned long modulus = 0;
  unsigned jet_order = 1;
  std::vector<unsigned long> base, tangent;
  std::string describe() const;
};
std::optional<ModularWitness> find_modular_witness(const std::vector<ZPoly>& gens, const ZPoly& b,
                                                   std::size_t budget = 20000);

// A rational point where every generator vanishes and b does not.
std::optional<std::vector<mpq_class>> find_rational_witness(const std::vector<ZPoly>& gens,
                                                            const ZPoly& b);

}  // namespace effkit
