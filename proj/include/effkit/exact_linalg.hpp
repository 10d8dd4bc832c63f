#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <vector>

namespace effkit {

using IntVector = std::vector<mpz_class>;
using RatVector = std::vector<mpq_class>;

// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  // max |entry|; 0 for an empty or zero matrix.
  mpz_class max_abs() const;

  IntVector apply(std::span<const mpz_class> v) const;
  IntMatrix operator*(const IntMatrix& o) const;
  // [U, b]
  IntMatrix augmented(std::span<const mpz_class> b) const;
  void append_row(std::span<const mpz_class> r);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<mpz_class> a_;
};

// Column Hermite form: U·T = H with T unimodular. The first rank() columns of H
// carry pivots at strictly increasing rows (pivot_rows), pivots are positive,
// entries left of a pivot lie in [0, pivot), and the remaining columns are zero.
// Those trailing columns of T form a basis of the integer kernel lattice.
struct HermiteForm {
  IntMatrix H;
  IntMatrix T;
  std::vector<std::size_t> pivot_rows;
  std::size_t rank() const { return pivot_rows.size(); }
};

HermiteForm hnf(const IntMatrix& U);

// Bareiss determinant of a square matrix.
mpz_class determinant(const IntMatrix& M);

// Reduced row echelon form over Q; pivots are the leftmost independent columns.
struct RationalEchelon {
  std::vector<RatVector> rows;  // only the rank() nonzero rows
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};
RationalEchelon rref(const IntMatrix& U);

std::size_t rank(const IntMatrix& U);

// Integer vectors spanning ker U over Q, one per non-pivot column. Each is the
// primitive multiple of the Cramer solution built on the leftmost nonsingular
// column block, with first nonzero entry positive.
std::vector<IntVector> kernel_basis_int(const IntMatrix& U);

// Exact test of max_i |y_i| ≤ H^m · m^{m/2}, i.e. h(y) ≤ m·log H + ½·m·log m,
// with H read as max(1, H).
bool within_linear_height_bound(std::span<const mpz_class> y, std::size_t m, const mpz_class& H);

// A rational solution of U·y = b with free variables zero, or nullopt.
std::optional<RatVector> solve_rational(const IntMatrix& U, std::span<const mpz_class> b);

// An integer solution of U·y = b of small height, or nullopt when none exists.
// The result satisfies within_linear_height_bound(y, rows, max_abs([U, b]));
// DefectError if the reduction fails to reach it.
std::optional<IntVector> solve_int_small(const IntMatrix& U, std::span<const mpz_class> b);

// Any integer solution (the Hermite particular solution) without reduction.
std::optional<IntVector> solve_int(const IntMatrix& U, std::span<const mpz_class> b);

// LLL-reduce a list of linearly independent integer vectors (δ = 3/4), exact.
void lll_reduce(std::vector<IntVector>& basis);

// Shorten y within y + lattice: Babai rounding, then greedy steps that lower
// the max-norm.
IntVector reduce_against_lattice(IntVector y, std::vector<IntVector> basis);

mpz_class max_norm(std::span<const mpz_class> v);

// A growing Q-subspace kept in reduced echelon form; add() reports whether the
// vector was independent of those already present.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(std::size_t dim) : dim_(dim) {}
  bool add(RatVector v);
  bool contains(RatVector v) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  void reduce(RatVector& v) const;
  std::size_t dim_;
  std::vector<RatVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace effkit
