#include "effkit/exact_linalg.hpp"

#include <algorithm>

#include "effkit/errors.hpp"
#include "effkit/integer.hpp"

namespace effkit {

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw BadInput("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(a_.begin() + static_cast<long>(i * cols_),
                   a_.begin() + static_cast<long>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

mpz_class IntMatrix::max_abs() const { return max_norm(a_); }

IntVector IntMatrix::apply(std::span<const mpz_class> v) const {
  expects(v.size() == cols_, "matrix-vector dimension mismatch");
  IntVector r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (v[j] != 0 && (*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
    }
  }
  return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  expects(cols_ == o.rows_, "matrix product dimension mismatch");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpz_class& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  }
  return r;
}

IntMatrix IntMatrix::augmented(std::span<const mpz_class> b) const {
  expects(b.size() == rows_, "right-hand side length mismatch");
  IntMatrix r(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    r(i, cols_) = b[i];
  }
  return r;
}

void IntMatrix::append_row(std::span<const mpz_class> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  expects(r.size() == cols_, "appended row length mismatch");
  a_.insert(a_.end(), r.begin(), r.end());
  ++rows_;
}

mpz_class max_norm(std::span<const mpz_class> v) {
  mpz_class m = 0;
  for (const auto& x : v) {
    if (abs(x) > m) m = abs(x);
  }
  return m;
}

// ---- Hermite form -------------------------------------------------------------

namespace {
// column dst -= q * column src, in both the working matrix and the transform
void col_axpy(IntMatrix& A, IntMatrix& T, std::size_t dst, std::size_t src, const mpz_class& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < A.rows(); ++i) {
    if (A(i, src) != 0) A(i, dst) -= q * A(i, src);
  }
  for (std::size_t i = 0; i < T.rows(); ++i) {
    if (T(i, src) != 0) T(i, dst) -= q * T(i, src);
  }
}

void col_swap(IntMatrix& A, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < A.rows(); ++i) std::swap(A(i, a), A(i, b));
}

void col_negate(IntMatrix& A, std::size_t a) {
  for (std::size_t i = 0; i < A.rows(); ++i) A(i, a) = -A(i, a);
}

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
}  // namespace

HermiteForm hnf(const IntMatrix& U) {
  const std::size_t m = U.rows(), n = U.cols();
  HermiteForm out{U, IntMatrix::identity(n), {}};
  IntMatrix& A = out.H;
  IntMatrix& T = out.T;
  std::size_t col = 0;
  for (std::size_t i = 0; i < m && col < n; ++i) {
    while (true) {
      std::size_t best = n;
      for (std::size_t k = col; k < n; ++k) {
        if (A(i, k) != 0 && (best == n || abs(A(i, k)) < abs(A(i, best)))) best = k;
      }
      if (best == n) break;
      col_swap(A, col, best);
      col_swap(T, col, best);
      bool done = true;
      for (std::size_t k = col + 1; k < n; ++k) {
        if (A(i, k) == 0) continue;
        col_axpy(A, T, k, col, floor_div(A(i, k), A(i, col)));
        if (A(i, k) != 0) done = false;
      }
      if (done) break;
    }
    if (A(i, col) == 0) continue;
    if (A(i, col) < 0) {
      col_negate(A, col);
      col_negate(T, col);
    }
    for (std::size_t j = 0; j < col; ++j) col_axpy(A, T, j, col, floor_div(A(i, j), A(i, col)));
    out.pivot_rows.push_back(i);
    ++col;
  }
  return out;
}

mpz_class determinant(const IntMatrix& M) {
  expects(M.rows() == M.cols(), "determinant of a non-square matrix");
  const std::size_t n = M.rows();
  if (n == 0) return 1;
  IntMatrix A = M;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && A(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(A(k, j), A(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = A(i, j) * A(k, k) - A(i, k) * A(k, j);
        mpz_divexact(A(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      A(i, k) = 0;
    }
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

// ---- rational elimination -----------------------------------------------------

namespace {
RationalEchelon rref_rows(std::vector<RatVector> R, std::size_t ncols) {
  RationalEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < R.size(); ++c) {
    std::size_t p = r;
    while (p < R.size() && R[p][c] == 0) ++p;
    if (p == R.size()) continue;
    std::swap(R[r], R[p]);
    const mpq_class inv = 1 / R[r][c];
    for (std::size_t j = c; j < ncols; ++j) {
      if (R[r][j] != 0) R[r][j] *= inv;
    }
    for (std::size_t i = 0; i < R.size(); ++i) {
      if (i == r || R[i][c] == 0) continue;
      const mpq_class f = R[i][c];
      for (std::size_t j = c; j < ncols; ++j) {
        if (R[r][j] != 0) R[i][j] -= f * R[r][j];
      }
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  R.resize(r);
  out.rows = std::move(R);
  return out;
}

std::vector<RatVector> to_rational_rows(const IntMatrix& U) {
  std::vector<RatVector> R(U.rows(), RatVector(U.cols()));
  for (std::size_t i = 0; i < U.rows(); ++i) {
    for (std::size_t j = 0; j < U.cols(); ++j) R[i][j] = U(i, j);
  }
  return R;
}

IntVector primitive_sign_normalized(const RatVector& v) {
  mpz_class l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector r(v.size());
  mpz_class g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpq_class s = v[i] * l;
    r[i] = s.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r[i].get_mpz_t());
  }
  if (g == 0) return r;
  auto first = std::find_if(r.begin(), r.end(), [](const mpz_class& x) { return x != 0; });
  if (*first < 0) g = -g;
  for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return r;
}
}  // namespace

RationalEchelon rref(const IntMatrix& U) { return rref_rows(to_rational_rows(U), U.cols()); }

std::size_t rank(const IntMatrix& U) { return rref(U).rank(); }

std::vector<IntVector> kernel_basis_int(const IntMatrix& U) {
  const std::size_t n = U.cols();
  RationalEchelon E = rref(U);
  std::vector<bool> is_pivot(n, false);
  for (auto c : E.pivot_cols) is_pivot[c] = true;
  std::vector<IntVector> out;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    RatVector v(n);
    v[j] = 1;
    for (std::size_t k = 0; k < E.rank(); ++k) v[E.pivot_cols[k]] = -E.rows[k][j];
    out.push_back(primitive_sign_normalized(v));
  }
  return out;
}

bool within_linear_height_bound(std::span<const mpz_class> y, std::size_t m, const mpz_class& H) {
  // max|y|^2 ≤ H^{2m} m^m
  mpz_class Hs = std::max(H, mpz_class(1));
  mpz_class rhs = ipow(Hs, 2 * m) * ipow(mpz_class(static_cast<unsigned long>(m)), m);
  mpz_class y2 = max_norm(y);
  y2 *= y2;
  return y2 <= rhs;
}

std::optional<RatVector> solve_rational(const IntMatrix& U, std::span<const mpz_class> b) {
  expects(b.size() == U.rows(), "right-hand side length mismatch");
  const std::size_t n = U.cols();
  std::vector<RatVector> R = to_rational_rows(U.augmented(b));
  RationalEchelon E = rref_rows(std::move(R), n + 1);
  if (!E.pivot_cols.empty() && E.pivot_cols.back() == n) return std::nullopt;
  RatVector y(n);
  for (std::size_t k = 0; k < E.rank(); ++k) y[E.pivot_cols[k]] = E.rows[k][n];
  return y;
}

// ---- integer solving ------------------------------------------------------------

namespace {
std::optional<IntVector> particular_solution(const HermiteForm& F, std::span<const mpz_class> b) {
  const std::size_t m = F.H.rows(), n = F.H.cols();
  IntVector residual(b.begin(), b.end());
  IntVector z(n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (k < F.rank() && F.pivot_rows[k] == i) {
      const mpz_class& p = F.H(i, k);
      if (!mpz_divisible_p(residual[i].get_mpz_t(), p.get_mpz_t())) return std::nullopt;
      mpz_divexact(z[k].get_mpz_t(), residual[i].get_mpz_t(), p.get_mpz_t());
      for (std::size_t r = i; r < m; ++r) {
        if (F.H(r, k) != 0) residual[r] -= z[k] * F.H(r, k);
      }
      ++k;
    } else if (residual[i] != 0) {
      return std::nullopt;
    }
  }
  return F.T.apply(z);
}
}  // namespace

std::optional<IntVector> solve_int(const IntMatrix& U, std::span<const mpz_class> b) {
  expects(b.size() == U.rows(), "right-hand side length mismatch");
  return particular_solution(hnf(U), b);
}

namespace {
mpq_class dot(const RatVector& a, const RatVector& b) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

RatVector as_rational(const IntVector& v) { return RatVector(v.begin(), v.end()); }

struct GramSchmidt {
  std::vector<RatVector> star;
  std::vector<mpq_class> norm2;
  std::vector<RatVector> mu;
};

GramSchmidt gram_schmidt(const std::vector<IntVector>& B) {
  GramSchmidt g;
  const std::size_t k = B.size();
  g.mu.assign(k, RatVector(k));
  for (std::size_t i = 0; i < k; ++i) {
    RatVector v = as_rational(B[i]);
    RatVector bi = v;
    for (std::size_t j = 0; j < i; ++j) {
      g.mu[i][j] = dot(bi, g.star[j]) / g.norm2[j];
      for (std::size_t t = 0; t < v.size(); ++t) {
        if (g.star[j][t] != 0) v[t] -= g.mu[i][j] * g.star[j][t];
      }
    }
    g.norm2.push_back(dot(v, v));
    g.star.push_back(std::move(v));
  }
  return g;
}

mpz_class round_rat(const mpq_class& x) {
  mpq_class h = x + mpq_class(1, 2);
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
  return r;
}

void axpy(IntVector& y, const mpz_class& q, const IntVector& b) {
  if (q == 0) return;
  for (std::size_t t = 0; t < y.size(); ++t) {
    if (b[t] != 0) y[t] -= q * b[t];
  }
}

mpz_class norm2(const IntVector& v) {
  mpz_class s = 0;
  for (const auto& x : v) s += x * x;
  return s;
}

bool better(const IntVector& a, const IntVector& b) {
  int c = cmp(max_norm(a), max_norm(b));
  if (c != 0) return c < 0;
  return norm2(a) < norm2(b);
}
}  // namespace

void lll_reduce(std::vector<IntVector>& B) {
  const std::size_t n = B.size();
  if (n < 2) return;
  GramSchmidt g = gram_schmidt(B);
  const mpq_class delta(3, 4);
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t j = k; j-- > 0;) {
      mpz_class q = round_rat(g.mu[k][j]);
      if (q == 0) continue;
      axpy(B[k], q, B[j]);
      for (std::size_t t = 0; t < j; ++t) g.mu[k][t] -= q * g.mu[j][t];
      g.mu[k][j] -= q;
    }
    if (g.norm2[k] >= (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.norm2[k - 1]) {
      ++k;
    } else {
      std::swap(B[k], B[k - 1]);
      g = gram_schmidt(B);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
}

IntVector reduce_against_lattice(IntVector y, std::vector<IntVector> basis) {
  if (basis.empty()) return y;
  lll_reduce(basis);
  GramSchmidt g = gram_schmidt(basis);
  for (std::size_t j = basis.size(); j-- > 0;) {
    mpq_class c = dot(as_rational(y), g.star[j]) / g.norm2[j];
    axpy(y, round_rat(c), basis[j]);
  }
  // Greedy descent on (max-norm, 2-norm) over ±b_i and ±b_i ± b_j.
  std::vector<IntVector> moves;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    moves.push_back(basis[i]);
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      IntVector s = basis[i], d = basis[i];
      for (std::size_t t = 0; t < s.size(); ++t) {
        s[t] += basis[j][t];
        d[t] -= basis[j][t];
      }
      moves.push_back(std::move(s));
      moves.push_back(std::move(d));
    }
  }
  bool improved = true;
  while (improved) {
    improved = false;
    for (const auto& mv : moves) {
      for (int sgn : {1, -1}) {
        IntVector cand = y;
        axpy(cand, mpz_class(sgn), mv);
        if (better(cand, y)) {
          y = std::move(cand);
          improved = true;
        }
      }
    }
  }
  return y;
}

std::optional<IntVector> solve_int_small(const IntMatrix& U, std::span<const mpz_class> b) {
  expects(b.size() == U.rows(), "right-hand side length mismatch");
  // Exact lattice reduction gets slow in high dimension; above this size it runs
  // only when the Hermite solution misses the bound.
  constexpr std::size_t kAlwaysReduceDim = 12;
  const std::size_t n = U.cols();
  HermiteForm F = hnf(U);
  std::optional<IntVector> y0 = particular_solution(F, b);
  if (!y0) return std::nullopt;
  const mpz_class H = U.augmented(b).max_abs();
  IntVector y = std::move(*y0);
  const std::size_t dim = n - F.rank();
  if (dim <= kAlwaysReduceDim || !within_linear_height_bound(y, U.rows(), H)) {
    std::vector<IntVector> lattice;
    for (std::size_t j = F.rank(); j < n; ++j) lattice.push_back(F.T.column(j));
    y = reduce_against_lattice(std::move(y), std::move(lattice));
  }
  ensures(U.apply(y) == IntVector(b.begin(), b.end()), "reduced solution no longer solves the system");
  ensures(within_linear_height_bound(y, U.rows(), H),
          "small integer solution exceeds the linear-system height bound");
  return y;
}

void IncrementalSpan::reduce(RatVector& v) const {
  expects(v.size() == dim_, "vector dimension mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const mpq_class f = v[pivots_[k]];
    if (f == 0) continue;
    for (std::size_t t = 0; t < dim_; ++t) {
      if (rows_[k][t] != 0) v[t] -= f * rows_[k][t];
    }
  }
}

bool IncrementalSpan::contains(RatVector v) const {
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const mpq_class& x) { return x == 0; });
}

bool IncrementalSpan::add(RatVector v) {
  reduce(v);
  auto it = std::find_if(v.begin(), v.end(), [](const mpq_class& x) { return x != 0; });
  if (it == v.end()) return false;
  const std::size_t p = static_cast<std::size_t>(it - v.begin());
  const mpq_class inv = 1 / v[p];
  for (auto& x : v) {
    if (x != 0) x *= inv;
  }
  // keep earlier rows reduced at the new pivot
  for (auto& r : rows_) {
    const mpq_class f = r[p];
    if (f == 0) continue;
    for (std::size_t t = 0; t < dim_; ++t) {
      if (v[t] != 0) r[t] -= f * v[t];
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

}  // namespace effkit
