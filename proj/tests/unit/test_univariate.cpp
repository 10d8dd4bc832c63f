#include <doctest.h>

#include <random>

#include "effkit/univariate.hpp"

using namespace effkit;

namespace {

ZUni zu(std::initializer_list<long> c) {
  ZUni f;
  for (long v : c) f.emplace_back(v);
  return trimmed(f);
}

ZUni from_roots(const std::vector<long>& roots, long lc = 1) {
  ZUni f{mpz_class(lc)};
  for (long r : roots) f = f * zu({-r, 1});
  return f;
}

ZUni expand(const UniFactorization& fac) {
  ZUni p{fac.unit};
  for (const auto& [g, e] : fac.factors) {
    for (unsigned i = 0; i < e; ++i) p = p * g;
  }
  return p;
}

// Rational roots p/q of f: p | f(0), q | lc; brute force over small divisors.
bool has_rational_root(const ZUni& f) {
  if (f[0] == 0) return true;
  const long a0 = std::labs(f[0].get_si()), lc = std::labs(f.back().get_si());
  for (long p = 1; p <= a0; ++p) {
    if (a0 % p) continue;
    for (long q = 1; q <= lc; ++q) {
      if (lc % q) continue;
      for (long s : {1L, -1L}) {
        if (evaluate(to_rational(f), mpq_class(s * p, q)) == 0) return true;
      }
    }
  }
  return false;
}

}  // namespace

TEST_SUITE("univariate") {
  TEST_CASE("resultant and discriminant examples") {
    CHECK(discriminant(zu({-2, 0, 1})) == 8);
    CHECK(discriminant(zu({-1, -1, 1})) == 5);
    CHECK(discriminant(zu({1, 0, -3, 1})) == 81);  // X^3 - 3X + 1
    CHECK(resultant(zu({-2, 0, 1}), zu({0, 1})) == -2);
    CHECK(resultant(zu({3}), zu({1, 1, 1})) == 9);
  }

  TEST_CASE("resultant agrees with product over integer roots") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> small(-4, 4);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<long> roots(1 + trial % 4);
      for (auto& r : roots) r = small(rng);
      ZUni f = from_roots(roots);
      ZUni g;
      for (int k = 0; k <= trial % 3 + 1; ++k) g.emplace_back(small(rng));
      g = trimmed(g);
      if (g.empty()) continue;
      mpz_class expect = 1;
      for (long r : roots) expect *= evaluate(g, mpz_class(r));
      CHECK(resultant(f, g) == expect);
    }
  }

  TEST_CASE("factorization reproduces and splits products") {
    // (X^2 - 2)(X^2 - 3)(2X + 1)^2 · (-6)
    ZUni f = zu({-6}) * zu({-2, 0, 1}) * zu({-3, 0, 1}) * zu({1, 2}) * zu({1, 2});
    auto fac = factor(f);
    CHECK(fac.unit == -6);
    REQUIRE(fac.factors.size() == 3);
    CHECK((fac.factors[0].first == zu({1, 2})));
    CHECK(fac.factors[0].second == 2);
    CHECK((expand(fac) == f));

    CHECK(irreducible_over_q(zu({1, 0, -10, 0, 1})));  // splits mod every prime
    CHECK(!irreducible_over_q(zu({4, 0, 0, 0, 1})));   // (X^2+2X+2)(X^2-2X+2)
    CHECK(irreducible_over_q(zu({-1, -1, 0, 0, 0, 1})));
    CHECK((squarefree_part(zu({1, 2, 1})) == zu({1, 1})));
  }

  TEST_CASE("factorization against random products") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> c(-5, 5);
    for (int trial = 0; trial < 60; ++trial) {
      ZUni f{mpz_class(1 + trial % 3)};
      const int parts = 1 + trial % 3;
      for (int i = 0; i < parts; ++i) {
        ZUni g;
        for (int k = 0; k <= 1 + trial % 3; ++k) g.emplace_back(c(rng));
        g = trimmed(g);
        if (degree(g) < 1) g = zu({c(rng), 1});
        f = f * g;
      }
      auto fac = factor(f);
      CHECK((expand(fac) == f));
      for (const auto& [g, e] : fac.factors) {
        CHECK(content(g) == 1);
        CHECK(g.back() > 0);
        // degree 2 and 3 factors: irreducible iff no rational root
        if (degree(g) == 2 || degree(g) == 3) CHECK(!has_rational_root(g));
      }
    }
  }

  TEST_CASE("multivariate resultant and discriminant") {
    // Res_Y(Y^2 - X, Y - 2) = 4 - X
    ZPoly X = ZPoly::variable(2, 0), Y = ZPoly::variable(2, 1);
    ZPoly r = resultant_in(Y * Y - X, Y - ZPoly::constant(2, 2), 1);
    CHECK(r == ZPoly::constant(2, 4) - X);
    // Disc_Y(Y^2 - X) = 4X
    CHECK(discriminant_in(Y * Y - X, 1) == ZPoly::constant(2, 4) * X);
    // univariate consistency
    ZPoly T = ZPoly::variable(1, 0);
    ZPoly cubic = T * T * T - ZPoly::constant(1, 3) * T + ZPoly::constant(1, 1);
    CHECK(discriminant_in(cubic, 0) == ZPoly::constant(1, 81));
  }
}
