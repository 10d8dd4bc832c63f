#include <doctest.h>

#include <random>

#include "effkit/poly_algo.hpp"
#include "effkit/specialization.hpp"

using namespace effkit;

namespace {

ZPoly P(const std::string& s, std::size_t n) { return parse_poly(s, n); }

ReducedDomain sqrt_z_domain() {
  auto rd = reduce_domain(Presentation::make(2, 1, {P("X2^2 - X1", 2)}));
  build_B(rd, {{P("X2", 2), P("1", 2)}});  // f = z
  return rd;
}
ReducedDomain sqrt2_domain() { return reduce_domain(Presentation::make(1, 0, {P("X^2 - 2", 1)})); }
ReducedDomain golden_domain() { return reduce_domain(Presentation::make(1, 0, {P("X^2 - X - 1", 1)})); }

CanonicalRep rep(const ReducedDomain& rd, const std::string& num, const std::string& den = "1") {
  return canonical_rep(rd, {P(num, rd.pres.r), P(den, rd.pres.r)}).rep;
}

std::vector<mpz_class> pt(std::initializer_list<long> xs) {
  std::vector<mpz_class> u;
  for (long x : xs) u.emplace_back(x);
  return u;
}

bool contains(const Interval& iv, double x, double tol = 1e-12) {
  return iv.lo().to_double() <= x + tol && x - tol <= iv.hi().to_double() &&
         iv.width().to_double() < 1e-20;
}

// Random element of B: A0-coefficients of degree ≤ 1 over Q = f^k.
CanonicalRep random_element(const ReducedDomain& rd, std::mt19937& rng) {
  std::uniform_int_distribution<long> c(-3, 3), k(0, 1);
  std::vector<ZPoly> Ps(rd.D(), ZPoly(rd.pres.r));
  for (auto& p : Ps) {
    p = ZPoly::constant(rd.pres.r, c(rng));
    for (std::size_t i = 0; i < rd.q(); ++i) p += ZPoly::variable(rd.pres.r, i) * mpz_class(c(rng));
  }
  if (std::all_of(Ps.begin(), Ps.end(), [](const ZPoly& p) { return p.is_zero(); })) {
    Ps[0] = ZPoly::constant(rd.pres.r, 1);
  }
  ZPoly Q = k(rng) ? rd.f : ZPoly::constant(rd.pres.r, 1);
  return normalize_rep(std::move(Ps), std::move(Q));
}

}  // namespace

TEST_SUITE("specialization") {
  TEST_CASE("algebraic numbers") {
    auto r2 = roots_of(ZUni{-2, 0, 1});
    REQUIRE(r2.size() == 2);
    CHECK(r2[0].box().re_hi < 0);  // canonical order: negative root first
    CHECK(r2[1] * r2[1] == AlgebraicNumber::rational(2));
    CHECK(r2[0] + r2[1] == AlgebraicNumber::rational(0));
    CHECK(inverse(r2[1]) * r2[1] == AlgebraicNumber::rational(1));
    auto r3 = roots_of(ZUni{-3, 0, 1});
    const auto s = r2[1] + r3[1];
    CHECK((s.minpoly() == ZUni{1, 0, -10, 0, 1}));
    CHECK(s - r3[1] == r2[1]);
    auto w = roots_of(ZUni{1, 1, 1});
    CHECK(w[0] * w[0] == w[1]);
    CHECK(w[0] * w[1] == AlgebraicNumber::rational(1));
    // every root of x^5 - x - 1 satisfies the polynomial exactly
    for (const auto& a : roots_of(ZUni{-1, -1, 0, 0, 0, 1})) {
      CHECK(a * a * a * a * a - a == AlgebraicNumber::rational(1));
    }
  }

  TEST_CASE("heights of algebraic numbers") {
    CHECK(contains(alg_height_interval(AlgebraicNumber::rational(2)), std::log(2.0)));
    CHECK(contains(alg_height_interval(AlgebraicNumber::rational(mpq_class(9, 8))), std::log(9.0)));
    CHECK(contains(alg_height_interval(roots_of(ZUni{-2, 0, 1})[1]), 0.5 * std::log(2.0)));
    CHECK(contains(alg_height_interval(roots_of(ZUni{1, 1, 1})[0]), 0.0));
    CHECK(alg_height(AlgebraicNumber::rational(1)).is_zero());
  }

  TEST_CASE("the polynomial H") {
    auto rd = sqrt_z_domain();
    CHECK(rd.f == P("X1", 2));
    CHECK(build_H(rd) == P("-4*X1^3", 1));
    auto one = reduce_domain(Presentation::make(2, 1, {P("X2 - X1^3", 2)}));
    REQUIRE(one.D() == 1);
    CHECK(build_H(one) == one.mp.F[1].with_nvars(1));
    auto r2 = sqrt2_domain();
    r2.f = ZPoly::constant(1, 3);
    CHECK(build_H(r2) == ZPoly::constant(0, -48));
  }

  TEST_CASE("good points and zero counts") {
    CHECK((find_good_point(P("-4*X1^3", 1), 1) == pt({-1})));
    CHECK((find_good_point(P("X1*X2", 2), 1) == pt({-1, -1})));
    CHECK_THROWS_AS(find_good_point(P("X1", 1), 0), SearchExhausted);
    auto zc = count_zeros(P("X1^2 - 1", 1), 5);
    CHECK(zc.zeros == 2);
    CHECK(zc.bound == 2);

    std::mt19937 rng(17);
    std::uniform_int_distribution<long> c(-2, 2), nv(1, 2), dg(1, 4);
    int tested = 0;
    while (tested < 100) {
      const std::size_t q = static_cast<std::size_t>(nv(rng));
      const int d = static_cast<int>(dg(rng));
      ZPoly g(q);
      for (const auto& e : monomials_up_to(q, d)) g.add_term(e, c(rng));
      if (g.is_zero()) continue;
      const long N = std::max(g.degree(), 0) + 1;
      auto z = count_zeros(g, N);
      CHECK(z.zeros <= z.bound);
      ++tested;
    }
  }

  TEST_CASE("specialization examples") {
    auto rd = sqrt_z_domain();
    auto fib = make_fiber(rd, pt({4}));
    REQUIRE(fib.roots.size() == 2);
    CHECK(fib.roots[0] == AlgebraicNumber::rational(-2));
    CHECK(fib.roots[1] == AlgebraicNumber::rational(2));
    CHECK(specialize(rd, fib, 1, rep(rd, "X2")) == AlgebraicNumber::rational(2));
    CHECK(specialize(rd, fib, 0, rep(rd, "X1 + X2")) == AlgebraicNumber::rational(2));
    CHECK(specialize(rd, fib, 1, rep(rd, "1", "X2")) == AlgebraicNumber::rational(mpq_class(1, 2)));
    CHECK_THROWS_AS(make_fiber(rd, pt({0})), PreconditionViolation);
    // z^{-2} is in B, but a denominator vanishing at u is refused
    auto fib0 = make_fiber(rd, pt({2}));
    CHECK(specialize(rd, fib0, 0, rep(rd, "X2")) * specialize(rd, fib0, 0, rep(rd, "X2")) ==
          AlgebraicNumber::rational(2));
  }

  TEST_CASE("homomorphism property on random pairs") {
    std::mt19937 rng(99);
    int checked = 0;
    auto run = [&](const ReducedDomain& rd, const std::vector<mpz_class>& u, int pairs) {
      const auto fib = make_fiber(rd, u);
      for (int t = 0; t < pairs; ++t) {
        const auto a = random_element(rd, rng), b = random_element(rd, rng);
        for (std::size_t j = 0; j < fib.roots.size(); ++j) {
          const auto h = check_homomorphism(rd, fib, j, a, b);
          CHECK(h.sum);
          CHECK(h.product);
          ++checked;
        }
      }
    };
    run(sqrt2_domain(), {}, 30);
    run(golden_domain(), {}, 30);
    auto rz = sqrt_z_domain();
    run(rz, find_good_point(build_H(rz), 3), 25);
    run(rz, pt({4}), 15);
    run(rz, pt({-3}), 15);
    const auto biquad = reduce_domain(Presentation::make(2, 0, {P("X1^2 - 2", 2), P("X2^2 - 3", 2)}));
    REQUIRE(biquad.D() == 4);
    run(biquad, {}, 10);
    CHECK(checked >= 200);
  }

  TEST_CASE("units specialize to nonzero numbers") {
    auto rd = sqrt2_domain();
    const auto eps = rep(rd, "1 + X"), inv = rep(rd, "X - 1");
    CHECK(b_mul(rd, eps, inv).P[0] == ZPoly::constant(1, 1));
    auto fib = make_fiber(rd, {});
    for (std::size_t j = 0; j < fib.roots.size(); ++j) CHECK(!specialize(rd, fib, j, eps).is_zero());
    auto rz = sqrt_z_domain();
    auto fz = make_fiber(rz, pt({3}));
    for (std::size_t j = 0; j < 2; ++j) CHECK(!specialize(rz, fz, j, rep(rz, "X2")).is_zero());
  }

  TEST_CASE("root heights of integer polynomials") {
    CHECK(verify_root_height_sum(ZUni{2, -3, 1}).holds());
    CHECK(verify_root_height_sum(ZUni{-2, 0, 1}).holds());
    CHECK(verify_root_height_sum(ZUni{-7, 1}).holds());
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> c(-9, 9), dg(1, 5);
    for (int t = 0; t < 60; ++t) {
      ZUni G;
      for (long k = dg(rng); k > 0; --k) G.emplace_back(c(rng));
      G.emplace_back(1);
      auto r = verify_root_height_sum(G);
      INFO(r.describe());
      CHECK(r.holds());
    }
  }

  TEST_CASE("coefficient reconstruction") {
    auto one = reconstruct_coeffs(ZUni{0, 1}, {AlgebraicNumber::rational(0)}, {AlgebraicNumber::rational(5)});
    CHECK(one.q == 1);
    CHECK((one.p == std::vector<mpz_class>{5}));
    CHECK(one.report.holds());

    const ZUni G{-2, 0, 1};
    auto r = roots_of(G);  // (-√2, √2)
    const auto half = AlgebraicNumber::rational(mpq_class(1, 2));
    const auto three_half = AlgebraicNumber::rational(mpq_class(3, 2));
    auto b = reconstruct_coeffs(G, {r[1], r[0]}, {half + three_half * r[1], half + three_half * r[0]});
    CHECK(b.q == 2);
    CHECK((b.p == std::vector<mpz_class>{1, 3}));
    CHECK(b.report.holds());
    // the right side is 8 + log 2 + log 17
    CHECK(contains(b.report.rhs, 8 + std::log(2.0) + std::log(17.0)));

    auto c = reconstruct_coeffs(G, {r[1], r[0]}, {r[1], r[0]});
    CHECK(c.q == 1);
    CHECK((c.p == std::vector<mpz_class>{0, 1}));
    auto s3 = roots_of(ZUni{-3, 0, 1});
    CHECK_THROWS_AS(reconstruct_coeffs(G, {r[1], r[0]}, {s3[1], s3[0]}), NotRepresentable);
  }

  TEST_CASE("coefficients from values") {
    auto a = coeff_bound_from_values(P("X1", 1), P("1", 1), 1);
    CHECK(a[0].place == 0);
    CHECK(a[0].lhs == 1);
    CHECK(a[0].rhs == 4);
    for (const auto& c : a) CHECK(c.holds());

    auto b = coeff_bound_from_values(P("2*X1^2 - 2", 1), P("X1", 1), 2);
    const auto two = std::find_if(b.begin(), b.end(), [](const PlaceCheck& c) { return c.place == 2; });
    REQUIRE(two != b.end());
    CHECK(two->lhs == mpq_class(1, 2));
    CHECK(two->rhs == mpq_class(256));  // (4N)^{qD1(D1+1)/2} = 8^3, max |6|_2 = 1/2
    for (const auto& c : b) CHECK(c.holds());

    auto s = coeff_bound_from_values(P("7", 1), P("1", 1), 1);
    const auto seven = std::find_if(s.begin(), s.end(), [](const PlaceCheck& c) { return c.place == 7; });
    REQUIRE(seven != s.end());
    CHECK(seven->lhs == seven->rhs);

    std::mt19937 rng(31);
    std::uniform_int_distribution<long> c(-12, 12), nv(1, 2), dg(0, 2);
    for (int t = 0; t < 40; ++t) {
      const std::size_t q = static_cast<std::size_t>(nv(rng));
      ZPoly g1(q), g2(q);
      for (const auto& e : monomials_up_to(q, static_cast<int>(dg(rng)))) g1.add_term(e, c(rng));
      for (const auto& e : monomials_up_to(q, static_cast<int>(dg(rng)))) g2.add_term(e, c(rng));
      if (g1.is_zero() || g2.is_zero()) continue;
      const long N = std::max({g1.degree(), g2.degree(), 1});
      for (const auto& pc : coeff_bound_from_values(g1, g2, N)) CHECK(pc.holds());
    }
  }

  TEST_CASE("specialized height bounds") {
    auto rz = sqrt_z_domain();
    for (long u : {4, 2, -3, 7}) {
      auto fib = make_fiber(rz, pt({u}));
      for (const auto& a : {rep(rz, "X2"), rep(rz, "1"), rep(rz, "X1 + X2", "X1"), rep(rz, "17*X1 + 3")}) {
        for (const auto& r : verify_specialized_heights(rz, fib, a)) {
          INFO(r.describe());
          CHECK(r.holds());
        }
      }
    }
    auto r2 = sqrt2_domain();
    auto f2 = make_fiber(r2, {});
    const auto eps = rep(r2, "1 + X");
    for (const auto& r : verify_specialized_heights(r2, f2, eps)) CHECK(r.holds());
    // h(1+√2) = ½ log(1+√2)·2 / 2: Mahler measure of x^2 - 2x - 1 is 1+√2
    CHECK(contains(alg_height_interval(specialize(r2, f2, 1, eps)), 0.5 * std::log(1 + std::sqrt(2.0))));
  }

  TEST_CASE("height lifting bound") {
    auto rz = sqrt_z_domain();
    for (const auto& a : {rep(rz, "X2"), rep(rz, "17*X1 + 3")}) {
      auto r = verify_height_lift(rz, a);
      INFO(r.describe());
      CHECK(r.holds());
    }
    auto one = reduce_domain(Presentation::make(2, 1, {P("X2 - X1^3", 2)}));
    auto r = verify_height_lift(one, rep(one, "X1"));
    CHECK(r.holds());
    CHECK(height_lift_N(one, rep(one, "X1")) == 2 * 1 * 1 + 2 * 2 * (static_cast<long>(one.d1()) + 1));
  }

  TEST_CASE("discriminant bounds") {
    auto rz = sqrt_z_domain();
    auto fib = make_fiber(rz, pt({5}));
    auto reps = verify_discriminants(rz, fib);
    REQUIRE(reps.size() == 2);
    for (const auto& r : reps) {
      CHECK(contains(r.lhs, std::log(20.0)));
      CHECK(r.holds());
    }
    auto r2 = sqrt2_domain();
    for (const auto& r : verify_discriminants(r2, make_fiber(r2, {}))) {
      CHECK(contains(r.lhs, std::log(8.0)));
      CHECK(r.holds());
    }
    auto one = reduce_domain(Presentation::make(2, 1, {P("X2 - X1^3", 2)}));
    for (const auto& r : verify_discriminants(one, make_fiber(one, pt({1})))) CHECK(r.holds());
  }
}
