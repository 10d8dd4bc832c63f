#include <doctest.h>

#include "effkit/integer.hpp"
#include "effkit/log_value.hpp"
#include "effkit/poly_algo.hpp"
#include "support/random.hpp"

using namespace effkit;
using effkit::testing::Rng;

namespace {
ZPoly P(const std::string& s, std::size_t n = 0) { return parse_poly(s, n); }
}  // namespace

TEST_SUITE("core_arith") {

TEST_CASE("measures of small polynomials") {
  auto t = poly_measures(P("3*X1^2 - 5*X1 + 2"));
  CHECK(t.deg == 2);
  CHECK(t.height == 5);
  CHECK(t.s == Size::of_int(2));

  t = poly_measures(P("1", 1));
  CHECK(t.deg == 0);
  CHECK(t.height == 1);
  CHECK(t.s == Size::of_int(1));

  t = poly_measures(P("X1*X2 - 7"));
  CHECK(t.deg == 2);
  CHECK(t.height == 7);
  CHECK(t.s == Size::of_int(2));  // log 7 ≈ 1.95 < 2

  t = poly_measures(P("X1 + 8"));
  CHECK(t.s == Size::of_log(8));  // log 8 ≈ 2.08 > 1
  CHECK(Size::of_log(8) > Size::of_int(2));
  CHECK(Size::of_log(7) < Size::of_int(2));

  t = poly_measures(ZPoly(2));
  CHECK(t.deg == kDegZero);
  CHECK(t.h().is_zero());
}

TEST_CASE("ring operations") {
  CHECK(P("X1+1") * P("X1-1") == P("X1^2-1"));
  ZPoly f = P("X1^2-2");
  CHECK(f.substitute({ZPoly::constant(1, 2)}) == ZPoly::constant(1, 2));
  CHECK(P("X1+X2") + P("-X2", 2) == P("X1", 2));
  CHECK(P("X1+X2").pow(3) == P("X1^3 + 3*X1^2*X2 + 3*X1*X2^2 + X2^3"));
  // Substitution composes: f(X+1) evaluated at 1 equals f(2).
  ZPoly g = f.substitute({P("X1+1")});
  CHECK(g.evaluate({mpz_class(1)}) == f.evaluate({mpz_class(2)}));
}

TEST_CASE("parser and printer round trip") {
  CHECK(to_string(P("3*X1^2*X2 - 5")) == "3*X1^2*X2 - 5");
  CHECK(to_string(P("(X1+1)^2")) == "X1^2 + 2*X1 + 1");
  CHECK(P("2 X1 X2") == P("2*X1*X2"));
  CHECK(P("z1^2 - z2") == P("X1^2 - X2"));
  CHECK(P("Y^2 - z1", 2) == P("X2^2 - X1"));
  CHECK(to_string(parse_qpoly("1/2*X1 + 3/4")) == "1/2*X1 + 3/4");
  VarNames z{"z", true};
  CHECK(to_string(P("z^2 - 1"), z) == "z^2 - 1");
  CHECK_THROWS_AS(parse_poly("X1 +* 2"), BadInput);
  CHECK_THROWS_AS(parse_poly("1/2*X1"), BadInput);
  CHECK_THROWS_AS(parse_poly("X3", 2), BadInput);

  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    ZPoly f = rng.poly(3, 4, 20);
    CHECK(parse_poly(to_string(f), 3) == f);
  }
}

TEST_CASE("gcd examples") {
  CHECK(multipoly_gcd(P("X^2-1"), P("X^2-2*X+1")) == P("X-1"));
  CHECK(multipoly_gcd(ZPoly::constant(1, 4), ZPoly::constant(1, 6)) == ZPoly::constant(1, 2));
  CHECK(multipoly_gcd(P("2*X+2"), P("4*X^2-4")) == P("2*X+2"));
  CHECK(multipoly_gcd(P("-X1*X2 - X2"), P("X1^2*X2 - X2")) == P("X1*X2 + X2"));
  CHECK(multipoly_gcd(P("X1", 2), P("X2")) == P("1", 2));
}

TEST_CASE("gcd divides both inputs and contains planted factors") {
  Rng rng(2024);
  for (int i = 0; i < 300; ++i) {
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    ZPoly c = rng.nonzero_poly(n, 2, 4);
    ZPoly a = rng.nonzero_poly(n, 2, 5) * c;
    ZPoly b = rng.nonzero_poly(n, 2, 5) * c;
    ZPoly g = multipoly_gcd(a, b);
    REQUIRE(!g.is_zero());
    CHECK(g.leading_coeff() > 0);
    CHECK(exact_divide(a, g).has_value());
    CHECK(exact_divide(b, g).has_value());
    CHECK(exact_divide(g, c).has_value());
  }
}

TEST_CASE("exact division") {
  CHECK(exact_divide(P("X^2-1"), P("X-1")) == std::optional<ZPoly>(P("X+1")));
  CHECK(!exact_divide(P("X^2-1"), P("X-2")).has_value());
  CHECK(!exact_divide(P("X+1"), P("2", 1)).has_value());
  CHECK(exact_divide(parse_qpoly("X+1"), parse_qpoly("2", 1)).has_value());
}

TEST_CASE("product height inequality") {
  // |h(prod g_i) - sum h(g_i)| ≤ q·deg(prod g_i), decided on integers.
  Rng rng(7);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    std::size_t q = static_cast<std::size_t>(rng.uniform(1, 3));
    int count = static_cast<int>(rng.uniform(2, 3));
    ZPoly prod = ZPoly::constant(q, 1);
    mpz_class hprod = 1;
    for (int k = 0; k < count; ++k) {
      ZPoly g = rng.nonzero_poly(q, static_cast<int>(rng.uniform(0, 5 / count + 1)), 9, 0.6);
      prod *= g;
      hprod *= max_abs_coeff(g);
    }
    long bound = static_cast<long>(q) * prod.degree();
    mpz_class H = max_abs_coeff(prod);
    CHECK(le_exp_times(H, bound, hprod));
    CHECK(le_exp_times(hprod, bound, H));
    ++checked;
  }
  CHECK(checked == 1000);
}

TEST_CASE("evaluation with bounds") {
  auto r = poly_eval_int(P("X1*X2+1"), {2, 3});
  CHECK(r.value == 7);
  CHECK(r.stated_bound == 36);
  CHECK(r.within_stated_bound);

  r = poly_eval_int(P("5", 1), {0});
  CHECK(r.value == 5);
  CHECK(r.stated_bound == 5);
  CHECK(r.within_stated_bound);

  r = poly_eval_int(P("X1^3 - X1"), {-3});
  CHECK(r.value == -24);
  CHECK(r.stated_bound == 81);
  CHECK(r.within_stated_bound);
}

TEST_CASE("the stated evaluation bound misses the term count") {
  // q·log deg g + h(g) + deg g·log max(1,|u|) omits the number of terms:
  // z+1 at u=1 gives log 2 against a bound of 0.
  auto r = poly_eval_int(P("X1+1"), {1});
  CHECK(r.value == 2);
  CHECK(r.stated_bound == 1);
  CHECK_FALSE(r.within_stated_bound);
  CHECK(abs(r.value) <= r.term_count_bound);
}

TEST_CASE("evaluation bound with the term count holds on random instances") {
  Rng rng(99);
  int stated_failures = 0;
  for (int i = 0; i < 1000; ++i) {
    std::size_t q = static_cast<std::size_t>(rng.uniform(1, 3));
    ZPoly g = rng.poly(q, static_cast<int>(rng.uniform(0, 5)), 30);
    std::vector<mpz_class> u;
    for (std::size_t k = 0; k < q; ++k) u.emplace_back(rng.uniform(-6, 6));
    auto r = poly_eval_int(g, u);
    CHECK(r.value == g.evaluate(u));
    CHECK(abs(r.value) <= r.term_count_bound);
    if (!r.within_stated_bound) ++stated_failures;
  }
  MESSAGE("stated-bound misses on random instances: " << stated_failures);
}

TEST_CASE("polynomials of bounded size: count matches (2B+1)^M - 1") {
  for (std::size_t n = 1; n <= 2; ++n) {
    for (long sigma = 1; sigma <= 2; ++sigma) {
      const long B = floor_exp(sigma).get_si();  // 2 for sigma 1, 7 for sigma 2
      const long M = static_cast<long>(monomials_up_to(n, static_cast<int>(sigma)).size());
      mpz_class expected = ipow(mpz_class(2 * B + 1), static_cast<unsigned long>(M)) - 1;
      bool all_small = true;
      std::size_t visited = for_each_poly_of_size(n, sigma, [&](const ZPoly& f) {
        if (n == 1 && !(poly_measures(f).s <= Size::of_int(sigma))) all_small = false;
      });
      CHECK(mpz_class(static_cast<unsigned long>(visited)) == expected);
      CHECK(all_small);
    }
  }
  CHECK(floor_exp(1) == 2);
  CHECK(floor_exp(2) == 7);
  CHECK(floor_exp(3) == 20);
}

TEST_CASE("size ordering of the enumeration") {
  auto polys = polys_of_size(1, 1);
  CHECK(polys.size() == 24);
  for (std::size_t i = 1; i < polys.size(); ++i) {
    CHECK(poly_measures(polys[i - 1]).s <= poly_measures(polys[i]).s);
  }
}

TEST_CASE("integer factorization") {
  auto f = factor_integer(mpz_class(360));
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::make_pair(mpz_class(2), 3U));
  CHECK(f[1] == std::make_pair(mpz_class(3), 2U));
  CHECK(f[2] == std::make_pair(mpz_class(5), 1U));
  // Product of two primes above the trial-division limit.
  mpz_class p("1000003"), q("1000033");
  auto g = factor_integer(p * q * 4);
  REQUIRE(g.size() == 3);
  CHECK(g[1].first == p);
  CHECK(g[2].first == q);
  CHECK(valuation(mpz_class(48), mpz_class(2)) == 4);
}

TEST_CASE("exact log comparison") {
  CHECK(le_exp_times(2, 1, 1));   // 2 ≤ e
  CHECK(!le_exp_times(3, 1, 1));  // 3 > e
  CHECK(le_exp_times(7, 2, 1));
  CHECK(!le_exp_times(8, 2, 1));
  CHECK(le_exp_times(5, 0, 5));
}

TEST_CASE("LogValue arithmetic and ordering") {
  LogValue a = LogValue::from_log(BigFloat(32.0));
  LogValue b = LogValue::from_int(mpz_class(100));
  CHECK(b < a);
  CHECK((a * b).log() == add(BigFloat(32.0), log(BigFloat(100.0))));
  // Round trip log(exp(x)) = x for x up to 1e100.
  for (double x : {0.5, 1.0, 1e10, 1e50, 1e100}) {
    BigFloat bx(x);
    CHECK(LogValue::from_log(bx).log() == bx);
  }
  LogValue tower = LogValue::from_loglog(BigFloat(1e9));
  CHECK(tower.is_loglog());
  CHECK(a < tower);
  CHECK(LogValue::zero() < LogValue::from_rat(mpq_class(1, 3)));
  LogValue p = LogValue::from_int(mpz_class(2)).pow(BigFloat(10.0));
  CHECK(abs(sub(p.value(), BigFloat(1024.0))) < BigFloat(1e-60));
  CHECK(log_star(BigFloat(2.0)) == BigFloat(1.0));
  CHECK(log_star_int(0) == BigFloat(1.0));
}

}  // TEST_SUITE
