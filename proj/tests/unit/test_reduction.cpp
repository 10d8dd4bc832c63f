#include <doctest.h>

#include <random>

#include "effkit/poly_algo.hpp"
#include "effkit/reduction.hpp"
#include "effkit/univariate.hpp"

using namespace effkit;

namespace {

ZPoly P(const std::string& s, std::size_t n) { return parse_poly(s, n); }

Presentation sqrt_z() { return Presentation::make(2, 1, {P("X2^2 - X1", 2)}); }
Presentation sqrt2() { return Presentation::make(1, 0, {P("X^2 - 2", 1)}); }
Presentation golden() { return Presentation::make(1, 0, {P("X^2 - X - 1", 1)}); }

FractionRep frac(const std::string& num, const std::string& den, std::size_t n) {
  return {P(num, n), P(den, n)};
}

// Σ F_i Y^{D-i}: F evaluated at the representative of y.
ZPoly F_at_y(const ReducedDomain& rd) {
  ZPoly s(rd.pres.r);
  for (std::size_t i = 0; i <= rd.D(); ++i) s += rd.mp.F[i] * rd.mp.Y.pow(static_cast<unsigned>(rd.D() - i));
  return s;
}

}  // namespace

TEST_SUITE("reduction") {
  TEST_CASE("primitive element examples") {
    auto a = find_primitive(sqrt_z());
    CHECK((a.weights == std::vector<long>{1}));
    CHECK(a.D == 2);
    auto b = find_primitive(sqrt2());
    CHECK(b.D == 2);
    auto c = find_primitive(Presentation::make(2, 1, {P("X2 - X1^3", 2)}));
    CHECK(c.D == 1);
  }

  TEST_CASE("minimal polynomial examples") {
    auto mz = minimal_poly(sqrt_z(), {1});
    REQUIRE(mz);
    CHECK(mz->D == 2);
    CHECK((mz->G == std::vector<ZPoly>{P("1", 2), P("0", 2), P("-X1", 2)}));
    CHECK(mz->F[2] == P("-X1", 2));
    CHECK(mz->Y == P("X2", 2));

    auto m2 = minimal_poly(sqrt2(), {1});
    REQUIRE(m2);
    CHECK((m2->F == std::vector<ZPoly>{P("1", 1), P("0", 1), P("-2", 1)}));

    auto mg = minimal_poly(golden(), {1});
    REQUIRE(mg);
    CHECK((mg->F == std::vector<ZPoly>{P("1", 1), P("-1", 1), P("-1", 1)}));

    auto m1 = minimal_poly(Presentation::make(2, 1, {P("X2 - X1^3", 2)}), {1});
    REQUIRE(m1);
    CHECK(m1->D == 1);
    CHECK(m1->Y == P("1", 2));
    CHECK(m1->F[1] == P("-1", 2));
  }

  TEST_CASE("two algebraic generators") {
    auto p = Presentation::make(2, 0, {P("X1^2 - 2", 2), P("X2^2 - 3", 2)});
    auto rd = reduce_domain(p);
    CHECK(rd.D() == 4);
    CHECK(rd.D() <= 4);  // d^t
    for (long a : rd.weights) CHECK(std::abs(a) <= 16);
    // independent oracle: the minimal polynomial of a1·√2 + a2·√3 by a resultant
    const long a1 = rd.weights[0], a2 = rd.weights[1];
    ZPoly X = P("X1", 2), Yv = P("X2", 2);
    // eliminate √2 = s from T = a1 s + a2 √3: (T - a1 s)^2 = 3 a2^2, s^2 = 2
    ZPoly rel = (X - Yv * mpz_class(a1)).pow(2) - P(std::to_string(3 * a2 * a2), 2);
    ZPoly res = resultant_in(P("X2^2 - 2", 2), rel, 1);
    ZUni oracle = primitive_of(uni_from(res.with_nvars(1)));
    ZPoly F = rd.minimal_polynomial();  // q = 0: one variable T
    CHECK((primitive_of(uni_from(F)) == oracle));
    CHECK(verify_cofactors(p.gens, F_at_y(rd), [&] {
      MembershipOptions o;
      o.ring = CoeffRing::Rational;
      return ideal_membership(p.gens, F_at_y(rd), o).cofactors;
    }()));
  }

  TEST_CASE("fixture domains reduce with F(y) in I") {
    for (const auto& p : {sqrt2(), golden(), sqrt_z()}) {
      auto rd = reduce_domain(p);
      CHECK(rd.D() == 2);
      MembershipOptions o;
      o.ring = CoeffRing::Rational;
      auto m = ideal_membership(p.gens, F_at_y(rd), o);
      REQUIRE(m.verdict == Verdict::Member);
      CHECK(verify_cofactors(p.gens, F_at_y(rd), m.cofactors));
      CHECK(rd.d1() >= rd.d0());
      CHECK(rd.h1() >= rd.h0());
      for (const auto& c : rd.certificates) CHECK(c.holds());
    }
  }

  TEST_CASE("canonical representation examples") {
    auto rd = reduce_domain(sqrt_z());
    auto a = canonical_rep(rd, frac("1 + X2", "X1", 2));
    CHECK((a.rep.P == std::vector<ZPoly>{P("1", 2), P("1", 2)}));
    CHECK(a.rep.Q == P("X1", 2));
    CHECK(a.rep.deg_bar() == 1);
    auto b = canonical_rep(rd, frac("X2", "1", 2));
    CHECK((b.rep.P == std::vector<ZPoly>{P("0", 2), P("1", 2)}));
    CHECK(b.rep.Q == P("1", 2));
    auto c = canonical_rep(rd, frac("1", "X2", 2));
    CHECK((c.rep.P == std::vector<ZPoly>{P("0", 2), P("1", 2)}));
    CHECK(c.rep.Q == P("X1", 2));
    CHECK(verify_cofactors(rd.pres.gens, c.rep.Q * P("1", 2) - P("X2", 2) * (c.rep.P[1] * P("X2", 2)),
                           c.cofactors));
    CHECK_THROWS_AS(canonical_rep(rd, frac("X2^2 - X1", "1", 2)), PreconditionViolation);
  }

  TEST_CASE("canonical representations round trip") {
    std::mt19937 rng(21);
    std::uniform_int_distribution<long> c(-3, 3);
    int checked = 0;
    for (const auto& p : {sqrt2(), golden(), sqrt_z()}) {
      auto rd = reduce_domain(p);
      for (int trial = 0; trial < 12; ++trial) {
        ZPoly num(p.r), den(p.r);
        for (const auto& e : monomials_up_to(p.r, 1)) {
          num.add_term(e, c(rng));
          den.add_term(e, c(rng));
        }
        if (num.is_zero() || den.is_zero()) continue;
        if (element_eq(p, num, ZPoly(p.r)) != Equality::NotEqual) continue;
        if (element_eq(p, den, ZPoly(p.r)) != Equality::NotEqual) continue;
        auto cr = canonical_rep(rd, {num, den});
        std::vector<ZPoly> parts = cr.rep.P;
        parts.push_back(cr.rep.Q);
        CHECK(multipoly_gcd(parts) == ZPoly::constant(p.r, 1));
        CHECK(cr.rep.Q.leading_coeff() > 0);
        CHECK(fraction_eq(p, to_fraction(rd, cr.rep), {num, den}) == Equality::Equal);
        CHECK(cr.cert_deg.holds());
        CHECK(cr.cert_height.holds());
        ++checked;
      }
    }
    CHECK(checked >= 25);
  }

  TEST_CASE("denominator of B") {
    auto rd = reduce_domain(sqrt_z());
    CHECK(build_B(rd, {}) == P("1", 2));
    CHECK(build_B(rd, {frac("X2", "1", 2)}) == P("X1", 2));
    CHECK(build_B(rd, {frac("X1", "1", 2)}) == P("X1", 2));
    CHECK(rd.d1() == 1);
  }

  TEST_CASE("lifting representatives") {
    auto rd = reduce_domain(sqrt2());
    const FractionRep one = frac("1", "1", 1);
    auto beta = canonical_rep(rd, frac("1 + X", "1", 1)).rep;
    auto eps = lift_representative(rd, one, beta);
    REQUIRE(eps);
    CHECK(eps->rep == P("X + 1", 1));
    auto inv = lift_inverse_representative(rd, one, beta);
    REQUIRE(inv);
    CHECK(element_eq(rd.pres, inv->rep, P("X - 1", 1)) == Equality::Equal);

    // λ = 1/2 and λ·ε = 1 give ε = 2
    auto beta1 = canonical_rep(rd, frac("1", "1", 1)).rep;
    auto two = lift_representative(rd, frac("1", "2", 1), beta1);
    REQUIRE(two);
    CHECK(two->rep == P("2", 1));
    CHECK(two->cert_deg.holds());
    CHECK(two->cert_height.holds());
  }

  TEST_CASE("trivial reduction for t = 0") {
    auto rd = reduce_domain(Presentation::make(1, 1, {}));
    CHECK(rd.D() == 1);
    CHECK(rd.mp.Y == P("1", 1));
  }
}
