#include <doctest.h>

#include <random>
#include <set>

#include "effkit/effective_bounds.hpp"
#include "effkit/function_field.hpp"
#include "support/oracles.hpp"

using namespace effkit;
using namespace effkit::testing;

namespace doctest {
template <>
struct StringMaker<std::set<std::string>> {
  static String convert(const std::set<std::string>& s) {
    std::string out = "{";
    for (const auto& x : s) out += " " + x + ";";
    return (out + " }").c_str();
  }
};
}  // namespace doctest

namespace {

FFElement E(const std::string& num, const std::string& den = "1") {
  return FFElement::from_text(num, den);
}

QUni Q(std::initializer_list<long> cs) {
  QUni f;
  for (long c : cs) f.emplace_back(c);
  return trimmed(f);
}
std::set<std::string> found(const FFSolveResult& r) {
  std::set<std::string> s;
  for (const auto& sol : r.solutions) s.insert(sol.x.str());
  return s;
}

}  // namespace

TEST_SUITE("function_field") {
  TEST_CASE("valuations") {
    const FFElement x = E("z", "z - 1");
    CHECK(ff_valuation(x, parse_place("z")) == 1);
    CHECK(ff_valuation(x, parse_place("z - 1")) == -1);
    CHECK(ff_valuation(x, infinite_place()) == 0);
    for (const auto& v : parse_places("inf,z,z-1,z^2+1")) CHECK(ff_valuation(E("5"), v) == 0);
    const FFElement w = E("z^2 + 1", "z^3");
    CHECK(ff_valuation(w, parse_place("z^2+1")) == 1);
    CHECK(ff_valuation(w, parse_place("z")) == -3);
    CHECK(ff_valuation(w, infinite_place()) == 1);
    CHECK(weighted_valuation_sum(w) == 0);
    CHECK_THROWS_AS(parse_place("z^2 - 1"), BadInput);
    CHECK_THROWS_AS(parse_places("inf,z,z"), BadInput);
  }

  TEST_CASE("weighted sum formula on random elements") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<long> c(-6, 6), deg(0, 4);
    int tested = 0;
    while (tested < 500) {
      QUni num, den;
      for (long k = deg(rng); k >= 0; --k) num.emplace_back(c(rng));
      for (long k = deg(rng); k >= 0; --k) den.emplace_back(c(rng));
      num = trimmed(num);
      den = trimmed(den);
      if (num.empty() || den.empty()) continue;
      CHECK(weighted_valuation_sum(FFElement(num, den)) == 0);
      ++tested;
    }
  }

  TEST_CASE("heights") {
    CHECK(ff_height(E("z", "z - 1")) == 1);
    CHECK(ff_height(E("7")) == 0);
    CHECK(ff_height(std::vector<QUni>{Q({-1, 0, 1}), Q({1, 1})}) == 1);
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> c(-5, 5);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<QUni> t(3);
      for (auto& f : t) f = trimmed(QUni{c(rng), c(rng), c(rng)});
      if (std::all_of(t.begin(), t.end(), [](const QUni& f) { return f.empty(); })) continue;
      mpq_class alpha(c(rng) == 0 ? 3 : c(rng), 7);
      if (alpha == 0) alpha = 2;
      std::vector<QUni> s = t;
      for (auto& f : s) f = f * QUni{alpha};
      CHECK(ff_height(s) == ff_height(t));
      // a common polynomial factor does not change the point
      std::vector<QUni> u = t;
      for (auto& f : u) f = f * Q({1, 1});
      CHECK(ff_height(u) == ff_height(t));
    }
  }

  TEST_CASE("Mason and genus formulas") {
    CHECK(mason_bound(3, 0) == 1);
    CHECK(mason_bound(2, 0) == 0);
    CHECK(mason_bound(4, 1) == 4);
    CHECK(genus_bound(2, 2, 1) == 2);
    CHECK(genus_bound(1, 5, 9) == 0);
    CHECK(genus_bound(3, 1, 2) == 4);
    CHECK(degree_bound_3_13(1, 2, 1) == 16);  // 4·1·2²·1
    CHECK(degree_bound_3_13(0, 3, 5) == 0);
    CHECK(degree_bound_3_13(2, 2, 3) == 96);
  }

  TEST_CASE("S-unit equation with three places") {
    const auto S = parse_places("inf,z,z-1");
    const auto r = solve_ff_sunit(S);
    CHECK(r.bound == 1);
    REQUIRE(r.solutions.size() == 6);
    const std::set<std::string> expected{
        E("z").str(),         E("1 - z").str(),      E("1", "z").str(),
        E("z - 1", "z").str(), E("z", "z - 1").str(), E("-1", "z - 1").str()};
    CHECK(found(r) == expected);
    for (const auto& s : r.solutions) {
      CHECK(s.height == 1);
      CHECK(s.x + s.y == E("1"));
      CHECK(is_s_unit(s.x, S));
      CHECK(is_s_unit(s.y, S));
    }
    CHECK(ff_brute_force(S, r.bound + 2) == expected);
  }

  TEST_CASE("S-unit equation: small and larger place sets") {
    CHECK(solve_ff_sunit(parse_places("inf,z")).solutions.empty());
    CHECK_THROWS_AS(solve_ff_sunit(parse_places("z,z-1")), PreconditionViolation);

    const auto S4 = parse_places("inf,z,z+1,z-1");
    const auto r4 = solve_ff_sunit(S4);
    CHECK(r4.bound == 2);
    CHECK(!r4.solutions.empty());
    for (const auto& s : r4.solutions) CHECK(s.height <= 2);
    CHECK(found(r4) == ff_brute_force(S4, r4.bound + 2));

    const auto S3 = parse_places("inf,z,z^2+1");
    const auto r3 = solve_ff_sunit(S3);
    CHECK(r3.bound == 2);
    for (const auto& s : r3.solutions) CHECK(s.height <= 2);
    CHECK(found(r3) == ff_brute_force(S3, r3.bound + 2));
  }

  TEST_CASE("root heights") {
    CHECK(root_height_sum({E("z"), E("1")}).height_sum == 1);
    auto two = root_height_sum({E("z"), E("z^2")});
    CHECK(two.height_sum == 3);
    CHECK(two.max_coeff_degree == 3);
    CHECK(root_height_sum({E("1"), E("2")}).height_sum == 0);
    CHECK_THROWS_AS(root_height_sum({E("1", "z")}), PreconditionViolation);
  }
}
