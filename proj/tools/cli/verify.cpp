#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "commands.hpp"
#include "effkit/errors.hpp"
#include "effkit/function_field.hpp"
#include "effkit/integer.hpp"
#include "effkit/poly_algo.hpp"
#include "effkit/solvers.hpp"
#include "effkit/specialization.hpp"

namespace effkit::cli {

namespace {

// Collects the outcome of one fixture.
struct Checks {
  std::vector<std::string> lines;
  bool ok = true;
  void operator()(bool cond, const std::string& what) {
    lines.push_back(std::string(cond ? "passed: " : "FAILED: ") + what);
    ok = ok && cond;
  }
};

IntVector int_vector_from(const json& j) {
  if (!j.is_array()) throw BadInput("expected an integer array");
  IntVector v;
  for (const auto& x : j) v.emplace_back(x.get<long>());
  return v;
}

mpq_class rat(const json& j) {
  return j.is_number_integer() ? mpq_class(j.get<long>()) : parse_rational(j.get<std::string>());
}

std::vector<mpq_class> rats(const json& j) {
  std::vector<mpq_class> out;
  for (const auto& x : j) out.push_back(rat(x));
  return out;
}

LogValue log_height(const mpz_class& H) { return LogValue::from_value(log_int(H, MPFR_RNDU)); }

std::string vec_key(std::span<const mpz_class> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

ZPoly elem(const json& j, const char* key, std::size_t r) {
  return j.contains(key) ? poly_from(j[key], r) : ZPoly::constant(r, 1);
}

ReducedDomain reduced(const json& fx) {
  Presentation p = presentation_from(fx.at("pres"));
  ReducedDomain rd = reduce_domain(p);
  if (fx.contains("B_alphas")) {
    std::vector<FractionRep> alphas;
    for (const auto& a : fx["B_alphas"]) alphas.push_back(fraction_from(a, p.r));
    build_B(rd, alphas);
  }
  return rd;
}

std::string rep_text(const CanonicalRep& c) { return canonical_json(c).dump(); }

// ---- fixture kinds ------------------------------------------------------------

void check_ff_sunit(const json& fx, Checks& check) {
  auto S = parse_places(fx.at("places").get<std::string>());
  auto res = solve_ff_sunit(S);
  const FFElement one = FFElement::constant(1);
  std::set<std::string> expected, found;
  for (const auto& s : fx.at("solutions")) {
    auto x = FFElement::from_text(s.at("x").at("num"), s.at("x").at("den"));
    auto y = FFElement::from_text(s.at("y").at("num"), s.at("y").at("den"));
    long h = s.at("height").get<long>();
    check(x + y == one && is_s_unit(x, S) && is_s_unit(y, S) &&
              std::max(ff_height(x), ff_height(y)) == h && h <= res.bound,
          "fixture solution x = " + x.str() + " verifies with height " + std::to_string(h));
    expected.insert(x.str());
  }
  for (const auto& s : res.solutions) found.insert(s.x.str());
  check(found == expected, "solver returns exactly the " + std::to_string(expected.size()) +
                               " fixture solutions (found " + std::to_string(found.size()) + ")");
}

void check_sunit_q(const json& fx, Checks& check) {
  RationalSUnitProblem prob;
  for (const auto& p : fx.at("primes")) prob.primes.emplace_back(p.get<long>());
  auto abc = rats(fx.at("abc"));
  prob.a = abc.at(0);
  prob.b = abc.at(1);
  prob.c = abc.at(2);
  prob.cap = fx.at("cap").get<unsigned long>();
  auto res = solve_sunit_q(prob);

  std::set<std::string> expected, found;
  for (const auto& s : fx.at("solutions")) {
    mpq_class eps = rat(s.at("eps")), eta = rat(s.at("eta"));
    IntVector e = int_vector_from(s.at("exponents"));
    int sign = s.at("sign").get<int>();
    bool ok = e.size() == prob.primes.size() && (sign == 1 || sign == -1);
    mpq_class prod = sign;
    for (std::size_t i = 0; ok && i < e.size(); ++i) {
      mpz_class k = e[i];
      prod *= power_product(std::vector<mpq_class>{mpq_class(prob.primes[i])},
                            std::vector<mpz_class>{k});
    }
    ok = ok && prod == eps && prob.a * eps + prob.b * eta == prob.c &&
         is_s_unit_q(eta, prob.primes) &&
         log_height(rational_height(prob.a * eps / prob.c)) <= res.bound &&
         log_height(rational_height(prob.b * eta / prob.c)) <= res.bound;
    const std::string key = eps.get_str() + "|" + eta.get_str() + "|" + vec_key(e);
    check(ok, "fixture solution " + key + " verifies");
    expected.insert(key);
  }
  for (const auto& s : res.solutions) {
    found.insert(s.eps.get_str() + "|" + s.eta.get_str() + "|" + vec_key(s.exponents));
  }
  check(found == expected, "solver returns exactly the fixture solutions (" +
                               std::to_string(found.size()) + " found, " +
                               std::to_string(expected.size()) + " listed)");
  if (fx.contains("must_include")) {
    for (const auto& pair : fx["must_include"]) {
      const std::string eps = rat(pair.at(0)).get_str(), eta = rat(pair.at(1)).get_str();
      bool present = std::any_of(res.solutions.begin(), res.solutions.end(), [&](const auto& s) {
        return s.eps.get_str() == eps && s.eta.get_str() == eta;
      });
      check(present, "(" + eps + ", " + eta + ") is among the solutions");
    }
  }
}

void check_multdep(const json& fx, Checks& check) {
  const json dependence = fx.value("dependence", json::array());
  const json representation = fx.value("representation", json::array());
  for (const auto& c : dependence) {
    auto gammas = rats(c.at("values"));
    auto res = mult_dep_q(gammas);
    const std::string verdict = c.at("verdict").get<std::string>();
    check(to_string(res.verdict) == verdict, "verdict " + verdict + " for " + c.at("values").dump());
    if (c.contains("relation")) {
      IntVector k = int_vector_from(c["relation"]);
      check(k.size() == gammas.size() && power_product(gammas, k) == 1,
            "listed relation " + vec_key(k) + " re-verifies");
      check(res.relation == k, "solver relation " + vec_key(res.relation) + " matches");
    }
  }
  for (const auto& c : representation) {
    auto base = rats(c.at("base"));
    mpq_class target = rat(c.at("target"));
    auto res = mult_rep_exponents(target, base);
    if (c.at("k").is_null()) {
      check(!res.representable, target.get_str() + " is not a power product");
    } else {
      IntVector k = int_vector_from(c["k"]);
      check(k.size() == base.size() && power_product(base, k) == target,
            "listed exponents " + vec_key(k) + " re-verify for " + target.get_str());
      check(res.representable && res.k == k && res.within_bound,
            "solver exponents match and lie within the bound");
    }
  }
}

void check_exp(const json& fx, Checks& check) {
  ExpEquationProblem prob;
  const json& pj = fx.at("pres");
  prob.pres = presentation_from(pj);
  const std::size_t r = prob.pres.r;
  prob.a = elem(pj, "a", r);
  prob.b = elem(pj, "b", r);
  prob.c = elem(pj, "c", r);
  for (const auto& g : fx.at("gammas")) prob.gammas.push_back(fraction_from(g, r));
  prob.cap = fx.at("cap").get<unsigned long>();
  auto res = solve_exponential(prob);

  std::set<std::string> expected, found;
  for (const auto& s : fx.at("solutions")) {
    IntVector v = int_vector_from(s.at("v")), w = int_vector_from(s.at("w"));
    bool ok = v.size() == prob.gammas.size() && w.size() == prob.gammas.size();
    if (ok) {
      auto gv = fraction_power_product(prob.pres, prob.gammas, v);
      auto gw = fraction_power_product(prob.pres, prob.gammas, w);
      ZPoly lhs = prob.a * gv.num * gw.den + prob.b * gw.num * gv.den - prob.c * gv.den * gw.den;
      ok = element_eq(prob.pres, lhs, ZPoly(r)) == Equality::Equal;
      for (const auto& x : v) ok = ok && LogValue::from_int(abs(x)) <= res.bound;
      for (const auto& x : w) ok = ok && LogValue::from_int(abs(x)) <= res.bound;
    }
    const std::string key = vec_key(v) + vec_key(w);
    check(ok, "fixture solution " + key + " satisfies the equation within the bound");
    expected.insert(key);
  }
  for (const auto& s : res.solutions) found.insert(vec_key(s.v) + vec_key(s.w));
  check(found == expected, "solver returns exactly the fixture solutions (" +
                               std::to_string(found.size()) + " found)");
  check(res.undecided == 0, "no undecided membership tests");
}

ZPoly F_at_y(const ReducedDomain& rd) {
  ZPoly s(rd.pres.r);
  for (std::size_t i = 0; i <= rd.D(); ++i) {
    s += rd.mp.F[i] * rd.mp.Y.pow(static_cast<unsigned>(rd.D() - i));
  }
  return s;
}

void check_reduction(const json& fx, Checks& check) {
  for (const auto& dom : fx.at("domains")) {
    const std::string name = dom.at("name");
    ReducedDomain rd = reduced(dom);
    const auto& p = rd.pres;
    check(rd.D() == dom.at("D").get<std::size_t>(),
          name + ": D = " + std::to_string(rd.D()));
    check(rd.D() <= ipow(p.d(), p.t()), name + ": D <= d^t");
    ZPoly Fy = F_at_y(rd);
    if (p.gens.empty()) {
      check(Fy.is_zero(), name + ": F(y) = 0");
    } else {
      MembershipOptions o;
      o.ring = CoeffRing::Rational;
      auto m = ideal_membership(p.gens, Fy, o);
      check(m.verdict == Verdict::Member && verify_cofactors(p.gens, Fy, m.cofactors),
            name + ": F(y) in I re-verifies");
    }
    for (const auto& c : rd.certificates) check(c.holds(), name + ": certificate " + c.name);
    const json elements = dom.value("elements", json::array());
    for (const auto& e : elements) {
      FractionRep alpha = fraction_from(e, p.r);
      auto cr = canonical_rep(rd, alpha);
      check(fraction_eq(p, to_fraction(rd, cr.rep), alpha) == Equality::Equal &&
                cr.cert_deg.holds() && cr.cert_height.holds(),
            name + ": canonical form of " + e.dump() + " round-trips");
    }
  }
}

void check_bounds(const json& fx, Checks& check) {
  for (const auto& c : fx.at("cases")) {
    ConstantPack pack;
    const json overrides = c.value("pack", json::object());
    for (const auto& [k, v] : overrides.items()) pack.set(k, v.get<double>());
    const json& a = c.at("args");
    auto ul = [&](const char* k) { return a.at(k).get<unsigned long>(); };
    auto real = [&](const char* k) { return BigFloat::from_rat(rat(a.at(k))); };
    const std::string which = c.at("which");
    LogValue v;
    if (which == "thm11") {
      v = thm11_bound(ul("d"), real("h"), ul("r"), pack);
    } else if (which == "thm13") {
      v = thm13_bound(ul("d"), real("h"), ul("r"), ul("s"), pack);
    } else if (which == "gy-yu-c1") {
      v = gyory_yu_c1(ul("dL"), ul("s"));
    } else if (which == "lemma72") {
      v = lemma72_bound(ul("d"), real("h"), ul("r"), ul("s"), pack).bound;
    } else {
      throw BadInput("unknown bound in fixture: " + which);
    }
    const bool by_value = c.contains("value");
    BigFloat expect = BigFloat::from_string(c.at(by_value ? "value" : "ln").get<std::string>());
    BigFloat got = by_value ? v.value() : v.log();
    BigFloat tol = BigFloat::from_string(c.value("rel_tol", std::string("1e-30")));
    bool ok = abs(got - expect) <= tol * abs(expect);
    check(ok, which + ": " + got.to_string(35) + " against " + expect.to_string(35));
  }
}

void check_b_units(const json& fx, Checks& check) {
  ReducedDomain rd = reduced(fx);
  BUnitSearchCaps caps;
  const json& cj = fx.at("caps");
  caps.max_deg = cj.at("max_deg").get<int>();
  caps.max_coeff = cj.at("max_coeff").get<long>();
  caps.max_k = cj.at("max_k").get<unsigned>();
  auto res = enumerate_b_unit_solutions(rd, caps);
  const mpz_class bound = degree_bound_3_13(rd.q(), rd.D(), rd.d1());
  check(bound == mpz_class(fx.at("degree_bound").get<long>()),
        "degree bound 4 q D^2 d1 = " + bound.get_str());

  const std::size_t r = rd.pres.r;
  std::set<std::string> expected, found;
  for (const auto& s : fx.at("solutions")) {
    std::vector<ZPoly> P;
    for (const auto& x : s.at("P")) P.push_back(poly_from(x, r));
    ZPoly Q = poly_from(s.at("Q"), r);
    bool ok = P.size() == rd.D() && !Q.is_zero();
    if (ok) {
      CanonicalRep eps = normalize_rep(P, Q);
      std::vector<ZPoly> Pe = eps.P;
      for (auto& x : Pe) x = -x;
      Pe[0] += eps.Q;
      CanonicalRep eta = normalize_rep(Pe, eps.Q);
      ok = is_unit_in_B(rd, eps) && is_unit_in_B(rd, eta) && eps.deg_bar() <= bound &&
           eta.deg_bar() <= bound;
      expected.insert(rep_text(eps));
    }
    check(ok, "fixture unit " + s.dump() + ": eps and 1 - eps are units, degrees within the bound");
  }
  for (const auto& s : res.solutions) found.insert(rep_text(s.eps));
  check(found == expected, "search returns exactly the fixture solutions (" +
                               std::to_string(found.size()) + " found)");
}

void check_specialization(const json& fx, Checks& check) {
  ReducedDomain rd = reduced(fx);
  std::vector<mpz_class> u;
  for (const auto& x : fx.at("point")) u.emplace_back(x.get<long>());
  check(eval_at(build_H(rd), u) != 0, "H(u) != 0 at the fixture point");
  auto fiber = make_fiber(rd, u);
  std::vector<CanonicalRep> elems;
  for (const auto& e : fx.at("elements")) {
    elems.push_back(canonical_rep(rd, fraction_from(e, rd.pres.r)).rep);
  }
  std::size_t hom = 0, hom_ok = 0;
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = a; b < elems.size(); ++b) {
      for (std::size_t j = 0; j < rd.D(); ++j) {
        ++hom;
        if (check_homomorphism(rd, fiber, j, elems[a], elems[b]).ok()) ++hom_ok;
      }
    }
  }
  check(hom == hom_ok, "homomorphism property on " + std::to_string(hom) + " (pair, root) cases");
  for (const auto& e : elems) {
    for (const auto& ir : verify_specialized_heights(rd, fiber, e)) check(ir.holds(), ir.describe());
  }
  for (const auto& ir : verify_discriminants(rd, fiber)) check(ir.holds(), ir.describe());
  if (degree(fiber.F_u) > 0 && fiber.F_u.back() == 1) {
    auto ir = verify_root_height_sum(fiber.F_u);
    check(ir.holds(), ir.describe());
  }
  const json lifts = fx.value("height_lift", json::array());
  for (const auto& i : lifts) {
    auto ir = verify_height_lift(rd, elems.at(i.get<std::size_t>()));
    check(ir.holds(), ir.describe());
  }
}

const std::map<std::string, std::function<void(const json&, Checks&)>>& kinds() {
  static const std::map<std::string, std::function<void(const json&, Checks&)>> table = {
      {"ff-sunit", check_ff_sunit},   {"sunit-q", check_sunit_q},
      {"multdep", check_multdep},     {"exp-equation", check_exp},
      {"reduction", check_reduction}, {"bounds", check_bounds},
      {"b-units", check_b_units},     {"specialization", check_specialization}};
  return table;
}

}  // namespace

Report cmd_verify_paper(const std::filesystem::path& dir) {
  Report rep;
  rep.command = "verify-paper";
  if (!std::filesystem::is_directory(dir)) throw BadInput("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  }
  if (files.empty()) throw BadInput("no fixtures in " + dir.string());
  std::sort(files.begin(), files.end());
  rep.inputs["fixtures"] = json::array();
  for (const auto& f : files) rep.inputs["fixtures"].push_back(f.filename().string());

  json results = json::array();
  std::size_t passed = 0;
  for (const auto& f : files) {
    Checks checks;
    std::string kind = "?";
    try {
      json fx = read_json_file(f);
      kind = fx.at("kind").get<std::string>();
      auto it = kinds().find(kind);
      if (it == kinds().end()) throw BadInput("unknown fixture kind '" + kind + "'");
      it->second(fx, checks);
    } catch (const std::exception& e) {
      checks(false, std::string("error: ") + e.what());
    }
    if (checks.lines.empty()) checks(false, "fixture made no checks");
    for (const auto& l : checks.lines) rep.transcript.push_back(f.filename().string() + ": " + l);
    if (checks.ok) ++passed;
    results.push_back({{"file", f.filename().string()}, {"kind", kind}, {"passed", checks.ok},
                       {"checks", checks.lines.size()}});
  }
  rep.verified = passed == files.size();
  rep.exit_code = rep.verified ? kOk : kRefuted;
  rep.outputs = {{"fixtures", results}, {"passed", passed}, {"failed", files.size() - passed}};
  rep.summary = std::to_string(passed) + "/" + std::to_string(files.size()) + " fixtures pass";
  return rep;
}

}  // namespace effkit::cli
