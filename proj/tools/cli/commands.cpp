#include "commands.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "effkit/errors.hpp"
#include "effkit/function_field.hpp"
#include "effkit/integer.hpp"
#include "effkit/poly_algo.hpp"
#include "effkit/solvers.hpp"
#include "effkit/specialization.hpp"

namespace effkit::cli {

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const BadInput*>(&e) || dynamic_cast<const PreconditionViolation*>(&e) ||
      dynamic_cast<const DegreeOne*>(&e)) {
    return kBadInput;
  }
  if (dynamic_cast<const SearchExhausted*>(&e) || dynamic_cast<const NotRepresentable*>(&e)) {
    return kRefuted;
  }
  return kDefect;
}

namespace {

std::string zuni_text(const ZUni& f) { return to_string(to_poly(f), VarNames{"x", true}); }

std::string qtext(const QUni& f) {
  QPoly p(1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    p.add_term(Exponent{static_cast<std::uint32_t>(i)}, f[i]);
  }
  return to_string(p, VarNames{"z", true});
}

json ff_json(const FFElement& x) { return {{"num", qtext(x.num())}, {"den", qtext(x.den())}}; }

json int_vector(std::span<const mpz_class> v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(big(x));
  return a;
}

json interval_json(const Interval& iv) {
  return {{"lo", iv.lo().to_string(17)}, {"hi", iv.hi().to_string(17)}};
}

// h(H) = log H as a LogValue, for comparison with height bounds.
LogValue log_height(const mpz_class& H) { return LogValue::from_value(log_int(H, MPFR_RNDU)); }

std::vector<mpq_class> rational_list(const std::string& text) {
  std::vector<mpq_class> out;
  for (const auto& s : split(text, ',')) out.push_back(parse_rational(s));
  return out;
}

ZPoly element_field(const json& j, const char* key, std::size_t r) {
  return j.contains(key) ? poly_from(j[key], r) : ZPoly::constant(r, 1);
}

ReducedDomain reduced_from(const json& j, const ReductionOptions& opts, json& echo) {
  const json& pres_json =
      j.contains("command") && j.contains("inputs") ? j["inputs"]["presentation"] : j;
  echo = pres_json;
  Presentation p = presentation_from(pres_json);
  ReducedDomain rd = reduce_domain(p, opts);
  if (pres_json.contains("B_alphas")) {
    std::vector<FractionRep> alphas;
    for (const auto& a : pres_json["B_alphas"]) alphas.push_back(fraction_from(a, p.r));
    build_B(rd, alphas, opts);
  }
  return rd;
}

}  // namespace

// ---- reduce -----------------------------------------------------------------

Report cmd_reduce(const std::string& pres_path, const std::string& pack_path) {
  Report rep;
  rep.command = "reduce";
  rep.pack = load_pack(pack_path);
  ReductionOptions opts;
  opts.pack = rep.pack;
  json echo;
  ReducedDomain rd = reduced_from(read_json_file(pres_path), opts, echo);
  rep.inputs["presentation"] = echo;

  const auto& p = rd.pres;
  json& o = rep.outputs;
  o["q"] = p.q;
  o["t"] = p.t();
  o["D"] = rd.D();
  o["weights"] = rd.weights;
  o["W"] = poly(rd.mp.W);
  o["Y"] = poly(rd.mp.Y);
  o["G"] = json::array();
  for (const auto& g : rd.mp.G) o["G"].push_back(poly(g));
  o["F"] = json::array();
  for (const auto& g : rd.mp.F) o["F"].push_back(poly(g));
  o["f"] = poly(rd.f);
  o["y_reps"] = json::array();
  for (const auto& c : rd.y_reps) o["y_reps"].push_back(canonical_json(c));
  o["d0"] = rd.d0();
  o["d1"] = rd.d1();
  o["h0"] = rd.h0().to_string(17);
  o["h1"] = rd.h1().to_string(17);

  json certs = json::array();
  for (const auto& c : rd.certificates) {
    certs.push_back(certificate(c));
    rep.check(c.holds(), c.name);
  }
  rep.bounds["reduction"] = certs;

  const mpz_class dt = ipow(p.d(), p.t());
  rep.check(rd.D() <= dt, "D = " + std::to_string(rd.D()) + " <= d^t = " + dt.get_str());
  ZPoly Fy(p.r);
  for (std::size_t i = 0; i <= rd.D(); ++i) {
    Fy += rd.mp.F[i] * rd.mp.Y.pow(static_cast<unsigned>(rd.D() - i));
  }
  if (p.gens.empty()) {
    rep.check(Fy.is_zero(), "F(y) = 0");
  } else {
    MembershipOptions mo;
    mo.ring = CoeffRing::Rational;
    auto m = ideal_membership(p.gens, Fy, mo);
    rep.check(m.verdict == Verdict::Member && verify_cofactors(p.gens, Fy, m.cofactors),
              "F(y) lies in I with verified cofactors");
  }
  rep.summary = "D = " + std::to_string(rd.D()) + ", f = " + to_string(rd.f);
  return rep;
}

// ---- bounds -----------------------------------------------------------------

namespace {

class BoundArgs {
 public:
  explicit BoundArgs(const std::string& text) {
    for (const auto& kv : split(text, ',')) {
      auto eq = kv.find('=');
      if (eq == std::string::npos || eq == 0) throw BadInput("argument '" + kv + "' is not k=v");
      std::string k = kv.substr(0, eq);
      if (!values_.emplace(k, kv.substr(eq + 1)).second) throw BadInput("duplicate argument " + k);
    }
  }
  bool has(const std::string& k) const { return values_.count(k) != 0; }
  const std::string& raw(const std::string& k) {
    auto it = values_.find(k);
    if (it == values_.end()) throw BadInput("missing argument " + k);
    used_.insert(k);
    return it->second;
  }
  unsigned long ul(const std::string& k) {
    long v = parse_long(raw(k));
    if (v < 0) throw BadInput(k + " must be nonnegative");
    return static_cast<unsigned long>(v);
  }
  unsigned long ul(const std::string& k, unsigned long fallback) { return has(k) ? ul(k) : fallback; }
  mpz_class z(const std::string& k) {
    mpz_class v;
    if (v.set_str(raw(k), 10) != 0) throw BadInput(k + " must be an integer");
    return v;
  }
  // A rational such as 3/2, or a decimal such as 0.693.
  BigFloat real(const std::string& k) {
    const std::string& s = raw(k);
    mpq_class q;
    if (q.set_str(s, 10) == 0 && q.get_den() != 0) {
      q.canonicalize();
      return BigFloat::from_rat(q);
    }
    BigFloat r;
    if (s.empty() || mpfr_set_str(r.raw(), s.c_str(), 10, MPFR_RNDN) != 0) {
      throw BadInput(k + " must be a rational or decimal number");
    }
    return r;
  }
  void finish() const {
    for (const auto& [k, v] : values_) {
      if (!used_.count(k)) throw BadInput("unknown argument " + k);
    }
  }
  json echo() const {
    json j = json::object();
    for (const auto& [k, v] : values_) j[k] = v;
    return j;
  }

 private:
  std::map<std::string, std::string> values_;
  std::set<std::string> used_;
};

}  // namespace

Report cmd_bounds(const std::string& which, const std::string& args_text,
                  const std::string& pack_path) {
  Report rep;
  rep.command = "bounds";
  rep.pack = load_pack(pack_path);
  BoundArgs args(args_text);
  rep.inputs = {{"which", which}, {"args", args.echo()}};
  json& o = rep.outputs;
  o["which"] = which;

  if (which == "thm11") {
    o["formula"] = "exp((2d)^(c1^r) (h+1))";
    auto d = args.ul("d"), r = args.ul("r");
    auto v = thm11_bound(d, args.real("h"), r, rep.pack);
    o["log_value"] = log_value(v);
  } else if (which == "thm13") {
    o["formula"] = "exp((2d)^(c2^(r+s)) (h+1))";
    auto d = args.ul("d"), r = args.ul("r"), s = args.ul("s");
    o["log_value"] = log_value(thm13_bound(d, args.real("h"), r, s, rep.pack));
  } else if (which == "prop36") {
    o["formula"] = "deg <= 4 q D^2 d1; height <= exp(C (2D(q+d1) log*(2D(q+d1)) + D h1))";
    auto q = args.ul("q"), D = args.ul("D"), d1 = args.ul("d1");
    auto b = prop36_bounds(q, D, d1, args.real("h1"), rep.pack);
    o["deg"] = big(b.deg);
    o["log_value"] = log_value(b.height);
  } else if (which == "gy-yu") {
    o["formula"] =
        "c1 P R (1 + log* R / log P); c1 = max(1, pi/dL) s^(2s+3.5) 2^(7s+27) log(2s) "
        "dL^(2(s+1)) (log* 2dL)^3; R = |disc|^(1/2) (log* |disc|)^(dL-1) (log* Q)^s";
    auto dL = args.ul("dL", 1), s = args.ul("s");
    LogValue c1 = gyory_yu_c1(dL, s);
    o["c1"] = log_value(c1);
    if (args.has("P")) {
      mpz_class P = args.z("P"), Q = args.z("Q");
      mpz_class disc = args.has("disc") ? args.z("disc") : mpz_class(1);
      BigFloat R = regulator_bound(disc, dL, Q, s);
      o["regulator_bound"] = R.to_string(17);
      o["log_value"] = log_value(gyory_yu_bound(c1, P, R));
    } else {
      o["log_value"] = log_value(c1);
    }
  } else if (which == "lm") {
    o["formula"] = "58 (s! e^s / s^s) d^(s+1) log d prod_j h_j / h_i";
    auto d = args.ul("d");
    std::vector<BigFloat> hs;
    for (unsigned long i = 1; args.has("h" + std::to_string(i)); ++i) {
      hs.push_back(args.real("h" + std::to_string(i)));
    }
    if (hs.size() < 2) throw BadInput("lm needs heights h1, h2, ... (at least two)");
    auto b = loher_masser_bound(hs.size() - 1, d, hs);
    o["per_index"] = json::array();
    for (const auto& x : b) o["per_index"].push_back(x.to_string(17));
    o["log_value"] = log_value(LogValue::from_value(*std::max_element(
        b.begin(), b.end(), [](const BigFloat& x, const BigFloat& y) { return x < y; })));
  } else if (which == "caps") {
    o["formula"] =
        "deg (2md)^(2^N); height (2md)^(6^N)(h+1); prop25 (2d)^(exp(C N log* N))(h+1)^(N+1)";
    auto m = args.ul("m"), d = args.ul("d"), N = args.ul("N");
    auto c = section2_caps(m, d, args.real("h"), N, rep.pack);
    o["hermann_deg"] = c.hermann_deg ? json(*c.hermann_deg) : json(nullptr);
    o["hermann_deg_value"] = log_value(c.hermann_deg_value);
    o["cor23_height"] = log_value(c.cor23_height);
    o["prop25_deg"] = log_value(c.prop25_deg);
    o["log_value"] = log_value(c.prop25_height);
  } else {
    throw BadInput("unknown bound '" + which + "'");
  }
  args.finish();
  rep.bounds[which] = o["log_value"];
  rep.summary = which + " = " + o["log_value"]["text"].get<std::string>();
  return rep;
}

// ---- ideal-member -------------------------------------------------------------

namespace {

std::vector<std::string> string_list(const json& j, const char* key) {
  const json& arr = j.is_object() ? j.at(key) : j;
  if (!arr.is_array()) throw BadInput(std::string("expected an array of polynomials"));
  std::vector<std::string> out;
  for (const auto& g : arr) {
    if (!g.is_string()) throw BadInput("polynomial must be a string: " + g.dump());
    out.push_back(g.get<std::string>());
  }
  return out;
}

}  // namespace

Report cmd_ideal_member(const std::string& gens_path, const std::string& target_path,
                        std::optional<int> max_deg, const std::string& ring) {
  Report rep;
  rep.command = "ideal-member";
  json gj = read_json_file(gens_path), tj = read_json_file(target_path);
  auto gen_text = string_list(gj, "generators");
  std::string target_text;
  if (tj.is_string()) {
    target_text = tj.get<std::string>();
  } else if (tj.is_object() && tj.contains("target") && tj["target"].is_string()) {
    target_text = tj["target"].get<std::string>();
  } else {
    throw BadInput("target must be a polynomial string or {\"target\": ...}");
  }
  std::size_t n = gj.is_object() && gj.contains("nvars") ? gj["nvars"].get<std::size_t>() : 0;
  if (n == 0) {
    for (const auto& t : gen_text) n = std::max(n, parse_poly(t).nvars());
    n = std::max(n, parse_poly(target_text).nvars());
  }
  std::vector<ZPoly> gens;
  for (const auto& t : gen_text) gens.push_back(parse_poly(t, n));
  ZPoly target = parse_poly(target_text, n);

  MembershipOptions opts;
  if (ring == "qq") {
    opts.ring = CoeffRing::Rational;
  } else if (ring != "zz") {
    throw BadInput("ring must be zz or qq");
  }
  if (max_deg) {
    if (*max_deg < 0) throw BadInput("max-deg must be nonnegative");
    opts.delta_max = *max_deg;
  }
  rep.pack = opts.pack;
  rep.inputs = {{"generators", gen_text}, {"target", target_text}, {"nvars", n},
                {"ring", ring},           {"max_deg", opts.delta_max}};

  auto m = ideal_membership(gens, target, opts);
  json& o = rep.outputs;
  o["verdict"] = to_string(m.verdict);
  if (m.verdict == Verdict::Member) {
    o["cofactors"] = json::array();
    for (const auto& c : m.cofactors) o["cofactors"].push_back(poly(c));
    o["deg"] = m.degree;
    o["height"] = log_value(m.height);
    rep.check(verify_cofactors(gens, target, m.cofactors), "sum of cofactors times generators equals the target");
  } else {
    o["deg"] = nullptr;
    o["height"] = nullptr;
  }
  o["delta_reached"] = m.delta_reached;
  o["certificate"] = m.certificate;
  json caps;
  caps["hermann_deg"] = m.caps.hermann_deg ? json(*m.caps.hermann_deg) : json(nullptr);
  caps["hermann_deg_value"] = log_value(m.caps.hermann_deg_value);
  caps["cor23_height"] = log_value(m.caps.cor23_height);
  caps["prop25_deg"] = log_value(m.caps.prop25_deg);
  caps["prop25_height"] = log_value(m.caps.prop25_height);
  o["theoretical_caps"] = caps;
  rep.bounds["theoretical_caps"] = caps;
  rep.exit_code = m.verdict == Verdict::Member ? kOk : kRefuted;
  rep.summary = "verdict " + to_string(m.verdict) + " (" + m.certificate + ")";
  return rep;
}

// ---- ff-sunit -----------------------------------------------------------------

Report cmd_ff_sunit(const std::string& places) {
  Report rep;
  rep.command = "ff-sunit";
  auto S = parse_places(places);
  json echo = json::array();
  for (const auto& v : S) echo.push_back(v.str());
  rep.inputs["places"] = echo;

  auto res = solve_ff_sunit(S);
  json sols = json::array();
  const FFElement one = FFElement::constant(1);
  for (const auto& s : res.solutions) {
    sols.push_back({{"x", ff_json(s.x)}, {"y", ff_json(s.y)}, {"height", s.height}});
    bool ok = s.x + s.y == one && is_s_unit(s.x, S) && is_s_unit(s.y, S) &&
              s.height == std::max(ff_height(s.x), ff_height(s.y)) && s.height <= res.bound;
    rep.check(ok, "x = " + s.x.str() + ": x + y = 1, both S-units, height " +
                      std::to_string(s.height) + " <= " + std::to_string(res.bound));
  }
  rep.outputs = {{"count", res.solutions.size()},
                 {"mason_bound", res.bound},
                 {"exponent_vectors", res.exponent_vectors},
                 {"solutions", sols}};
  rep.bounds["mason"] = res.bound;
  rep.summary = std::to_string(res.solutions.size()) + " solutions, Mason bound " +
                std::to_string(res.bound);
  return rep;
}

// ---- specialize -----------------------------------------------------------------

Report cmd_specialize(const std::string& reduced_path, const std::string& point,
                      const std::string& elem_path) {
  Report rep;
  rep.command = "specialize";
  json echo;
  ReducedDomain rd = reduced_from(read_json_file(reduced_path), {}, echo);
  rep.inputs["presentation"] = echo;
  const std::size_t r = rd.pres.r;

  std::vector<mpz_class> u;
  for (const auto& s : split(point, ',')) {
    mpz_class z;
    if (z.set_str(s, 10) != 0) throw BadInput("point coordinate '" + s + "' is not an integer");
    u.push_back(z);
  }
  if (u.size() != rd.q()) {
    throw BadInput("point needs " + std::to_string(rd.q()) + " coordinates");
  }
  rep.inputs["point"] = int_vector(u);

  json ej = read_json_file(elem_path);
  rep.inputs["element"] = ej;
  CanonicalRep alpha;
  if (ej.is_object() && ej.contains("P")) {
    std::vector<ZPoly> P;
    for (const auto& x : ej["P"]) P.push_back(poly_from(x, r));
    if (P.size() != rd.D()) throw BadInput("canonical representation needs D components P_j");
    alpha = normalize_rep(std::move(P), element_field(ej, "Q", r));
  } else {
    alpha = canonical_rep(rd, fraction_from(ej, r)).rep;
  }

  ZPoly H = build_H(rd);
  mpz_class Hu = eval_at(H, u);
  expects(Hu != 0, "H(u) = 0: the point is not admissible");
  auto fiber = make_fiber(rd, u);
  json& o = rep.outputs;
  o["canonical"] = canonical_json(alpha);
  o["H"] = poly(H);
  o["H_u"] = big(Hu);
  o["F_u"] = zuni_text(fiber.F_u);
  o["images"] = json::array();
  for (std::size_t j = 0; j < rd.D(); ++j) {
    AlgebraicNumber a = specialize(rd, fiber, j, alpha);
    o["images"].push_back({{"j", j},
                           {"minpoly", zuni_text(a.minpoly())},
                           {"root_index", a.index()},
                           {"box", a.box().str()},
                           {"height", interval_json(alg_height_interval(a))}});
  }
  json reports = json::array();
  for (const auto& ir : verify_specialized_heights(rd, fiber, alpha)) {
    reports.push_back({{"name", ir.name}, {"lhs", interval_json(ir.lhs)}, {"rhs", interval_json(ir.rhs)}});
    rep.check(ir.holds(), ir.describe());
  }
  for (const auto& ir : verify_discriminants(rd, fiber)) {
    reports.push_back({{"name", ir.name}, {"lhs", interval_json(ir.lhs)}, {"rhs", interval_json(ir.rhs)}});
    rep.check(ir.holds(), ir.describe());
  }
  rep.bounds["inequalities"] = reports;
  rep.summary = "specialized at u = " + point + " to " + std::to_string(rd.D()) + " conjugates";
  return rep;
}

// ---- solve-unit -------------------------------------------------------------------

Report cmd_solve_unit(const std::string& pres_path, long size_cap) {
  Report rep;
  rep.command = "solve-unit";
  json pj = read_json_file(pres_path);
  Presentation p = presentation_from(pj);
  ZPoly a = element_field(pj, "a", p.r), b = element_field(pj, "b", p.r),
        c = element_field(pj, "c", p.r);
  if (size_cap < 0) throw BadInput("size-cap must be nonnegative");
  rep.inputs = {{"presentation", pj}, {"size_cap", size_cap}};

  auto res = enumerate_unit_solutions(p, a, b, c, size_cap);
  json sols = json::array();
  for (const auto& s : res.solutions) {
    sols.push_back({{"eps", poly(s.eps)},
                    {"eps_inv", poly(s.eps_inv)},
                    {"eta", poly(s.eta)},
                    {"eta_inv", poly(s.eta_inv)}});
    rep.check(verify_unit_solution(p, a, b, c, s),
              "eps = " + to_string(s.eps) + ", eta = " + to_string(s.eta) + " re-verified");
  }
  json units = json::array();
  for (const auto& u : res.units) units.push_back(poly(u));
  rep.outputs = {{"solutions", sols},
                 {"units", units},
                 {"candidates", res.candidates},
                 {"undecided", res.undecided}};
  rep.bounds["thm11"] = log_value(thm11_bound(p.d(), p.h(), std::max<std::size_t>(p.r, 1), rep.pack));
  rep.summary = std::to_string(res.solutions.size()) + " solutions among " +
                std::to_string(res.units.size()) + " units";
  return rep;
}

// ---- solve-sunit-q ----------------------------------------------------------------

Report cmd_solve_sunit_q(const std::string& primes, const std::string& abc, unsigned long cap,
                         const std::string& pack_path) {
  Report rep;
  rep.command = "solve-sunit-q";
  rep.pack = load_pack(pack_path);
  RationalSUnitProblem prob;
  for (const auto& s : split(primes, ',')) {
    mpz_class z;
    if (z.set_str(s, 10) != 0) throw BadInput("prime '" + s + "' is not an integer");
    prob.primes.push_back(z);
  }
  auto coeffs = rational_list(abc);
  if (coeffs.size() != 3) throw BadInput("--abc needs exactly three values");
  prob.a = coeffs[0];
  prob.b = coeffs[1];
  prob.c = coeffs[2];
  prob.cap = cap;
  rep.inputs = {{"primes", int_vector(prob.primes)},
                {"abc", {rational(prob.a), rational(prob.b), rational(prob.c)}},
                {"cap", cap}};

  auto res = solve_sunit_q(prob);
  json sols = json::array();
  for (const auto& s : res.solutions) {
    sols.push_back({{"eps", rational(s.eps)},
                    {"eta", rational(s.eta)},
                    {"sign", s.sign},
                    {"exponents", int_vector(s.exponents)},
                    {"height_eps", big(s.height_eps)},
                    {"height_eta", big(s.height_eta)}});
    mpq_class prod = s.sign;
    for (std::size_t i = 0; i < prob.primes.size(); ++i) {
      prod *= power_product(std::vector<mpq_class>{mpq_class(prob.primes[i])},
                            std::vector<mpz_class>{s.exponents[i]});
    }
    bool ok = prod == s.eps && prob.a * s.eps + prob.b * s.eta == prob.c &&
              is_s_unit_q(s.eta, prob.primes) &&
              log_height(rational_height(prob.a * s.eps / prob.c)) <= res.bound &&
              log_height(rational_height(prob.b * s.eta / prob.c)) <= res.bound;
    rep.check(ok, "eps = " + s.eps.get_str() + ", eta = " + s.eta.get_str() +
                      ": equation, S-unit property and height bound");
  }
  rep.outputs = {{"solutions", sols},
                 {"count", res.solutions.size()},
                 {"scaled_primes", int_vector(res.scaled_primes)},
                 {"candidates", res.candidates},
                 {"bound", log_value(res.bound)}};
  rep.bounds["gyory_yu"] = log_value(res.bound);
  rep.summary = std::to_string(res.solutions.size()) + " solutions; height bound " +
                res.bound.describe(6);
  return rep;
}

// ---- solve-exp ----------------------------------------------------------------------

Report cmd_solve_exp(const std::string& pres_path, const std::string& gammas_path,
                     unsigned long cap, const std::string& pack_path) {
  Report rep;
  rep.command = "solve-exp";
  rep.pack = load_pack(pack_path);
  json pj = read_json_file(pres_path), gj = read_json_file(gammas_path);
  ExpEquationProblem prob;
  prob.pres = presentation_from(pj);
  const std::size_t r = prob.pres.r;
  prob.a = element_field(pj, "a", r);
  prob.b = element_field(pj, "b", r);
  prob.c = element_field(pj, "c", r);
  const json& garr = gj.is_object() ? gj.at("gammas") : gj;
  if (!garr.is_array() || garr.empty()) throw BadInput("gammas must be a nonempty array");
  for (const auto& g : garr) prob.gammas.push_back(fraction_from(g, r));
  prob.cap = cap;
  rep.inputs = {{"presentation", pj}, {"gammas", garr}, {"cap", cap}};

  auto res = solve_exponential(prob, rep.pack);
  json sols = json::array();
  for (const auto& s : res.solutions) {
    sols.push_back({{"v", int_vector(s.v)}, {"w", int_vector(s.w)}});
    auto gv = fraction_power_product(prob.pres, prob.gammas, s.v);
    auto gw = fraction_power_product(prob.pres, prob.gammas, s.w);
    ZPoly lhs = prob.a * gv.num * gw.den + prob.b * gw.num * gv.den - prob.c * gv.den * gw.den;
    rep.check(element_eq(prob.pres, lhs, ZPoly(r)) == Equality::Equal,
              "solution re-verified by ideal membership");
  }
  rep.outputs = {{"solutions", sols},
                 {"independence",
                  {{"verdict", to_string(res.independence.verdict)},
                   {"relation", int_vector(res.independence.relation)},
                   {"transcript", res.independence.transcript}}},
                 {"pairs_checked", res.pairs_checked},
                 {"undecided", res.undecided},
                 {"bound", log_value(res.bound)}};
  rep.bounds["thm13"] = log_value(res.bound);
  rep.summary = std::to_string(res.solutions.size()) + " solutions in " +
                std::to_string(res.pairs_checked) + " exponent pairs";
  return rep;
}

// ---- multdep --------------------------------------------------------------------------

Report cmd_multdep(const std::string& values, const std::string& target,
                   const std::string& pack_path) {
  Report rep;
  rep.command = "multdep";
  rep.pack = load_pack(pack_path);
  auto gammas = rational_list(values);
  if (gammas.empty()) throw BadInput("--values needs at least one rational");
  json echo = json::array();
  for (const auto& g : gammas) echo.push_back(rational(g));
  rep.inputs["values"] = echo;

  auto dep = mult_dep_q(gammas);
  rep.outputs["verdict"] = to_string(dep.verdict);
  rep.outputs["relation"] = int_vector(dep.relation);
  rep.outputs["transcript"] = dep.transcript;
  if (dep.verdict == DepVerdict::Dependent) {
    rep.check(power_product(gammas, dep.relation) == 1, "product of gamma_i^k_i equals 1");
  }
  rep.summary = to_string(dep.verdict);

  if (!target.empty()) {
    mpq_class t = parse_rational(target);
    rep.inputs["target"] = rational(t);
    auto mr = mult_rep_exponents(t, gammas, rep.pack);
    rep.outputs["representation"] = {{"representable", mr.representable},
                                     {"k", int_vector(mr.k)},
                                     {"within_bound", mr.within_bound},
                                     {"bound", log_value(mr.bound)}};
    rep.bounds["lemma72"] = log_value(mr.bound);
    if (mr.representable) {
      rep.check(power_product(gammas, mr.k) == t && mr.within_bound,
                "target equals the power product, exponents within the bound");
    } else {
      rep.exit_code = kRefuted;
    }
    rep.summary += mr.representable ? "; target representable" : "; target not representable";
  }
  return rep;
}

}  // namespace effkit::cli
