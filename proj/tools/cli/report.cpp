#include "report.hpp"

#include <fstream>
#include <limits>

#include "effkit/bigfloat.hpp"
#include "effkit/errors.hpp"
#include "effkit/poly_algo.hpp"

namespace effkit::cli {

void Report::check(bool ok, const std::string& what) {
  transcript.push_back(std::string(ok ? "passed: " : "FAILED: ") + what);
  if (!ok) verified = false;
}

json Report::to_json() const {
  json j;
  j["schema"] = 1;
  j["command"] = command;
  j["inputs"] = inputs;
  j["outputs"] = outputs;
  j["certificates"] = {{"bounds", bounds}, {"pack", pack_json(pack)}};
  j["verification"] = {{"status", verified ? "passed" : "failed"}, {"transcript", transcript}};
  return j;
}

json big(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  BigFloat l10 = log_int(abs(z)) / log(BigFloat(10.0));
  return {{"decimal", z.get_str()}, {"log10", l10.to_double()}};
}

json rational(const mpq_class& q) { return q.get_str(); }

json log_value(const LogValue& v) {
  json j;
  j["text"] = v.describe();
  if (v.is_zero()) {
    j["ln"] = nullptr;
  } else if (v.is_loglog()) {
    j["ln"] = nullptr;
    j["lnln"] = v.loglog().to_double();
  } else {
    j["ln"] = v.log().to_double();
  }
  return j;
}

json pack_json(const ConstantPack& p) {
  json j = json::object();
  for (const auto& [name, value] : p.entries()) j[name] = value;
  return j;
}

json poly(const ZPoly& f) { return to_string(f); }
json poly(const QPoly& f) { return to_string(f); }

json certificate(const Certificate& c) {
  return {{"name", c.name},
          {"bound", log_value(c.bound)},
          {"observed", log_value(c.observed)},
          {"holds", c.holds()}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw BadInput(path.string() + ": " + e.what());
  }
}

ConstantPack load_pack(const std::string& path) {
  ConstantPack pack;
  if (path.empty()) return pack;
  json j = read_json_file(path);
  if (!j.is_object()) throw BadInput("constant pack must be a JSON object");
  for (const auto& [name, value] : j.items()) {
    if (!value.is_number()) throw BadInput("pack entry " + name + " is not a number");
    pack.set(name, value.get<double>());
  }
  return pack;
}

namespace {
std::size_t index_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) {
    throw BadInput(std::string("presentation needs a nonnegative integer '") + key + "'");
  }
  return j[key].get<std::size_t>();
}
}  // namespace

ZPoly poly_from(const json& j, std::size_t nvars) {
  if (j.is_number_integer()) return ZPoly::constant(nvars, mpz_class(j.get<long>()));
  if (!j.is_string()) throw BadInput("polynomial must be a string: " + j.dump());
  return parse_poly(j.get<std::string>(), nvars);
}

Presentation presentation_from(const json& j) {
  if (!j.is_object()) throw BadInput("presentation must be a JSON object");
  std::size_t r = index_field(j, "r"), q = index_field(j, "q");
  std::vector<ZPoly> gens;
  if (j.contains("generators")) {
    if (!j["generators"].is_array()) throw BadInput("generators must be an array");
    for (const auto& g : j["generators"]) gens.push_back(poly_from(g, r));
  }
  return Presentation::make(r, q, std::move(gens));
}

FractionRep fraction_from(const json& j, std::size_t nvars) {
  if (j.is_object()) {
    if (!j.contains("num")) throw BadInput("fraction needs 'num'");
    return {poly_from(j["num"], nvars),
            j.contains("den") ? poly_from(j["den"], nvars) : ZPoly::constant(nvars, 1)};
  }
  return {poly_from(j, nvars), ZPoly::constant(nvars, 1)};
}

json fraction_json(const FractionRep& f) { return {{"num", poly(f.num)}, {"den", poly(f.den)}}; }

json canonical_json(const CanonicalRep& c) {
  json P = json::array();
  for (const auto& p : c.P) P.push_back(poly(p));
  return {{"P", P}, {"Q", poly(c.Q)}, {"deg_bar", c.deg_bar()}, {"height_bar", big(c.height_bar())}};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  if (out.size() == 1 && out[0].empty()) out.clear();
  return out;
}

mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw BadInput("not a rational number: '" + s + "'");
  if (q.get_den() == 0) throw BadInput("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

long parse_long(const std::string& s) {
  mpz_class z;
  if (s.empty() || z.set_str(s, 10) != 0 || !z.fits_slong_p()) {
    throw BadInput("not a machine integer: '" + s + "'");
  }
  return z.get_si();
}

}  // namespace effkit::cli
