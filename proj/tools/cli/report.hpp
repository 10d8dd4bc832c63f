#pragma once

#include <gmpxx.h>

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "effkit/effective_bounds.hpp"
#include "effkit/fg_domain.hpp"
#include "effkit/log_value.hpp"
#include "effkit/poly.hpp"
#include "effkit/reduction.hpp"

namespace effkit::cli {

using json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kRefuted = 1, kBadInput = 2, kDefect = 3 };

// One invocation's output. `outputs` holds only deterministic data.
struct Report {
  std::string command;
  json inputs = json::object();
  json outputs = json::object();
  json bounds = json::object();
  ConstantPack pack;
  std::vector<std::string> transcript;
  bool verified = true;
  int exit_code = kOk;
  std::string summary;

  void check(bool ok, const std::string& what);
  json to_json() const;
};

// Integers outside the int64 range become {"decimal", "log10"}.
json big(const mpz_class& z);
json rational(const mpq_class& q);
json log_value(const LogValue& v);
json pack_json(const ConstantPack& p);
json poly(const ZPoly& f);
json poly(const QPoly& f);
json certificate(const Certificate& c);

json read_json_file(const std::filesystem::path& path);
ConstantPack load_pack(const std::string& path);  // empty path: defaults

// {r, q, generators} with optional a, b, c and B_alphas.
Presentation presentation_from(const json& j);
ZPoly poly_from(const json& j, std::size_t nvars);
// "p" or {"num": p, "den": q}
FractionRep fraction_from(const json& j, std::size_t nvars);
json fraction_json(const FractionRep& f);
json canonical_json(const CanonicalRep& c);

std::vector<std::string> split(const std::string& s, char sep);
mpq_class parse_rational(const std::string& s);
long parse_long(const std::string& s);

}  // namespace effkit::cli
