#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "effkit/parallel.hpp"

#ifndef EFFKIT_FIXTURE_DIR
#define EFFKIT_FIXTURE_DIR "fixtures"
#endif

using namespace effkit::cli;

int main(int argc, char** argv) {
  CLI::App app{"effkit: effective unit-equation toolkit"};
  app.require_subcommand(1);
  std::string pack, pres, gammas, which, args, gens, target, ring = "zz", places, reduced, point,
                                                               elem, primes, abc = "1,1,1", values;
  std::optional<int> max_deg;
  long size_cap = 2;
  unsigned long cap = 8;
  std::string fixtures = EFFKIT_FIXTURE_DIR;
  bool timing = false;
  app.add_flag("--timing", timing, "print wall time in the summary");

  Report report;
  std::function<Report()> run;

  auto* reduce = app.add_subcommand("reduce", "primitive element, minimal polynomial and B");
  reduce->add_option("--pres", pres, "presentation JSON")->required();
  reduce->add_option("--pack", pack, "constant pack JSON");
  reduce->callback([&] { run = [&] { return cmd_reduce(pres, pack); }; });

  auto* bounds = app.add_subcommand("bounds", "evaluate an explicit bound");
  bounds->add_option("--which", which, "thm11|thm13|prop36|gy-yu|lm|caps")->required();
  bounds->add_option("--args", args, "k=v,...")->required();
  bounds->add_option("--pack", pack, "constant pack JSON");
  bounds->callback([&] { run = [&] { return cmd_bounds(which, args, pack); }; });

  auto* ideal = app.add_subcommand("ideal-member", "decide b in (f1..fm)");
  ideal->add_option("--gens", gens, "generators JSON")->required();
  ideal->add_option("--target", target, "target JSON")->required();
  ideal->add_option("--max-deg", max_deg, "cofactor degree cap");
  ideal->add_option("--ring", ring, "zz or qq");
  ideal->callback([&] { run = [&] { return cmd_ideal_member(gens, target, max_deg, ring); }; });

  auto* ff = app.add_subcommand("ff-sunit", "x + y = 1 in S-units of Q(z)");
  ff->add_option("--places", places, "comma-separated places, e.g. inf,z,z-1")->required();
  ff->callback([&] { run = [&] { return cmd_ff_sunit(places); }; });

  auto* spec = app.add_subcommand("specialize", "images of an element under z -> u");
  spec->add_option("--reduced", reduced, "presentation or reduce report JSON")->required();
  spec->add_option("--point", point, "u1,...,uq")->required();
  spec->add_option("--elem", elem, "element JSON (fraction or canonical P/Q)")->required();
  spec->callback([&] { run = [&] { return cmd_specialize(reduced, point, elem); }; });

  auto* unit = app.add_subcommand("solve-unit", "a eps + b eta = c in units of A");
  unit->add_option("--pres", pres, "presentation JSON with a, b, c")->required();
  unit->add_option("--size-cap", size_cap, "largest representative size");
  unit->callback([&] { run = [&] { return cmd_solve_unit(pres, size_cap); }; });

  auto* sunit = app.add_subcommand("solve-sunit-q", "a eps + b eta = c in S-units of Q");
  sunit->add_option("--primes", primes, "comma-separated primes");
  sunit->add_option("--abc", abc, "a,b,c");
  sunit->add_option("--cap", cap, "exponent cap");
  sunit->add_option("--pack", pack, "constant pack JSON");
  sunit->callback([&] { run = [&] { return cmd_solve_sunit_q(primes, abc, cap, pack); }; });

  auto* exp = app.add_subcommand("solve-exp", "a gamma^v + b gamma^w = c");
  exp->add_option("--pres", pres, "presentation JSON with a, b, c")->required();
  exp->add_option("--gammas", gammas, "gammas JSON")->required();
  exp->add_option("--cap", cap, "exponent cap");
  exp->add_option("--pack", pack, "constant pack JSON");
  exp->callback([&] { run = [&] { return cmd_solve_exp(pres, gammas, cap, pack); }; });

  auto* dep = app.add_subcommand("multdep", "multiplicative relations among rationals");
  dep->add_option("--values", values, "comma-separated rationals")->required();
  dep->add_option("--target", target, "also write this rational as a power product");
  dep->add_option("--pack", pack, "constant pack JSON");
  dep->callback([&] { run = [&] { return cmd_multdep(values, target, pack); }; });

  auto* verify = app.add_subcommand("verify-paper", "run every fixture check");
  verify->add_option("fixtures", fixtures, "fixture directory");
  verify->callback([&] { run = [&] { return cmd_verify_paper(fixtures); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    report = run();
  } catch (const std::exception& e) {
    std::cerr << "effkit: " << e.what() << '\n';
    return exit_code_for(e);
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::cout << report.to_json().dump(2) << '\n';
  int code = report.exit_code;
  if (!report.verified && report.command != "verify-paper") code = kDefect;
  std::cerr << report.command << ": " << report.summary;
  if (!report.verified) std::cerr << " [verification FAILED]";
  if (timing) std::cerr << " (" << secs << " s, " << effkit::worker_count() << " workers)";
  std::cerr << '\n';
  return code;
}
