#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>

#include "effkit/poly.hpp"
#include "effkit/poly_algo.hpp"

namespace effkit::testing {

// Fixed-seed generator so failures reproduce.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(gen_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen_); }

  // Random integer polynomial: each monomial of degree ≤ deg present with
  // probability `density`, coefficients in [-cmax, cmax].
  ZPoly poly(std::size_t nvars, int deg, long cmax, double density = 0.5) {
    ZPoly p(nvars);
    for (const auto& e : monomials_up_to(nvars, deg)) {
      if (coin(density)) p.add_term(e, mpz_class(uniform(-cmax, cmax)));
    }
    return p;
  }

  ZPoly nonzero_poly(std::size_t nvars, int deg, long cmax, double density = 0.5) {
    while (true) {
      ZPoly p = poly(nvars, deg, cmax, density);
      if (!p.is_zero()) return p;
    }
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace effkit::testing
