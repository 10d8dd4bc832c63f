#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace effkit {

using Factorization = std::vector<std::pair<mpz_class, unsigned>>;

// Prime factorization of |n| (n ≠ 0), primes ascending. Trial division up to
// 10^6, then Pollard rho; throws BadInput when a cofactor resists both.
Factorization factor_integer(const mpz_class& n);

// The primes used for trial division (all primes below 10^6).
const std::vector<unsigned long>& trial_primes();
std::vector<unsigned long> primes_up_to(unsigned long limit);

bool is_probable_prime(const mpz_class& n);

// Multiplicity of p in n (n ≠ 0).
unsigned valuation(const mpz_class& n, const mpz_class& p);

mpz_class ipow(const mpz_class& base, unsigned long e);

// Decides x ≤ e^k · y exactly for integers x ≥ 0, y > 0 and k ≥ 0.
bool le_exp_times(const mpz_class& x, long k, const mpz_class& y);

// Height of a rational: log max(|num|, |den|) as the integer max(|num|, |den|).
mpz_class rational_height(const mpq_class& q);

}  // namespace effkit
