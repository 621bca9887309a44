#pragma once

// Exact integer / rational kernel. Integers and rationals are GMP values;
// everything here is a pure function of its arguments.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tfc {

using Int = mpz_class;
// Always kept canonical: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
using Rat = mpq_class;

Rat make_rat(const Int& num, const Int& den);
// Accepts "a", "-a", "a/b". Throws ParseError on anything else or b = 0.
Rat parse_rat(std::string_view text);
Int parse_int(std::string_view text);
std::string to_string(const Int& value);
std::string to_string(const Rat& value);

// p-adic valuation. Negative for primes in the denominator of a rational.
long padic_ord(const Int& x, const Int& p);
long padic_ord(const Rat& x, const Int& p);

enum class Primality { composite, prime, probable_prime };

// Deterministic Miller-Rabin below 2^64; BPSW (GMP) above, reported as
// probable_prime.
Primality primality(const Int& n);
bool is_prime(const Int& n);

struct PrimePower {
  Int prime;
  unsigned exponent = 0;
  bool operator==(const PrimePower&) const = default;
};

// (p, k) with |n| = p^k, if any. Throws ArgumentError for |n| <= 1.
std::optional<PrimePower> is_prime_power(const Int& n);

struct FactorBudget {
  std::uint64_t trial_bound = 1'000'000;
  std::uint64_t rho_iterations = 200'000;  // per attempt
  unsigned rho_attempts = 6;
};

struct PrimeFactor {
  Int prime;
  unsigned exponent = 0;
  bool operator==(const PrimeFactor&) const = default;
};

struct Factorization {
  int sign = 1;
  std::vector<PrimeFactor> factors;  // strictly increasing primes
  Int cofactor = 1;                  // unfactored remainder, coprime to factors
  bool complete = true;              // complete <=> cofactor == 1
  bool probable = false;             // some listed prime is only a BPSW prime

  Int value() const;  // sign * prod p^e * cofactor
  std::size_t distinct_primes() const { return factors.size(); }
};

// Trial division to budget.trial_bound, then Brent-Pollard rho under the
// iteration cap. Negative input is factored by absolute value. Throws
// ArgumentError on zero.
Factorization factor(const Int& n, const FactorBudget& budget = {});

// Primes up to 10^6, computed once.
const std::vector<std::uint32_t>& small_primes();

// The largest divisor of n that shares no prime with `with`, found by
// repeated gcd stripping (no factoring involved).
Int coprime_part(Int n, const Int& with);

bool is_cube_free(const Int& m);

Int abs_int(const Int& x);
Int pow_int(const Int& base, unsigned long exponent);

}  // namespace tfc
