#include <random>

#include "doctest.h"
#include "tfc/arith.hpp"
#include "tfc/errors.hpp"

using namespace tfc;

TEST_CASE("rationals parse exactly and normalize") {
  CHECK(parse_rat("6/4") == Rat(3, 2));
  CHECK(parse_rat("-553/9") == Rat(-553, 9));
  CHECK(parse_rat("17") == 17);
  CHECK_THROWS_AS(parse_rat(" 17"), ParseError);
  CHECK(to_string(parse_rat("10/-4")) == "-5/2");
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rat("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rat(""), ParseError);
  CHECK_THROWS_AS(parse_int("3/2"), ParseError);
  CHECK(make_rat(6, -4) == Rat(-3, 2));
}

TEST_CASE("p-adic orders") {
  CHECK(padic_ord(Int(72), 2) == 3);
  CHECK(padic_ord(Int(72), 3) == 2);
  CHECK(padic_ord(Int(72), 5) == 0);
  CHECK(padic_ord(Rat(9, 8), 2) == -3);
  CHECK_THROWS_AS(padic_ord(Int(0), 2), UndefinedValuationError);
  CHECK_THROWS_AS(padic_ord(Int(10), 4), ArgumentError);
}

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));         // Carmichael
  CHECK_FALSE(is_prime(3215031751));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK(is_prime(Int("170141183460469231731687303715884105727")));  // 2^127 - 1
  CHECK_FALSE(is_prime(Int("147573952589676412927")));              // 2^67 - 1
  CHECK(primality(Int(1000003)) == Primality::prime);
}

TEST_CASE("prime powers") {
  CHECK(is_prime_power(pow_int(3, 20)) == PrimePower{3, 20});
  CHECK(is_prime_power(7) == PrimePower{7, 1});
  CHECK_FALSE(is_prime_power(12).has_value());
  CHECK_THROWS_AS(is_prime_power(1), ArgumentError);
  CHECK(is_prime_power(pow_int(Int("1000000007"), 3)) == PrimePower{Int("1000000007"), 3});
}

TEST_CASE("factorization") {
  const Factorization f = factor(Int("147573952589676412927"));
  REQUIRE(f.complete);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].prime == 193707721);
  CHECK(f.factors[1].prime == Int("761838257287"));

  const Factorization g = factor(-960540);
  CHECK(g.sign == -1);
  CHECK(g.distinct_primes() == 5);
  CHECK(g.value() == -960540);

  SUBCASE("value() reassembles random inputs") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
      Int n = Int(std::to_string(rng() >> 1)) * Int(std::to_string(rng() % 1000000 + 1));
      const Factorization h = factor(n);
      CHECK(h.value() == n);
      if (h.complete) {
        for (const auto& pf : h.factors) CHECK(is_prime(pf.prime));
      }
    }
  }
}

TEST_CASE("an exhausted budget leaves a cofactor") {
  FactorBudget tiny;
  tiny.trial_bound = 100;
  tiny.rho_iterations = 10;
  tiny.rho_attempts = 1;
  const Int n = Int("1000000007") * Int("998244353");
  const Factorization f = factor(n, tiny);
  CHECK_FALSE(f.complete);
  CHECK(f.value() == n);
}

TEST_CASE("cube-free and coprime parts") {
  CHECK(is_cube_free(6));
  CHECK(is_cube_free(9));
  CHECK_FALSE(is_cube_free(8));
  CHECK_FALSE(is_cube_free(999999));  // 3^3 * 37037
  CHECK(is_cube_free(999998));
  CHECK(coprime_part(Int(2 * 2 * 2 * 2 * 2 * 3 * 7), 6) == 7);
  CHECK(coprime_part(Int(960540), 20) == 48027);
}
