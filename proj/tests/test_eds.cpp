#include "doctest.h"
#include "tfc/eds.hpp"
#include "tfc/errors.hpp"

using namespace tfc;

namespace {

CurvePoint gen(long m, const Rat& x, const Rat& y) { return CurvePoint::make(CurveId::make(Family::E, m), x, y); }

const CurvePoint& m6() {
  static const CurvePoint p = gen(6, 28, 80);
  return p;
}

}  // namespace

// Frozen from tests/oracle/eds_oracle.py.
TEST_CASE("m = 6 terms") {
  const Sequence seq(m6(), 22);
  const char* w[] = {"21", "960540", "112490043311709", "16418498901144294337512360",
                     "1656612558269878206649233638396238647469"};
  const long d[] = {8, 1, 8, 1, 8};
  for (long n = 1; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(seq.W(n) == Int(w[n - 1]));
    CHECK(seq.c_term(n).d == d[n - 1]);
  }
  CHECK(to_string(seq.W(22)).size() == 771);
  CHECK(seq.A(1) == 28);
  CHECK(seq.B(1) == 1);
  CHECK(seq.B(2) == 10);
}

TEST_CASE("every term satisfies both model equations") {
  for (const auto& p : {m6(), gen(20, 84, 648), gen(22, Rat(553, 9), Rat(4085, 27))}) {
    const Int& m = p.curve().m();
    const Sequence seq(p, 12);
    for (long n = 1; n <= 12; ++n) {
      const WTerm& wt = seq.w_term(n);
      const CTerm& ct = seq.c_term(n);
      CHECK(wt.c * wt.c == wt.a * wt.a * wt.a - 432 * m * m * pow_int(wt.b, 6));
      CHECK(ct.u * ct.u * ct.u + ct.v * ct.v * ct.v == m * ct.w * ct.w * ct.w);
      CHECK(ct.w > 0);
      CHECK(gcd(gcd(ct.u, ct.v), ct.w) == 1);
    }
  }
}

TEST_CASE("cancellation") {
  CHECK(Sequence(gen(20, 84, 648), 1).c_term(1).d == 72);
  CHECK(predicted_cancellation(Int(84), 20) == 72);
  CHECK(predicted_cancellation(Int(35), 35) == 35);
  CHECK(predicted_cancellation(Int(1), 6) == 1);
  for (const auto& p : {m6(), gen(15, 49, 143), gen(20, 84, 648), gen(70, 156, 1296)}) {
    const Sequence seq(p, 12);
    for (long n = 1; n <= 12; ++n) {
      const Int& dn = seq.c_term(n).d;
      CHECK(dn == predicted_cancellation(seq.A(n), p.curve().m()));
      CHECK(mpz_divisible_p(Int(72 * p.curve().m()).get_mpz_t(), dn.get_mpz_t()));
    }
  }
}

TEST_CASE("strong divisibility") {
  const Sequence seq(m6(), 12);
  for (long r = 1; r <= 12; ++r) {
    for (long n = 1; n <= 12; ++n) CHECK(check_strong_divisibility(seq, r, n));
  }
}

TEST_CASE("valuation laws") {
  const Sequence seq(m6(), 24);
  const ValuationReport r = check_valuation_laws(seq, 1, 3, 3);
  CHECK(r.all_hold());
  bool saw_w = false, saw_small = false;
  for (const auto& c : r.checks) {
    if (c.law == "W_ord" && c.status == LawStatus::holds) {
      saw_w = true;
      CHECK(c.observed == 2);
    }
    if (c.law == "small_B" && c.status == LawStatus::holds) {
      saw_small = true;
      CHECK(c.observed == 1);
    }
  }
  CHECK(saw_w);
  CHECK(saw_small);

  for (const auto& p : {m6(), gen(15, 49, 143), gen(20, 84, 648)}) {
    const Sequence s(p, 24);
    for (long n = 1; n <= 24; ++n) {
      for (long k = 1; n * k <= 24; ++k) {
        for (long q : {2, 3, 5}) CHECK(check_valuation_laws(s, n, k, q).all_hold());
        CHECK(check_valuation_laws_all_large_primes(s, n, k).all_hold());
      }
    }
  }
}

TEST_CASE("primitive divisors") {
  const Sequence seq(m6(), 6);
  const long expected[] = {2, 17, 11, 241};
  for (long n = 2; n <= 5; ++n) {
    const PrimitiveDivisor pd = w_primitive_divisor(seq, n);
    REQUIRE(pd.smallest.has_value());
    CHECK(*pd.smallest == expected[n - 2]);
  }
  const PrimitiveDivisor none = primitive_divisor({Int(6), Int(12)});
  CHECK_FALSE(none.exists);
  CHECK_THROWS_AS(w_primitive_divisor(seq, 1), ArgumentError);
}

TEST_CASE("classification") {
  CHECK(classify_term(1).kind == Classification::Kind::unit);
  CHECK(classify_term(7).to_string() == "prime(7)");
  CHECK(classify_term(243).to_string() == "prime_power(3^5)");
  CHECK(classify_term(960540).to_string() == "composite(5 distinct primes)");
  const Classification big = classify_term(pow_int(Int("1000000007"), 2));
  CHECK(big.is_prime_power());
}

TEST_CASE("coprime witness") {
  const auto w = coprime_factor_witness(m6(), 2);
  REQUIRE(w.has_value());
  CHECK(w->f1 == 48027);
  CHECK(w->f2 == 20);
  CHECK(w->f1 * w->f2 == 960540);
  CHECK_FALSE(coprime_factor_witness(m6(), 1).has_value());  // B_1 = 1
  const Sequence seq(m6(), 22);
  for (long n = 2; n <= 22; ++n) {
    const auto x = coprime_factor_witness(seq, n);
    REQUIRE(x.has_value());
    CHECK(gcd(x->f1, x->f2) == 1);
    CHECK(x->f1 > 1);
    CHECK(x->f2 > 1);
    CHECK(x->f1 * x->f2 == seq.W(n));
  }
}

TEST_CASE("errors") {
  const CurveId unit = CurveId::unchecked(Family::E, 1);
  CHECK_THROWS_AS(Sequence(CurvePoint::make(unit, 12, 36), 12), TorsionError);
  const CurvePoint r = CurvePoint::make(CurveId::make(Family::C, 9), 2, 1);
  CHECK_THROWS_AS(Sequence(r, 3), ArgumentError);
  CHECK_THROWS_AS(Sequence(m6(), 0), ArgumentError);
}
