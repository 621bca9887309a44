#include <cmath>
#include <random>

#include "doctest.h"
#include "tfc/errors.hpp"
#include "tfc/heights.hpp"

using namespace tfc;

namespace {
CurvePoint gen(long m, const Rat& x, const Rat& y) { return CurvePoint::make(CurveId::make(Family::E, m), x, y); }
}  // namespace

TEST_CASE("naive height") {
  CHECK(naive_height(gen(6, 28, 80)) == doctest::Approx(std::log(28.0)).epsilon(1e-15));
  CHECK(naive_height(mul(2, gen(6, 28, 80))) == doctest::Approx(std::log(16009.0)).epsilon(1e-15));
}

TEST_CASE("doubling chain matches exact naive heights") {
  const CurvePoint p = gen(6, 28, 80);
  const auto h = doubling_heights(p, 5);
  CurvePoint q = p;
  for (int k = 0; k <= 5; ++k) {
    CHECK(h[static_cast<std::size_t>(k)] == doctest::Approx(naive_height(q)).epsilon(1e-12));
    q = add(q, q);
  }
}

// The oracle value is h(2^11 P) / 4^11 from tests/oracle/height_oracle.py;
// its own error is at most gap / 4^11 < 1.6e-6.
TEST_CASE("canonical height against the doubling-limit oracle") {
  const double h = canonical_height(gen(6, 28, 80));
  CHECK(std::abs(h - 2.4440861929) < 2e-6);
  CHECK(std::abs(h - 2.4440863217) < 1e-9);
  CHECK(std::abs(canonical_height(gen(20, 84, 648)) - 1.7802311977) < 2e-6);
  const CurvePoint pp = CurvePoint::make(CurveId::make(Family::Eprime, 6), -8, 8);
  CHECK(std::abs(canonical_height(pp) - 0.8146957489) < 2e-6);
}

TEST_CASE("isogeny triples the height") {
  const CurvePoint pp = CurvePoint::make(CurveId::make(Family::Eprime, 6), -8, 8);
  CHECK(std::abs(canonical_height(sigma(pp)) - 3 * canonical_height(pp)) < 1e-7);
}

TEST_CASE("quadratic scaling and the gap") {
  const CurvePoint p = gen(15, 49, 143);
  const double h1 = canonical_height(p);
  CurvePoint q = p;
  for (long n = 1; n <= 8; ++n) {
    if (n > 1) q = add(q, p);
    const HeightReport r = height_report(q);
    CHECK(std::abs(r.canonical - double(n * n) * h1) < 1e-6);
    CHECK(r.within_gap());
    CHECK(r.precision <= 1e-8);
  }
}

TEST_CASE("gap bounds") {
  const GapBounds g = silverman_gap(CurveId::make(Family::E, 6));
  CHECK(g.lower < 0);
  CHECK(g.upper > 0);
  CHECK(g.lower == doctest::Approx(-6.36871910694).epsilon(1e-10));
  CHECK(g.upper == doctest::Approx(6.17471910694).epsilon(1e-10));
}

TEST_CASE("torsion has no finite canonical height here") {
  const CurvePoint t = CurvePoint::make(CurveId::unchecked(Family::E, 1), 12, 36);
  CHECK_THROWS_AS(canonical_height(t), TorsionError);
  CHECK_THROWS_AS(canonical_height(CurvePoint::identity(CurveId::make(Family::E, 6))), TorsionError);
}

TEST_CASE("index bound") {
  CHECK(height_lower_bound(6) == doctest::Approx(std::log(6.0) / 81 - 0.039));
  CHECK_THROWS_AS(bn_index_bound(6), BoundUnavailableError);
  CHECK_THROWS_AS(bn_index_bound(8), InadmissibleError);
  // Reference values from a direct search over n in Python.
  CHECK(bn_index_bound(354) == 21);
  CHECK(bn_index_bound(999998) == 14);

  SUBCASE("bound is tight: the inequality holds past it and fails at it") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> dist(354, 1000000);
    int sampled = 0;
    while (sampled < 20) {
      const Int m = dist(rng);
      if (!is_cube_free(m)) continue;
      ++sampled;
      const long b = bn_index_bound(m);
      CHECK(b <= 22);
      CHECK(appendix_height_bound(b + 1, m, height_lower_bound(m)));
      if (b > 1) CHECK_FALSE(appendix_height_bound(b, m, height_lower_bound(m)));
    }
  }
}
