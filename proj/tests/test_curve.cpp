#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "tfc/curve.hpp"
#include "tfc/errors.hpp"

using namespace tfc;

namespace {
CurvePoint e_point(long m, const Rat& x, const Rat& y) { return CurvePoint::make(CurveId::make(Family::E, m), x, y); }
}  // namespace

TEST_CASE("admissibility gate") {
  for (long m : {0, 1, -1, 2, -2}) CHECK_THROWS_AS(CurveId::make(Family::E, m), InadmissibleError);
  CHECK_THROWS_AS(CurveId::make(Family::C, 8), InadmissibleError);
  CHECK_THROWS_AS(CurveId::make(Family::E, 54), InadmissibleError);
  CHECK_NOTHROW(CurveId::make(Family::E, 4));
  CHECK_NOTHROW(CurveId::make(Family::E, -7));
  CHECK(CurveId::make(Family::Eprime, 6).weierstrass_b() == 576);
  CHECK(CurveId::make(Family::E, 6).weierstrass_b() == -15552);
}

TEST_CASE("points are validated on construction") {
  CHECK_NOTHROW(e_point(6, 28, 80));
  CHECK_THROWS_AS(e_point(6, 28, 81), ArgumentError);
  const CurvePoint p = CurvePoint::unchecked(CurveId::make(Family::E, 6), 28, 81);
  CHECK_FALSE(on_curve(p));
  CHECK(equation_residual(p) == 161);
}

TEST_CASE("group law on E") {
  const CurvePoint p = e_point(6, 28, 80);
  const CurvePoint id = CurvePoint::identity(p.curve());
  CHECK(add(p, negate(p)) == id);
  CHECK(add(p, id) == p);
  CHECK(mul(0, p) == id);
  CHECK(mul(3, p) == add(add(p, p), p));
  CHECK(mul(-2, p) == negate(mul(2, p)));
  CHECK(mul(2, p).x() == Rat(16009, 100));

  SUBCASE("associativity and commutativity on multiples") {
    for (long a = 1; a <= 4; ++a) {
      for (long b = 1; b <= 4; ++b) {
        const CurvePoint pa = mul(a, p), pb = mul(b, p), pc = mul(a + b, p);
        CHECK(add(pa, pb) == pc);
        CHECK(add(pb, pa) == pc);
        CHECK(on_curve(pc));
      }
    }
  }
}

TEST_CASE("cubic and Mordell models correspond") {
  const CurvePoint p = e_point(6, 28, 80);
  const CurvePoint r = to_cubic(p);
  CHECK(r.curve().family() == Family::C);
  CHECK(on_curve(r));
  CHECK(to_mordell(r) == p);
  for (long n = 1; n <= 6; ++n) CHECK(to_cubic(mul(n, p)) == mul(n, r));

  const CurvePoint r9 = CurvePoint::make(CurveId::make(Family::C, 9), 2, 1);
  const CurvePoint m9 = to_mordell(r9);
  CHECK(m9.x() == 36);
  CHECK(m9.y() == 108);
  CHECK(on_curve(m9));
}

TEST_CASE("the 3-isogeny") {
  const CurvePoint pp = CurvePoint::make(CurveId::make(Family::Eprime, 6), -8, 8);
  const CurvePoint p = e_point(6, 28, 80);
  CHECK(sigma(pp) == p);
  CHECK(sigma(add(pp, pp)) == mul(2, p));
  CHECK(sigma(mul(3, pp)) == mul(3, p));
  const auto pre = sigma_preimages(p);
  REQUIRE_FALSE(pre.empty());
  CHECK(std::find(pre.begin(), pre.end(), pp) != pre.end());
  for (const auto& q : pre) CHECK(sigma(q) == p);
}

TEST_CASE("triplication formula against the group law") {
  // Five curves, ten multiples each.
  const std::vector<std::pair<long, std::pair<long, long>>> gens = {
      {6, {28, 80}}, {12, {52, 280}}, {15, {49, 143}}, {20, {84, 648}}, {33, {97, 665}}};
  std::size_t checked = 0;
  for (const auto& [m, xy] : gens) {
    const CurvePoint p = e_point(m, xy.first, xy.second);
    for (long k = 1; k <= 10; ++k) {
      const CurvePoint q = mul(k, p);
      CHECK(x_triple(q.x(), m) == mul(3, q).x());
      ++checked;
    }
  }
  CHECK(checked == 50);
}

TEST_CASE("closed doubling on the cubic") {
  const CurvePoint r = CurvePoint::make(CurveId::make(Family::C, 9), 2, 1);
  const CurvePoint d = double_on_cubic(r);
  CHECK(d.x() == Rat(-17, 7));
  CHECK(d.y() == Rat(20, 7));
  CHECK(d == mul(2, r));

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> dist(-40, 40);
  for (int i = 0; i < 40; ++i) {
    const long u = dist(rng), v = dist(rng);
    if (u == 0 || v == 0 || u == v || u + v == 0 || std::gcd(u, v) != 1) continue;
    const CurveId c = CurveId::unchecked(Family::C, Int(u) * u * u + Int(v) * v * v);
    const CurvePoint q = CurvePoint::make(c, u, v);
    CHECK(double_on_cubic(q) == mul(2, q));
  }
}
