#include "tfc/poly_catalog.hpp"

#include <map>
#include <random>

#include "tfc/curve.hpp"
#include "tfc/errors.hpp"

namespace tfc {

namespace {

HomogPoly sparse(unsigned degree, std::initializer_list<std::pair<unsigned, long>> terms) {
  std::vector<Int> c(degree + 1, Int(0));
  for (const auto& [e, k] : terms) c[e] = k;
  return HomogPoly(degree, std::move(c));
}

HomogPoly dense(std::initializer_list<long> by_u_exponent) {
  std::vector<Int> c;
  for (long k : by_u_exponent) c.emplace_back(k);
  const auto d = static_cast<unsigned>(c.size() - 1);
  return HomogPoly(d, std::move(c));
}

IntPoly univariate(std::initializer_list<long> constant_first) {
  std::vector<Int> c;
  for (long k : constant_first) c.emplace_back(k);
  return IntPoly(std::move(c));
}

CatalogEntry entry(std::string id, std::string role, HomogPoly form) {
  IntPoly p = form.at_v1();
  return CatalogEntry{std::move(id), std::move(role), std::move(form), std::move(p)};
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;

  // n = 2, on the isogenous cubic UV(U+V) = m.
  const HomogPoly l1 = dense({-1, 1});  // u - v
  const HomogPoly l2 = dense({2, 1});   // u + 2v
  const HomogPoly l3 = dense({1, 2});   // 2u + v
  const HomogPoly q = dense({1, 1, 1});
  const HomogPoly g22 = dense({1, 3, 60, 115, 60, 3, 1});
  const HomogPoly g21 = l1 * l2 * l3;
  out.push_back(entry("l21", "2R denominator, linear factor u - v", l1));
  out.push_back(entry("l22", "2R denominator, linear factor u + 2v", l2));
  out.push_back(entry("l23", "2R denominator, linear factor 2u + v", l3));
  out.push_back(entry("g21", "2R denominator, product of the linear factors", g21));
  out.push_back(entry("g22", "2R denominator, sextic factor", g22));
  out.push_back(entry("g2", "2R denominator", Int(-3) * g21 * q * g22));

  // n = 3.
  const HomogPoly g3 = sparse(6, {{6, 1}, {3, 1}, {0, 1}});
  out.push_back(entry("f3u", "3R numerator of U", sparse(9, {{9, 1}, {6, 6}, {3, 3}, {0, -1}})));
  out.push_back(entry("f3", "3R numerator of V", sparse(9, {{9, -1}, {6, 3}, {3, 6}, {0, 1}})));
  out.push_back(entry("g3", "3R denominator without the 3uv factor", g3));
  out.push_back(entry("d3", "3R denominator 3uv g3", Int(3) * dense({0, 1, 0}) * g3));

  // n = 4.
  out.push_back(entry("f4", "4R numerator of U",
                      sparse(16, {{16, -1}, {13, 8}, {10, 32}, {7, 28}, {4, 10}, {1, 4}})));
  out.push_back(entry("f4p", "4R numerator of V",
                      sparse(16, {{0, 1}, {3, -8}, {6, -32}, {9, -28}, {12, -10}, {15, -4}})));
  out.push_back(entry("g4", "4R denominator",
                      sparse(15, {{15, -1}, {12, -13}, {9, -10}, {6, 10}, {3, 13}, {0, 1}})));
  out.push_back(entry("g41", "4R denominator, factor v - u", dense({1, -1})));
  out.push_back(entry("g42", "4R denominator, quadratic factor", q));
  out.push_back(entry("g43", "4R denominator, quartic factor", dense({1, 2, 0, 2, 1})));
  out.push_back(entry("g44", "4R denominator, octic factor", dense({1, -2, 4, 4, -5, 4, 4, -2, 1})));

  // n = 5.
  out.push_back(entry("g51", "5R denominator, octic factor", dense({1, -2, -2, 1, -5, 1, -2, -2, 1})));
  out.push_back(entry("g52", "5R denominator, degree 16 factor",
                      dense({1, 2, 6, -2, 11, 21, -11, -1, 27, -1, -11, 21, 11, -2, 6, 2, 1})));
  out.push_back(CatalogEntry{"h51", "g51(1 + X, 1)", std::nullopt,
                             univariate({-9, -36, -63, -63, -30, 3, 12, 6, 1})});
  out.push_back(CatalogEntry{"h52", "g52(1 + X, 1)", std::nullopt,
                             univariate({81, 648, 2916, 9072, 20871, 36774, 50814, 55971, 49617, 35496, 20394,
                                         9279, 3261, 852, 156, 18, 1})});

  // Daylight construction: W_2 for R = (u, v) divides these.
  out.push_back(entry("dq", "daylight quadratic u^2 + uv + v^2", q));
  out.push_back(entry("dc", "daylight cubic 2u^3 + v^3", sparse(3, {{3, 2}, {0, 1}})));
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& polynomial_catalog() {
  static const std::vector<CatalogEntry> catalog = build();
  return catalog;
}

const CatalogEntry& catalog_entry(const std::string& id) {
  for (const auto& e : polynomial_catalog()) {
    if (e.id == id) return e;
  }
  throw ArgumentError("unknown polynomial id '" + id + "'");
}

const HomogPoly& catalog_form(const std::string& id) {
  const CatalogEntry& e = catalog_entry(id);
  if (!e.form) throw ArgumentError("polynomial '" + id + "' is univariate, not a form in (u, v)");
  return *e.form;
}

DenominatorSet denominator_polys(int n) {
  DenominatorSet s;
  s.n = n;
  switch (n) {
    case 2:
      s.g = catalog_form("g2");
      s.factor_ids = {"l21", "l22", "l23", "g42", "g22"};
      break;
    case 3:
      s.f = catalog_form("f3u");
      s.fprime = catalog_form("f3");
      s.g = catalog_form("d3");
      s.factor_ids = {"g3"};
      break;
    case 4:
      s.f = catalog_form("f4");
      s.fprime = catalog_form("f4p");
      s.g = catalog_form("g4");
      s.factor_ids = {"g41", "g42", "g43", "g44"};
      break;
    case 5:
      s.factor_ids = {"g51", "g52"};
      break;
    default:
      throw ArgumentError("denominator_polys: only n = 2..5 are stored, got " + std::to_string(n));
  }
  return s;
}

IdentityCheck check_multiplication_identity(int n, unsigned samples, std::uint64_t seed) {
  if (n < 3 || n > 5) throw ArgumentError("check_multiplication_identity: n must be 3, 4 or 5");
  IdentityCheck out;
  out.n = n;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-60, 60);
  unsigned attempts = 0;
  while (out.samples < samples) {
    if (++attempts > 100 * samples + 100) throw std::logic_error("check_multiplication_identity: no usable points");
    const Int u = dist(rng), v = dist(rng);
    if (u == 0 || v == 0 || u + v == 0 || gcd(u, v) != 1) continue;
    const Int m = u * u * u + v * v * v;
    const CurveId c = CurveId::unchecked(Family::C, m);
    CurvePoint nr = CurvePoint::identity(c);
    try {
      nr = mul(n, CurvePoint::make(c, Rat(u), Rat(v)));
      if (nr.is_identity()) continue;
    } catch (const SingularMapError&) {
      continue;
    }
    ++out.samples;
    bool ok = false;
    if (n == 5) {
      const Int lhs = catalog_form("g51").eval(u, v) * catalog_form("g52").eval(u, v);
      const Int w = nr.x().get_den();
      ok = mpz_divisible_p(lhs.get_mpz_t(), w.get_mpz_t()) && p_power_exponent(Int(lhs / w), 3).has_value();
    } else {
      const DenominatorSet s = denominator_polys(n);
      const Int g = s.g->eval(u, v);
      ok = g != 0 && make_rat(s.f->eval(u, v), g) == nr.x() && make_rat(s.fprime->eval(u, v), g) == nr.y();
    }
    if (ok) {
      ++out.agreed;
    } else {
      out.failures.push_back("(" + to_string(u) + ", " + to_string(v) + ")");
    }
  }
  return out;
}

}  // namespace tfc
