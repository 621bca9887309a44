#include "tfc/curve.hpp"

#include <algorithm>

#include "tfc/errors.hpp"

namespace tfc {

namespace {

void require_family(const CurvePoint& p, Family family, const char* op) {
  if (p.curve().family() != family) {
    throw ArgumentError(std::string(op) + ": expected a point on " + family_name(family) + ", got one on " +
                        family_name(p.curve().family()));
  }
}

CurvePoint weierstrass_add(const CurvePoint& p, const CurvePoint& q) {
  if (p.is_identity()) return q;
  if (q.is_identity()) return p;
  const Rat &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
  Rat slope;
  if (x1 == x2) {
    if (y1 != y2 || y1 == 0) return CurvePoint::identity(p.curve());
    slope = 3 * x1 * x1 / (2 * y1);
  } else {
    slope = (y2 - y1) / (x2 - x1);
  }
  Rat x3 = slope * slope - x1 - x2;
  Rat y3 = slope * (x1 - x3) - y1;
  return CurvePoint::unchecked(p.curve(), std::move(x3), std::move(y3));
}

// The unique integer root of a monic cubic on [lo, hi] where it is monotone,
// if one exists.
std::optional<Int> integer_root_monotone(const auto& f, Int lo, Int hi) {
  if (lo > hi) return std::nullopt;
  const int s_lo = sgn(f(lo));
  const int s_hi = sgn(f(hi));
  if (s_lo == 0) return lo;
  if (s_hi == 0) return hi;
  if (s_lo == s_hi) return std::nullopt;
  // Invariant: sign(f(lo)) = s_lo != sign(f(hi)).
  while (hi - lo > 1) {
    Int mid = (lo + hi) / 2;
    const int s = sgn(f(mid));
    if (s == 0) return mid;
    if (s == s_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::nullopt;
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

std::string family_name(Family family) {
  switch (family) {
    case Family::C:
      return "C";
    case Family::Cprime:
      return "C'";
    case Family::E:
      return "E";
    case Family::Eprime:
      return "E'";
  }
  return "?";
}

bool is_admissible(const Int& m) {
  if (abs(m) <= 2) return false;
  return is_cube_free(m);
}

void require_admissible(const Int& m) {
  if (abs(m) <= 2) throw InadmissibleError("m = " + to_string(m) + " is inadmissible (m in {0, +-1, +-2})");
  if (!is_cube_free(m)) throw InadmissibleError("m = " + to_string(m) + " is not cube-free");
}

CurveId CurveId::make(Family family, const Int& m) {
  require_admissible(m);
  return CurveId(family, m);
}

CurveId CurveId::unchecked(Family family, const Int& m) {
  if (m == 0) throw InadmissibleError("m = 0 gives a singular curve");
  return CurveId(family, m);
}

Int CurveId::weierstrass_b() const {
  switch (family_) {
    case Family::E:
      return Int(-432) * m_ * m_;
    case Family::Eprime:
      return Int(16) * m_ * m_;
    default:
      throw ArgumentError("weierstrass_b: " + family_name(family_) + " is not a Weierstrass model");
  }
}

std::string CurveId::describe() const { return family_name(family_) + "[m=" + to_string(m_) + "]"; }

CurvePoint CurvePoint::make(const CurveId& curve, Rat x, Rat y) {
  CurvePoint p = unchecked(curve, std::move(x), std::move(y));
  if (!on_curve(p)) throw ArgumentError("point " + p.to_string() + " is not on " + curve.describe());
  return p;
}

CurvePoint CurvePoint::unchecked(const CurveId& curve, Rat x, Rat y) {
  x.canonicalize();
  y.canonicalize();
  return CurvePoint(curve, Coords{std::move(x), std::move(y)});
}

const Rat& CurvePoint::x() const {
  if (!coords_) throw TorsionError("identity has no affine coordinates");
  return coords_->x;
}

const Rat& CurvePoint::y() const {
  if (!coords_) throw TorsionError("identity has no affine coordinates");
  return coords_->y;
}

std::string CurvePoint::to_string() const {
  if (!coords_) return "O";
  return "(" + tfc::to_string(coords_->x) + ", " + tfc::to_string(coords_->y) + ")";
}

Rat equation_residual(const CurvePoint& pt) {
  if (pt.is_identity()) return 0;
  const Rat &x = pt.x(), &y = pt.y();
  const Int& m = pt.curve().m();
  switch (pt.curve().family()) {
    case Family::C:
      return x * x * x + y * y * y - m;
    case Family::Cprime:
      return x * y * (x + y) - m;
    case Family::E:
    case Family::Eprime:
      return y * y - x * x * x - pt.curve().weierstrass_b();
  }
  return 0;
}

bool on_curve(const CurvePoint& pt) { return equation_residual(pt) == 0; }

CurvePoint negate(const CurvePoint& pt) {
  if (pt.is_identity()) return pt;
  switch (pt.curve().family()) {
    case Family::E:
    case Family::Eprime:
      return CurvePoint::unchecked(pt.curve(), pt.x(), -pt.y());
    case Family::C:
      return CurvePoint::unchecked(pt.curve(), pt.y(), pt.x());
    case Family::Cprime:
      break;
  }
  throw ArgumentError("negate: no group law implemented on C'");
}

CurvePoint add(const CurvePoint& p, const CurvePoint& q) {
  if (!(p.curve() == q.curve())) {
    throw ArgumentError("add: points lie on different curves " + p.curve().describe() + " and " +
                        q.curve().describe());
  }
  switch (p.curve().family()) {
    case Family::E:
    case Family::Eprime:
      return weierstrass_add(p, q);
    case Family::C:
      return to_cubic(weierstrass_add(to_mordell(p), to_mordell(q)));
    case Family::Cprime:
      break;
  }
  throw ArgumentError("add: no group law implemented on C'");
}

CurvePoint mul(long n, const CurvePoint& p) {
  if (n < 0) return negate(mul(-n, p));
  if (p.curve().family() == Family::C) return to_cubic(mul(n, to_mordell(p)));
  CurvePoint result = CurvePoint::identity(p.curve());
  CurvePoint base = p;
  auto k = static_cast<unsigned long>(n);
  while (k) {
    if (k & 1) result = add(result, base);
    k >>= 1;
    if (k) base = add(base, base);
  }
  return result;
}

CurvePoint to_cubic(const CurvePoint& p) {
  require_family(p, Family::E, "to_cubic");
  const CurveId c = p.curve().with_family(Family::C);
  if (p.is_identity()) return CurvePoint::identity(c);
  if (p.x() == 0) throw SingularMapError("to_cubic: X = 0 is outside the domain of the birational map");
  const Rat k = Rat(36 * p.curve().m());
  const Rat den = 6 * p.x();
  return CurvePoint::unchecked(c, (k + p.y()) / den, (k - p.y()) / den);
}

CurvePoint to_mordell(const CurvePoint& r) {
  require_family(r, Family::C, "to_mordell");
  const CurveId e = r.curve().with_family(Family::E);
  if (r.is_identity()) return CurvePoint::identity(e);
  const Rat s = r.x() + r.y();
  if (s == 0) throw SingularMapError("to_mordell: U + V = 0");
  const Int& m = r.curve().m();
  return CurvePoint::unchecked(e, Rat(12 * m) / s, Rat(36 * m) * (r.x() - r.y()) / s);
}

CurvePoint sigma(const CurvePoint& pp) {
  require_family(pp, Family::Eprime, "sigma");
  const CurveId e = pp.curve().with_family(Family::E);
  if (pp.is_identity()) return CurvePoint::identity(e);
  const Rat &x = pp.x(), &y = pp.y();
  const Rat m = pp.curve().m();
  if (x == 0 || y == 4 * m || y == -4 * m) {
    throw SingularMapError("sigma: " + pp.to_string() + " lies in the kernel of the isogeny");
  }
  Rat big_x = x + 64 * m * m / (x * x);
  Rat big_y = y * (y + 12 * m) * (y - 12 * m) / ((y + 4 * m) * (y - 4 * m));
  return CurvePoint::unchecked(e, std::move(big_x), std::move(big_y));
}

std::vector<CurvePoint> sigma_preimages(const CurvePoint& p) {
  require_family(p, Family::E, "sigma_preimages");
  if (p.is_identity()) throw ArgumentError("sigma_preimages: affine point required");
  const Int& m = p.curve().m();
  const Int a = p.x().get_num();
  const Int b2 = p.x().get_den();
  // x^3 - X x^2 + 64 m^2 = 0 with x = t / den(X) becomes the monic integer
  // cubic t^3 - A t^2 + 64 m^2 den(X)^3 = 0, so rational roots are integers.
  const Int c = 64 * m * m * b2 * b2 * b2;
  auto f = [&](const Int& t) { return Int(t * t * t - a * t * t + c); };

  const Int bound = abs(a) + abs(c) + 1;  // Cauchy bound for the roots
  // Critical points are 0 and 2A/3; round outward so each piece is monotone.
  const Int two_a = 2 * a;
  const Int crit_lo = sgn(a) < 0 ? floor_div(two_a, Int(3)) : Int(0);
  const Int crit_hi = sgn(a) > 0 ? ceil_div(two_a, Int(3)) : Int(0);

  std::vector<Int> roots;
  auto consider = [&](std::optional<Int> r) {
    if (r && std::find(roots.begin(), roots.end(), *r) == roots.end()) roots.push_back(*r);
  };
  consider(integer_root_monotone(f, -bound, crit_lo));
  consider(integer_root_monotone(f, Int(crit_lo + 1), Int(crit_hi - 1)));
  consider(integer_root_monotone(f, crit_hi, bound));

  const CurveId ep = p.curve().with_family(Family::Eprime);
  std::vector<CurvePoint> out;
  for (const Int& t : roots) {
    const Rat x = make_rat(t, b2);
    const Rat rhs = x * x * x + Rat(16 * m * m);
    if (sgn(rhs) < 0) continue;
    const Int& nn = rhs.get_num();
    const Int& dd = rhs.get_den();
    if (!mpz_perfect_square_p(nn.get_mpz_t()) || !mpz_perfect_square_p(dd.get_mpz_t())) continue;
    const Rat y = make_rat(sqrt(nn), sqrt(dd));
    for (const Rat& cand : {y, Rat(-y)}) {
      const CurvePoint pp = CurvePoint::unchecked(ep, x, cand);
      if (x == 0 || cand == 4 * Rat(m) || cand == -4 * Rat(m)) continue;
      if (sigma(pp) == p) out.push_back(pp);
      if (cand == 0) break;
    }
  }
  return out;
}

Rat x_triple(const Rat& x, const Int& m) {
  const Rat m2 = Rat(m * m);
  const Rat x3 = x * x * x;
  const Rat k = Rat(64 * 27) * m2;  // 2^6 3^3 m^2
  const Rat den = 9 * x * x * (x3 - k) * (x3 - k);
  if (den == 0) throw SingularMapError("x_triple: denominator 9x^2(x^3 - 1728m^2)^2 vanishes");
  const Rat m4 = m2 * m2;
  const Rat num = x3 * x3 * x3 + Rat(512 * 81) * x3 * x3 * m2 + Rat(4096 * 2187) * x3 * m4 -
                  Rat(Int(262144) * 19683) * m4 * m2;
  return num / den;
}

CurvePoint double_on_cubic(const CurvePoint& r) {
  require_family(r, Family::C, "double_on_cubic");
  if (r.is_identity()) return r;
  const Rat &u = r.x(), &v = r.y();
  const Rat u3 = u * u * u, v3 = v * v * v;
  const Rat den = u3 - v3;
  if (den == 0) throw SingularMapError("double_on_cubic: u^3 = v^3");
  return CurvePoint::unchecked(r.curve(), (-2 * v * u3 - v3 * v) / den, (u3 * u + 2 * v3 * u) / den);
}

}  // namespace tfc
