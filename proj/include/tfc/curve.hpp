#pragma once

// The four curve families attached to a twist parameter m:
//
//   C  : U^3 + V^3 = m            (twisted Fermat cubic)
//   C' : U V (U + V) = m
//   E  : Y^2 = X^3 - 432 m^2      (Mordell model of C)
//   E' : y^2 = x^3 + 16 m^2       (source of the 3-isogeny sigma : E' -> E)
//
// Points are stored affine plus an identity flag. The group law is the
// chord-and-tangent law on the Weierstrass models; C inherits it through the
// birational map to E.

#include <optional>
#include <string>
#include <vector>

#include "tfc/arith.hpp"

namespace tfc {

enum class Family { C, Cprime, E, Eprime };

std::string family_name(Family family);

class CurveId {
 public:
  // Rejects m that is not cube-free or lies in {0, +-1, +-2}.
  static CurveId make(Family family, const Int& m);
  // Skips the admissibility gate. Only for deliberately rescaled curves.
  static CurveId unchecked(Family family, const Int& m);

  Family family() const { return family_; }
  const Int& m() const { return m_; }
  CurveId with_family(Family family) const { return CurveId(family, m_); }
  bool is_weierstrass() const { return family_ == Family::E || family_ == Family::Eprime; }
  // b in y^2 = x^3 + b for E / E'.
  Int weierstrass_b() const;
  std::string describe() const;

  bool operator==(const CurveId& other) const { return family_ == other.family_ && m_ == other.m_; }

 private:
  CurveId(Family family, Int m) : family_(family), m_(std::move(m)) {}
  Family family_;
  Int m_;
};

void require_admissible(const Int& m);
bool is_admissible(const Int& m);

class CurvePoint {
 public:
  static CurvePoint identity(const CurveId& curve) { return CurvePoint(curve, std::nullopt); }
  // Throws ArgumentError unless (x, y) satisfies the curve equation.
  static CurvePoint make(const CurveId& curve, Rat x, Rat y);
  // No equation check; used to represent candidate or tampered data.
  static CurvePoint unchecked(const CurveId& curve, Rat x, Rat y);

  const CurveId& curve() const { return curve_; }
  bool is_identity() const { return !coords_.has_value(); }
  // Throw TorsionError on the identity.
  const Rat& x() const;
  const Rat& y() const;

  std::string to_string() const;
  bool operator==(const CurvePoint& other) const { return curve_ == other.curve_ && coords_ == other.coords_; }

 private:
  struct Coords {
    Rat x, y;
    bool operator==(const Coords& o) const { return x == o.x && y == o.y; }
  };
  CurvePoint(const CurveId& curve, std::optional<Coords> coords) : curve_(curve), coords_(std::move(coords)) {}
  CurveId curve_;
  std::optional<Coords> coords_;
};

bool on_curve(const CurvePoint& pt);
// Left side minus right side of the defining equation; zero iff on_curve.
Rat equation_residual(const CurvePoint& pt);

CurvePoint negate(const CurvePoint& pt);
CurvePoint add(const CurvePoint& p, const CurvePoint& q);
CurvePoint mul(long n, const CurvePoint& p);

// E -> C and back:
//   U = (36m + Y) / 6X,  V = (36m - Y) / 6X
//   X = 12m / (U + V),   Y = 36m (U - V) / (U + V)
CurvePoint to_cubic(const CurvePoint& p);
CurvePoint to_mordell(const CurvePoint& r);

// sigma(x, y) = (x + 64m^2/x^2, y (y + 12m)(y - 12m) / ((y + 4m)(y - 4m))).
CurvePoint sigma(const CurvePoint& pp);
// Every rational P' on E' with sigma(P') = P.
std::vector<CurvePoint> sigma_preimages(const CurvePoint& p);

// x(3Q) from x(Q) on E.
Rat x_triple(const Rat& x, const Int& m);

// 2R on C from R = (u, v) via the closed doubling formula.
CurvePoint double_on_cubic(const CurvePoint& r);

}  // namespace tfc
