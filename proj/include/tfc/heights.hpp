#pragma once

// Heights on the Weierstrass models E and E'. Heights are in natural log
// units and follow the convention h(P) = log max{|A|, B^2} for
// x(P) = A / B^2, so the Silverman constants 2.14 and 1.946 apply as they
// stand (no factor of 1/2).

#include <vector>

#include "tfc/curve.hpp"

namespace tfc {

struct HeightReport {
  double naive = 0;
  double canonical = 0;
  double gap_lower = 0;
  double gap_upper = 0;
  double precision = 0;  // |canonical - true value| < precision
  int doublings = 0;
  bool within_gap() const { return gap_lower <= naive - canonical && naive - canonical <= gap_upper; }
};

struct GapBounds {
  double lower = 0;
  double upper = 0;
};

// log max{|num x|, den x}. Throws TorsionError on the identity.
double naive_height(const CurvePoint& p);

// lim h(2^k P) / 4^k. The doubling chain is followed in projective
// coordinates: the archimedean part with 200-bit MPFR floats on the
// normalized pair, the gcd removed at each step exactly, prime by prime,
// from p-adic representatives (only primes of 6m can divide it). Stops once
// the Silverman gap divided by 4^k is below tol.
double canonical_height(const CurvePoint& p, double tol = 1e-8);
HeightReport height_report(const CurvePoint& p, double tol = 1e-8);

// h(2^k P) for k = 0..k_max as produced by the same recursion; an oracle
// hook, since for small k these can be compared with exact coordinates.
std::vector<double> doubling_heights(const CurvePoint& p, int k_max);

// Bounds on h(Q) - h^(Q) for y^2 = x^3 + b, with j = 0 and
// Delta = -432 b^2.
GapBounds silverman_gap(const CurveId& curve);

// Lower bound for h^(P') on E': (1/81) log m - 0.039.
double height_lower_bound(const Int& m);

// Smallest N with
//   (log(m)/81 - 0.039) n^2 - (2/3) log m - (1/2) log 48 - 2.14 > log(8m)
// for every n > N. Throws BoundUnavailableError when the leading
// coefficient is not positive.
long bn_index_bound(const Int& m);

// The same inequality at a single n with h_min in place of the height bound.
bool appendix_height_bound(long n, const Int& m, double h_min = 40.0 / 3.0);

}  // namespace tfc
