#pragma once

// Exact integer polynomials for the small-n denominator analysis:
// resultants, p-adic Newton polygons, and bounded searches for
// g(u, v) = +-p^k.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tfc/arith.hpp"

namespace tfc {

// Univariate, constant term first. Trailing zeros are trimmed; the zero
// polynomial has no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(long i) const;
  const Int& lead() const;
  Int content() const;  // gcd of coefficients, >= 0
  Int eval(const Int& x) const;
  std::string to_string(const std::string& var = "X") const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Int& s, const IntPoly& a);
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

 private:
  void trim();
  std::vector<Int> c_;
};

// Binary form sum_i c_i u^i v^(D-i) of a fixed total degree D.
class HomogPoly {
 public:
  HomogPoly() = default;
  // coeffs[i] multiplies u^i v^(degree - i); size must be degree + 1.
  HomogPoly(unsigned degree, std::vector<Int> coeffs);

  unsigned degree() const { return d_; }
  const std::vector<Int>& coeffs() const { return c_; }
  // Largest i with c_i != 0 (-1 for the zero form).
  long u_degree() const;
  long v_degree() const;
  bool is_zero() const;
  Int eval(const Int& u, const Int& v) const;
  IntPoly at_v1() const;  // g(u, 1)
  IntPoly at_u1() const;  // g(1, v), as a polynomial in v
  std::string to_string() const;

  friend HomogPoly operator*(const HomogPoly& a, const HomogPoly& b);
  friend HomogPoly operator*(const Int& s, const HomogPoly& a);
  bool operator==(const HomogPoly& o) const { return d_ == o.d_ && c_ == o.c_; }

 private:
  unsigned d_ = 0;
  std::vector<Int> c_{Int(0)};
};

// f(X + a).
IntPoly taylor_shift(const IntPoly& f, const Int& a);

// Pseudo-remainder lc(b)^(deg a - deg b + 1) a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

// Resultant by the subresultant PRS. Throws ArgumentError on a zero input.
Int resultant(const IntPoly& f, const IntPoly& g);
// Same value from the Sylvester determinant (fraction-free Bareiss); slow,
// kept as an independent check.
Int sylvester_resultant(const IntPoly& f, const IntPoly& g);

// Res_u(f, g) (or Res_v) of two forms, as coefficient * w^exponent where w
// is the other variable.
struct HomogResultant {
  Int coefficient;
  unsigned exponent = 0;
};
enum class Var { u, v };
HomogResultant homogeneous_resultant(const HomogPoly& f, const HomogPoly& g, Var eliminate = Var::u);

// k with |n| = p^k, if n is a nonzero signed power of p.
std::optional<unsigned> p_power_exponent(const Int& n, const Int& p);

// True iff both Res_u and Res_v of (g1, g2) are +-p^k (nonzero). For
// coprime (u, v) the gcd of g1(u,v) and g2(u,v) then divides a power of p.
bool resultant_pair_check(const HomogPoly& g1, const HomogPoly& g2, const Int& p);

struct NewtonSegment {
  long x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  Rat slope;
  long length() const { return x1 - x0; }
};

struct NewtonPolygon {
  Int p;
  // (i, ord_p c_i) for the nonzero coefficients.
  std::vector<std::pair<long, long>> points;
  std::vector<std::pair<long, long>> vertices;
  std::vector<NewtonSegment> segments;  // slopes strictly increasing
  std::string to_string() const;
};

NewtonPolygon newton_polygon(const IntPoly& f, const Int& p);

// Largest possible ord_p g(u, v) over coprime (u, v) with p not dividing v,
// read off the Newton polygon of h(X) = g(1 + X, 1):
//   ord_p(lead h) + sum over segments of length * (-slope).
// With a single segment this is deg(g) * (-slope). Every slope must lie
// strictly between -1 and 0, otherwise BoundUnavailableError.
Rat valuation_bound(const HomogPoly& g, const Int& p);

// g == (u - v)^deg(g) coefficientwise mod p.
bool congruent_to_difference_power(const HomogPoly& g, const Int& p);

struct PowerSolution {
  Int u, v;
  unsigned k = 0;
  int sign = 1;  // g(u, v) = sign * p^k
  bool operator==(const PowerSolution&) const = default;
};

// All coprime (u, v), |u|, |v| <= box, with g(u, v) = +-p^k and k <= k_max.
// Sorted by (k, sign, u, v). Stripes of u run on `threads` workers
// (0 = hardware concurrency); the output does not depend on it.
std::vector<PowerSolution> solve_power_of_p(const HomogPoly& g, const Int& p, unsigned k_max, long box,
                                            unsigned threads = 0);

struct CongruenceResult {
  bool applicable = false;  // g == (u - v)^deg mod p
  bool excluded = false;    // every root mod p^(t+1) has p | u and p | v
  // Residue pairs (u, v) mod p^(t+1), not both divisible by p, at which g
  // vanishes mod p^(t+1). Empty when excluded.
  std::vector<std::pair<long, long>> survivors;
};

// Exhaustive check over residues mod p^(threshold+1): does
// g(u, v) == 0 mod p^(threshold+1) force p | gcd(u, v)? If so,
// g(u, v) = +-p^k with gcd(u, v) = 1 has k <= threshold.
CongruenceResult congruence_exclusion(const HomogPoly& g, const Int& p, unsigned threshold);

}  // namespace tfc
