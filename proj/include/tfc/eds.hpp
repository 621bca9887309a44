#pragma once

// Elliptic divisibility sequences attached to a point P on E : Y^2 = X^3 - 432m^2.
//
// With nP = (A_n / B_n^2, C_n / B_n^3) in lowest terms, the corresponding point
// nR on the cubic C is
//
//   U_n / W_n = (36 m B_n^3 + C_n) / (6 A_n B_n),
//   V_n / W_n = (36 m B_n^3 - C_n) / (6 A_n B_n),
//
// and d_n is the gcd cancelled from the second fraction.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tfc/arith.hpp"
#include "tfc/curve.hpp"

namespace tfc {

struct WTerm {
  long n = 0;
  Int a;  // A_n
  Int b;  // B_n > 0
  Int c;  // C_n, same sign as y(nP)
};

struct CTerm {
  long n = 0;
  Int u;  // U_n, carries the sign
  Int v;  // V_n
  Int w;  // W_n > 0
  Int d;  // d_n
};

// Both halves of the n-th term.
struct SequenceTerm {
  WTerm weierstrass;
  CTerm cubic;
};

WTerm weierstrass_term(const CurvePoint& p, long n);
CTerm cubic_term(const CurvePoint& p, long n);

// Conversions used by the term builders; exposed for tests.
WTerm weierstrass_from_point(const CurvePoint& np, long n);
CTerm cubic_from_weierstrass(const WTerm& t, const Int& m);

// Terms 1..n_max built by repeated addition of P. Throws TorsionError if
// some multiple is the identity and SingularMapError if X(nP) = 0.
class Sequence {
 public:
  Sequence(const CurvePoint& p, long n_max);

  const CurvePoint& point() const { return p_; }
  const Int& m() const { return p_.curve().m(); }
  long n_max() const { return static_cast<long>(terms_.size()); }
  // 1-based.
  const SequenceTerm& operator[](long n) const;
  const WTerm& w_term(long n) const { return (*this)[n].weierstrass; }
  const CTerm& c_term(long n) const { return (*this)[n].cubic; }
  const Int& A(long n) const { return w_term(n).a; }
  const Int& B(long n) const { return w_term(n).b; }
  const Int& W(long n) const { return c_term(n).w; }

 private:
  CurvePoint p_;
  std::vector<SequenceTerm> terms_;
};

std::vector<CTerm> w_sequence(const CurvePoint& p, long n_max);

// d_n predicted from A_n and m alone:
//   p > 3, p | A_n : p^ord_p(m);  p <= 3, p | A_n : p^(ord_p(A_n)+1);  else 1.
Int predicted_cancellation(const Int& a_n, const Int& m);
Int predicted_cancellation(const CurvePoint& p, long n);

bool check_strong_divisibility(const Sequence& seq, long r, long n);
bool check_strong_divisibility(const CurvePoint& p, long r, long n);

enum class LawStatus { holds, fails, skipped };

struct LawCheck {
  std::string law;
  LawStatus status = LawStatus::skipped;
  long observed = 0;
  long predicted = 0;
  std::string detail;  // reason when skipped
};

struct ValuationReport {
  long n = 0;
  long k = 0;
  Int p;
  std::vector<LawCheck> checks;
  bool all_hold() const;
  std::size_t applied() const;
};

// Per-prime valuation laws for the pair (n, nk):
//   W_ord      p | W_n:              ord_p(W_nk) = ord_p(W_n) + ord_p(k)
//   A_ord      p > 3, p | A_n, 3∤k:  ord_p(A_nk) = ord_p(A_n) + ord_p(k)
//   B_ord      p | B_n:              ord_p(B_nk) = ord_p(B_n) + ord_p(k)
//   triple     p > 3, p | A_n:       ord_p(B_3n) = ord_p(A_n) - ord_p(m)
//   alter      p > 3, p | A_n:       ord_p(W_n)  = ord_p(A_n) - ord_p(m)
//   small_B    p <= 3, p | W_n, p ∤ A_n B_n:  ord_p(B_np) = 1
// Laws whose indices exceed the sequence, or whose hypotheses fail, are
// skipped with a reason.
ValuationReport check_valuation_laws(const Sequence& seq, long n, long k, const Int& p);
ValuationReport check_valuation_laws(const CurvePoint& pt, long n, long k, const Int& p);

// The same laws quantified over every prime not dividing 6mk at once, using
// gcd stripping so no factorization of the terms is needed. Primes dividing
// 6mk are small and are covered by the per-prime form.
ValuationReport check_valuation_laws_all_large_primes(const Sequence& seq, long n, long k);

struct PrimitiveDivisor {
  bool exists = false;          // certified: primitive_part > 1
  std::optional<Int> smallest;  // least primitive prime, when determinable
  Int primitive_part;           // term with every earlier prime stripped
  bool smallest_indeterminate() const { return exists && !smallest; }
};

// Least prime dividing history.back() that divides no earlier entry.
// history = [T_1, ..., T_n], n >= 2. Earlier primes are removed by gcd
// stripping, so the earlier terms need not be factored.
PrimitiveDivisor primitive_divisor(const std::vector<Int>& history, const FactorBudget& budget = {});
PrimitiveDivisor w_primitive_divisor(const Sequence& seq, long n, const FactorBudget& budget = {});
PrimitiveDivisor a_primitive_divisor(const Sequence& seq, long n, const FactorBudget& budget = {});

struct Classification {
  enum class Kind { unit, prime, prime_power, composite };
  Kind kind = Kind::unit;
  Int prime;              // for prime / prime_power
  unsigned exponent = 0;  // for prime_power
  std::size_t distinct_primes = 0;  // lower bound when !complete
  bool complete = true;
  bool probable = false;
  bool is_prime_power() const { return kind == Kind::prime || kind == Kind::prime_power; }
  std::string to_string() const;
};

// Whether |w| is prime / a prime power / neither. The prime-power verdict is
// always decided; only the distinct prime count may be partial.
Classification classify_term(const Int& w, const FactorBudget& budget = {});

struct CoprimeWitness {
  Int f1;  // part of W_n coprime to B_n (survivor of 6 A_n)
  Int f2;  // part of W_n built from primes of B_n
};

// Two coprime factors > 1 of W_n, or nullopt when B_n = 1 or 6A_n is fully
// absorbed.
std::optional<CoprimeWitness> coprime_factor_witness(const Sequence& seq, long n);
std::optional<CoprimeWitness> coprime_factor_witness(const CurvePoint& p, long n);

}  // namespace tfc
